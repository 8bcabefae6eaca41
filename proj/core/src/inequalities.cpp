#include "gbc/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gbc/hyperbolic.hpp"
#include "gbc/rotmass.hpp"
#include "gbc/symfunc.hpp"

namespace gbc {

namespace {

constexpr double kFlagTol = 1e-9;

double norm_area(const SurfaceIntegrator& I) { return I.area() / sphere_volume_constant(I.n()); }

InequalityReport make_report(std::string name, int k, double lhs, double rhs, HypothesisFlags f, bool asserted)
{
    InequalityReport r;
    r.name = std::move(name);
    r.k = k;
    r.d = make_defect(lhs, rhs);
    r.flags = f;
    r.asserted = asserted;
    return r;
}

void check_k(bool ok, const char* who)
{
    if (!ok) throw std::invalid_argument(std::string(who) + ": k out of range");
}

}  // namespace

HypothesisFlags surface_flags(const SurfaceIntegrator& I)
{
    HypothesisFlags f;
    const double kmin = I.min_curvature();
    f.horospherical = kmin >= 1.0 - kFlagTol;
    f.convex = kmin >= -kFlagTol;
    double umin = INFINITY;
    for (const auto& s : I.samples()) umin = std::min(umin, s.u);
    f.star_shaped = umin > 0.0;
    return f;
}

std::string to_string(const HypothesisFlags& f)
{
    std::string s;
    auto add = [&s](const char* t) {
        if (!s.empty()) s += ';';
        s += t;
    };
    if (f.horospherical) add("horospherical");
    if (f.convex) add("convex");
    if (f.star_shaped) add("star_shaped");
    if (f.energy_condition) add("energy_condition");
    return s.empty() ? "none" : s;
}

InequalityReport af_unweighted(const SurfaceIntegrator& I, int k)
{
    const int n = I.n();
    check_k(k >= 1 && k <= n - 1, "af_unweighted");
    const double s = norm_area(I);
    const double rhs = binomial(n - 1, k) * sphere_volume_constant(n) *
                       std::pow(std::pow(s, 2.0 / k) + std::pow(s, (2.0 / k) * (n - k - 1) / (n - 1)), k / 2.0);
    const HypothesisFlags f = surface_flags(I);
    return make_report("af_unweighted", k, I.sigma_integral(k), rhs, f, f.horospherical);
}

InequalityReport af_weighted_odd(const SurfaceIntegrator& I, int k)
{
    const int n = I.n();
    check_k(k >= 0 && 2 * k + 1 <= n - 1, "af_weighted_odd");
    const double s = norm_area(I);
    const double e = (k + 1.0) * (n - 1);
    const double rhs = sphere_volume_constant(n) * std::pow(std::pow(s, n / e) + std::pow(s, (n - 2.0 * k - 2) / e), k + 1);
    const HypothesisFlags f = surface_flags(I);
    return make_report("af_weighted_odd", k, I.weighted(2 * k + 1, Weight::V), rhs, f, f.horospherical);
}

InequalityReport weighted_dlg(const SurfaceIntegrator& I)
{
    const int n = I.n();
    const double s = norm_area(I);
    const double rhs = (n - 1) * sphere_volume_constant(n) * (std::pow(s, (n - 2.0) / (n - 1)) + std::pow(s, n / (n - 1.0)));
    const HypothesisFlags f = surface_flags(I);
    return make_report("weighted_dlg", 1, (n - 1) * I.weighted(1, Weight::V), rhs, f, f.star_shaped && f.convex);
}

InequalityReport minkowski_bhw(const SurfaceIntegrator& I)
{
    const int n = I.n();
    const double omega = sphere_volume_constant(n);
    const double lhs = I.integrate([n](const SurfaceSample& q, const std::vector<double>& p) {
        return q.V * (n - 1) * p[1] - (n - 1) * q.u;
    });
    const double rhs = (n - 1) * std::pow(omega, 1.0 / (n - 1)) * std::pow(I.area(), (n - 2.0) / (n - 1));
    const HypothesisFlags f = surface_flags(I);
    return make_report("minkowski_bhw", 1, lhs, rhs, f, f.star_shaped && f.convex);
}

InequalityReport crucial_E(const SurfaceIntegrator& I, int k)
{
    const int n = I.n();
    check_k(k >= 1 && k <= n - 2, "crucial_E");
    const double lhs = I.weighted(k + 1, Weight::V);
    const double rhs = I.weighted(k - 1, Weight::V) + I.weighted(k + 1, Weight::InvV);
    const HypothesisFlags f = surface_flags(I);
    return make_report("crucial_E", k, lhs, rhs, f, f.horospherical);
}

InequalityReport support_weighted(const SurfaceIntegrator& I, int k)
{
    const int n = I.n();
    check_k(k >= 0 && 2 * k <= n - 1, "support_weighted");
    const double omega = sphere_volume_constant(n);
    const double w = I.weighted(0, Weight::U) / omega;
    const double rhs = binomial(n - 1, 2 * k) * omega *
                       std::pow(std::pow(w, 2.0 / (2 * k + 1)) + std::pow(w, 2.0 * (n - 2 * k - 1) / ((2 * k + 1.0) * n)),
                                (2 * k + 1) / 2.0);
    const HypothesisFlags f = surface_flags(I);
    return make_report("support_weighted", k, binomial(n - 1, 2 * k) * I.weighted(2 * k, Weight::V), rhs, f, f.horospherical);
}

InequalityReport even_conjecture(const SurfaceIntegrator& I, int k)
{
    const int n = I.n();
    check_k(k >= 0 && k <= n - 1 && k % 2 == 0, "even_conjecture");
    const double s = norm_area(I);
    const double e = (k + 1.0) * (n - 1);
    const double rhs = binomial(n - 1, k) * sphere_volume_constant(n) *
                       std::pow(std::pow(s, 2.0 * n / e) + std::pow(s, 2.0 * (n - k - 1) / e), (k + 1) / 2.0);
    return make_report("even_conjecture", k, binomial(n - 1, k) * I.weighted(k, Weight::V), rhs, surface_flags(I), false);
}

InequalityReport gallego_solanes(const SurfaceIntegrator& I, int k)
{
    const int n = I.n();
    check_k(k >= 1 && k <= n - 1, "gallego_solanes");
    return make_report("gallego_solanes", k, I.sigma_integral(k), binomial(n - 1, k) * I.area(), surface_flags(I), false);
}

InequalityReport penrose_check(double mass, double horizon_area, int n, int k, bool energy_condition_ok)
{
    if (!(horizon_area > 0.0)) throw std::invalid_argument("penrose_check: horizon area must be positive");
    HypothesisFlags f;
    f.energy_condition = energy_condition_ok;
    return make_report("penrose", k, mass, penrose_rhs(horizon_area, n, k), f, energy_condition_ok);
}

void write_inequality_header(std::ostream& os)
{
    os << "inequality,n,k,surface,lhs,rhs,defect,relative,equality_case,hypothesis_flags,asserted\n";
}

void write_inequality_row(std::ostream& os, const InequalityRow& row)
{
    write_defect_fields(os, DefectRow{row.report.name, row.n, row.report.k, row.surface, row.report.d});
    os << ',' << to_string(row.report.flags) << ',' << (row.report.asserted ? "true" : "false") << '\n';
}

}  // namespace gbc
