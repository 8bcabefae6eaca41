#include "gbc/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gbc/hyperbolic.hpp"
#include "gbc/symfunc.hpp"

namespace gbc {

const char* to_string(Proposition p)
{
    switch (p) {
    case Proposition::Eq2: return "eq2";
    case Proposition::Eq4: return "eq4";
    case Proposition::Eq1Prop1k: return "eq1_prop1k";
    case Proposition::Eq2Prop1k: return "eq2_prop1k";
    case Proposition::Eq2k: return "eq2k";
    }
    return "?";
}

SurfaceIntegrator::SurfaceIntegrator(const AxisymSurface& s, const QuadratureRule& rule) : n_(s.n()), w_(rule.weights())
{
    if (rule.n() != s.n()) throw std::invalid_argument("SurfaceIntegrator: rule built for another dimension");
    samples_.reserve(rule.nodes().size());
    p_.reserve(rule.nodes().size());
    const int m = n_ - 1;
    for (double t : rule.nodes()) {
        samples_.push_back(s.sample(t));
        const auto e = elementary_symmetric_all(s.spectrum(samples_.back()));
        std::vector<double> p(static_cast<std::size_t>(m) + 1);
        for (int k = 0; k <= m; ++k) p[k] = e[k] / binomial(m, k);
        p_.push_back(std::move(p));
    }
}

double SurfaceIntegrator::integrate(const std::function<double(const SurfaceSample&)>& f) const
{
    double s = 0.0;
    for (std::size_t i = 0; i < samples_.size(); ++i) s += w_[i] * samples_[i].area_density * f(samples_[i]);
    return s;
}

double SurfaceIntegrator::integrate(const std::function<double(const SurfaceSample&, const std::vector<double>&)>& f) const
{
    double s = 0.0;
    for (std::size_t i = 0; i < samples_.size(); ++i) s += w_[i] * samples_[i].area_density * f(samples_[i], p_[i]);
    return s;
}

double SurfaceIntegrator::area() const
{
    return integrate([](const SurfaceSample&) { return 1.0; });
}

double SurfaceIntegrator::sigma_integral(int k) const
{
    if (k < 0 || k > n_ - 1) throw std::invalid_argument("sigma_integral: k out of range");
    const double c = binomial(n_ - 1, k);
    return integrate([k, c](const SurfaceSample&, const std::vector<double>& p) { return c * p[k]; });
}

double weight_value(Weight w, const SurfaceSample& s)
{
    switch (w) {
    case Weight::One: return 1.0;
    case Weight::V: return s.V;
    case Weight::U: return s.u;
    case Weight::V2: return s.V * s.V;
    case Weight::UV: return s.u * s.V;
    case Weight::U2: return s.u * s.u;
    case Weight::InvV: return 1.0 / s.V;
    case Weight::UOverV: return s.u / s.V;
    }
    return 0.0;
}

double SurfaceIntegrator::weighted(int k, Weight w) const
{
    if (k < 0 || k > n_ - 1) throw std::invalid_argument("weighted: k out of range");
    return integrate([k, w](const SurfaceSample& s, const std::vector<double>& p) { return weight_value(w, s) * p[k]; });
}

double SurfaceIntegrator::min_curvature() const
{
    double k = INFINITY;
    for (const auto& s : samples_) k = std::min({k, s.kappa_polar, s.kappa_azimuthal});
    return k;
}

double surface_integral(const AxisymSurface& s, const std::function<double(const SurfaceSample&)>& f,
                        const QuadratureRule& rule)
{
    return SurfaceIntegrator(s, rule).integrate(f);
}

double curvature_integral(const AxisymSurface& s, int k, const QuadratureRule& rule)
{
    return SurfaceIntegrator(s, rule).sigma_integral(k);
}

double weighted_integral(const AxisymSurface& s, int k, Weight w, const QuadratureRule& rule)
{
    return SurfaceIntegrator(s, rule).weighted(k, w);
}

Defect minkowski_residual(const SurfaceIntegrator& I, int k)
{
    if (k < 0 || k > I.n() - 2) throw std::invalid_argument("minkowski_residual: need 0 <= k <= n-2");
    return make_defect(I.weighted(k + 1, Weight::U), I.weighted(k, Weight::V));
}

Defect minkowski_residual(const AxisymSurface& s, int k, const QuadratureRule& rule)
{
    return minkowski_residual(SurfaceIntegrator(s, rule), k);
}

int proposition_k_min(Proposition which) { return which == Proposition::Eq2k ? 0 : 1; }

int proposition_k_max(Proposition which, int n)
{
    switch (which) {
    case Proposition::Eq2:
    case Proposition::Eq4: return n - 1;
    case Proposition::Eq1Prop1k:
    case Proposition::Eq2Prop1k:
    case Proposition::Eq2k: return n - 2;
    }
    return -1;
}

Defect proposition_defect(const SurfaceIntegrator& I, int k, Proposition which)
{
    if (k < proposition_k_min(which) || k > proposition_k_max(which, I.n()))
        throw std::invalid_argument(std::string("proposition_defect: k out of range for ") + to_string(which));
    if (!(I.min_curvature() > 0.0)) throw std::domain_error("proposition_defect: surface not convex");
    switch (which) {
    case Proposition::Eq2: return make_defect(I.weighted(k, Weight::UV), I.weighted(k - 1, Weight::V2));
    case Proposition::Eq4: return make_defect(I.weighted(k, Weight::U2), I.weighted(k - 1, Weight::UV));
    case Proposition::Eq1Prop1k:
        return make_defect(I.weighted(k + 1, Weight::V2), I.weighted(k - 1, Weight::V2) + I.weighted(k + 1, Weight::One));
    case Proposition::Eq2Prop1k:
        return make_defect(I.weighted(k + 1, Weight::UV), I.weighted(k - 1, Weight::UV) + I.weighted(k + 1, Weight::UOverV));
    case Proposition::Eq2k: return make_defect(I.weighted(k, Weight::One), I.weighted(k + 1, Weight::UOverV));
    }
    throw std::invalid_argument("proposition_defect: unknown proposition");
}

Defect proposition_defect(const AxisymSurface& s, int k, Proposition which, const QuadratureRule& rule)
{
    return proposition_defect(SurfaceIntegrator(s, rule), k, which);
}

double E_functional(const SurfaceIntegrator& I, int k)
{
    if (k < 1 || k >= I.n() - 1) throw std::invalid_argument("E_functional: need 1 <= k < n-1");
    return I.integrate([k](const SurfaceSample& s, const std::vector<double>& p) {
        return s.V * p[k + 1] - s.V * p[k - 1] - p[k + 1] / s.V;
    });
}

double E_functional(const AxisymSurface& s, int k, const QuadratureRule& rule)
{
    return E_functional(SurfaceIntegrator(s, rule), k);
}

double E_scale(const SurfaceIntegrator& I, int k)
{
    if (k < 1 || k >= I.n() - 1) throw std::invalid_argument("E_scale: need 1 <= k < n-1");
    return I.integrate([k](const SurfaceSample& s, const std::vector<double>& p) {
        return std::abs(s.V * p[k + 1]) + std::abs(s.V * p[k - 1]) + std::abs(p[k + 1] / s.V);
    });
}

double enclosed_volume(const AxisymSurface& s, const QuadratureRule& rule)
{
    const int n = s.n();
    static const GaussRule inner = gauss_legendre(64);
    double total = 0.0;
    for (std::size_t i = 0; i < rule.nodes().size(); ++i) {
        const double r = s.jet(rule.nodes()[i]).r;
        double radial = 0.0;
        for (std::size_t j = 0; j < inner.x.size(); ++j) {
            const double t = 0.5 * r * (inner.x[j] + 1.0);
            const double sh = std::sinh(t);
            double pw = 1.0;
            for (int e = 1; e < n; ++e) pw *= sh;
            radial += inner.w[j] * pw;
        }
        total += rule.weights()[i] * 0.5 * r * radial;
    }
    return sphere_volume_constant(n - 1) * total;
}

std::vector<double> quermassintegrals(const SurfaceIntegrator& I, double volume)
{
    const int n = I.n();
    std::vector<double> W(static_cast<std::size_t>(n) + 1, 0.0);
    W[0] = volume;
    W[1] = I.area() / n;
    for (int k = 1; k <= n - 2; ++k)
        W[k + 1] = I.weighted(k, Weight::One) / n - static_cast<double>(k) / (n - k + 1) * W[k - 1];
    W[n] = sphere_volume_constant(n) / n;
    return W;
}

double quermassintegral(const AxisymSurface& s, int k, const QuadratureRule& rule)
{
    if (k < 0 || k > s.n()) throw std::invalid_argument("quermassintegral: need 0 <= k <= n");
    const SurfaceIntegrator I(s, rule);
    if (k == s.n()) return sphere_volume_constant(s.n()) / s.n();
    return quermassintegrals(I, enclosed_volume(s, rule))[k];
}

}  // namespace gbc
