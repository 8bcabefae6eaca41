#include "commands.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "gbc/flow.hpp"
#include "gbc/inequalities.hpp"
#include "gbc/integrals.hpp"
#include "gbc/rotmass.hpp"
#include "gbc/tensor_kernel.hpp"
#include "pool.hpp"

namespace gbclab {

namespace {

using namespace gbc;

struct CheckRow {
    std::string check;
    int n = 0;
    int k = 0;
    std::string subject;
    Defect d;
    double tolerance = 0.0;
    bool passed = false;
};

using Task = std::function<std::vector<CheckRow>()>;

bool k_selected(const RunConfig& c, int k) { return !c.k || *c.k == k; }

std::vector<CheckRow> run_tasks(const std::vector<Task>& tasks, int jobs)
{
    const auto parts = parallel_map<std::vector<CheckRow>>(tasks.size(), jobs, [&](std::size_t i) { return tasks[i](); });
    std::vector<CheckRow> rows;
    for (const auto& p : parts) rows.insert(rows.end(), p.begin(), p.end());
    return rows;
}

// Kulkarni-Nomizu products of random symmetric forms against a random metric.
RiemannTensor random_curvature(int m, std::mt19937_64& rng)
{
    std::normal_distribution<double> N(0.0, 1.0);
    auto sym = [&] {
        Eigen::MatrixXd a(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = N(rng);
        return a;
    };
    Eigen::MatrixXd q = sym();
    const Eigen::MatrixXd g = q * q.transpose() / m + Eigen::MatrixXd::Identity(m, m);
    Array4 r(m);
    for (int t = 0; t < 3; ++t) {
        const Eigen::MatrixXd h = sym(), l = sym();
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int s = 0; s < m; ++s)
                    for (int u = 0; u < m; ++u)
                        r(i, j, s, u) += 0.5 * (h(i, s) * l(j, u) + h(j, u) * l(i, s) - h(i, u) * l(j, s) - h(j, s) * l(i, u));
    }
    return RiemannTensor(r, MetricTensor(g));
}

double relative_diff(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0}); }

std::string write_checks(const std::vector<CheckRow>& rows)
{
    std::ostringstream os;
    os << "check,n,k,subject,lhs,rhs,defect,relative,equality_case,tolerance,passed\n";
    for (const auto& r : rows) {
        write_defect_fields(os, DefectRow{r.check, r.n, r.k, r.subject, r.d});
        os << ',' << format_double(r.tolerance) << ',' << (r.passed ? "true" : "false") << '\n';
    }
    return os.str();
}

int count_failures(const std::vector<CheckRow>& rows)
{
    int f = 0;
    for (const auto& r : rows) f += !r.passed;
    return f;
}

std::string failure_summary(const std::vector<CheckRow>& rows)
{
    std::ostringstream os;
    os << rows.size() << " rows, " << count_failures(rows) << " failed";
    int listed = 0;
    for (const auto& r : rows)
        if (!r.passed && listed++ < 10) os << "\n  FAILED " << r.check << " n=" << r.n << " k=" << r.k << " " << r.subject;
    return os.str();
}

bool energy_condition(const RotSymMetric& g, int k)
{
    const double lo = std::max(g.rho_min(), g.horizon()) * 1.001 + 1e-3;
    for (int i = 0; i <= 200; ++i) {
        const double rho = lo * std::pow(1000.0, i / 200.0);
        if (tilde_Lk_metric(g, k, rho) < -1e-12) return false;
    }
    return true;
}

}  // namespace

Output verify_identities(const RunConfig& c, int jobs)
{
    std::vector<Task> tasks;
    for (int n = c.n_min; n <= c.n_max; ++n) {
        for (const auto& spec : c.surfaces)
            tasks.emplace_back([&c, &spec, n] {
                const AxisymSurface s = spec.build(n);
                const SurfaceIntegrator I(s, QuadratureRule(c.nodes, n));
                const bool centered = spec.kind == "centered_sphere";
                std::vector<CheckRow> rows;
                for (int k = 0; k <= n - 2; ++k) {
                    if (!k_selected(c, k)) continue;
                    const Defect d = minkowski_residual(I, k);
                    rows.push_back({"minkowski", n, k, s.label(), d, c.tol.minkowski, std::abs(d.relative) < c.tol.minkowski});
                }
                for (Proposition p : {Proposition::Eq2, Proposition::Eq4, Proposition::Eq1Prop1k, Proposition::Eq2Prop1k,
                                      Proposition::Eq2k})
                    for (int k = proposition_k_min(p); k <= proposition_k_max(p, n); ++k) {
                        if (!k_selected(c, k)) continue;
                        const Defect d = proposition_defect(I, k, p);
                        bool ok = d.relative >= -c.tol.proposition;
                        if (centered) ok = ok && std::abs(d.relative) < c.tol.equality;
                        rows.push_back({to_string(p), n, k, s.label(), d, centered ? c.tol.equality : c.tol.proposition, ok});
                    }
                return rows;
            });
        if (n >= 4)
            tasks.emplace_back([&c, n] {
                std::mt19937_64 rng(c.seed * 1000003ULL + static_cast<unsigned long long>(n));
                std::vector<CheckRow> rows;
                const double N = n;
                for (int t = 0; t < c.random_tensors; ++t) {
                    const RiemannTensor R = random_curvature(n, rng);
                    const RiemannTensor Rt = modified_riemann(R);
                    const std::string subject = "random_tensor_" + std::to_string(t);
                    const double scal = scalar_curvature(R);
                    const double L2 = riemann_norm_sq(R) - 4.0 * ricci_norm_sq(R) + scal * scal;
                    auto add = [&](const char* name, int k, double lhs, double rhs) {
                        if (!k_selected(c, k)) return;
                        const Defect d = make_defect(lhs, rhs);
                        rows.push_back({name, n, k, subject, d, c.tol.tensor, relative_diff(lhs, rhs) < c.tol.tensor});
                    };
                    add("tilde_L1", 1, gauss_bonnet_Lk(Rt, 1), scal + N * (N - 1));
                    add("L2_norms", 2, gauss_bonnet_Lk(R, 2), L2);
                    add("tilde_L2", 2, gauss_bonnet_Lk(Rt, 2), L2 + 2 * (N - 2) * (N - 3) * scal + N * (N - 1) * (N - 2) * (N - 3));
                    if (k_selected(c, 2)) {
                        const FourTensor Pt = P_tensor(R, 2, true), P2 = P_tensor(R, 2, false), P1 = P_tensor(R, 1, false);
                        double diff = 0.0, size = 1.0;
                        const auto& a = Pt.values().data();
                        for (std::size_t i = 0; i < a.size(); ++i) {
                            const double rhs = P2.values().data()[i] + (N - 2) * (N - 3) * P1.values().data()[i];
                            diff = std::max(diff, std::abs(a[i] - rhs));
                            size = std::max(size, std::abs(rhs));
                        }
                        const Defect d = make_defect(diff / size, 0.0);
                        rows.push_back({"tilde_P2", n, 2, subject, d, c.tol.tensor, diff / size < c.tol.tensor});
                    }
                }
                return rows;
            });
        for (const auto& spec : c.surfaces)
            tasks.emplace_back([&c, &spec, n] {
                const AxisymSurface s = spec.build(n);
                const FlowState st = FlowState::from_surface(s, 64);
                const auto coarse = evolution_identity_residuals(st, 1e-2, c.nodes);
                const auto fine = evolution_identity_residuals(st, 5e-3, c.nodes);
                double order = std::numeric_limits<double>::infinity();
                for (const auto& [key, r] : coarse) order = std::min(order, std::log2(r / fine.at(key)));
                const Defect d = make_defect(order, c.tol.order);
                return std::vector<CheckRow>{{"evolution_order", n, 0, s.label(), d, c.tol.order, order >= c.tol.order}};
            });
    }
    for (const auto& spec : c.metrics) {
        if (spec.n < c.n_min || spec.n > c.n_max) continue;
        tasks.emplace_back([&c, &spec] {
            const RotSymMetric g = spec.build();
            std::vector<CheckRow> rows;
            const double rho = 3.0 * std::max(1.0, g.horizon());
            for (int k = 1; 2 * k < g.n(); ++k) {
                if (!k_selected(c, k)) continue;
                const double r1 = divergence_residual(g, k, rho, 2e-3), r2 = divergence_residual(g, k, rho, 1e-3);
                // a residual already at roundoff has no order to measure
                const bool flat = r2 < 1e-12;
                const double order = flat ? std::numeric_limits<double>::infinity() : std::log2(r1 / r2);
                rows.push_back({"divergence_order", g.n(), k, g.describe(), make_defect(r2, 0.0), c.tol.order,
                                flat || order >= c.tol.order});
                if (2 * k < g.n() && g.kind() != MetricKind::Hyperbolic) {
                    const double a = divergence_identity_residual(g, k, rho, 2e-3);
                    const double b = divergence_identity_residual(g, k, rho, 1e-3);
                    // a constant flux leaves only differenced roundoff, eps * flux / h
                    const bool tiny = a < 1e-9 && b < 1e-9;
                    rows.push_back({"flux_divergence_order", g.n(), k, g.describe(), make_defect(b, 0.0), c.tol.order,
                                    tiny || std::log2(a / b) >= c.tol.order});
                }
            }
            return rows;
        });
    }
    const auto rows = run_tasks(tasks, jobs);
    return {write_checks(rows), "identities.csv", count_failures(rows), failure_summary(rows)};
}

Output verify_inequalities(const RunConfig& c, int jobs)
{
    using Rows = std::vector<InequalityRow>;
    std::vector<std::function<Rows()>> tasks;
    for (int n = c.n_min; n <= c.n_max; ++n)
        for (const auto& spec : c.surfaces)
            tasks.emplace_back([&c, &spec, n] {
                const AxisymSurface s = spec.build(n);
                const SurfaceIntegrator I(s, QuadratureRule(c.nodes, n));
                Rows rows;
                auto add = [&](InequalityReport r) {
                    if (k_selected(c, r.k)) rows.push_back({n, s.label(), std::move(r)});
                };
                for (int k = 1; k <= n - 1; ++k) add(af_unweighted(I, k));
                for (int k = 0; 2 * k + 1 <= n - 1; ++k) add(af_weighted_odd(I, k));
                add(weighted_dlg(I));
                add(minkowski_bhw(I));
                for (int k = 1; k <= n - 2; ++k) add(crucial_E(I, k));
                for (int k = 0; 2 * k <= n - 1; ++k) add(support_weighted(I, k));
                for (int k = 0; k <= n - 1; k += 2) add(even_conjecture(I, k));
                for (int k = 1; k <= n - 1; ++k) add(gallego_solanes(I, k));
                return rows;
            });
    for (const auto& spec : c.metrics) {
        if (spec.kind == "hyperbolic" || spec.n < c.n_min || spec.n > c.n_max) continue;
        tasks.emplace_back([&c, &spec] {
            const RotSymMetric g = spec.build();
            const int k = spec.k;
            if (!k_selected(c, k)) return Rows{};
            const double m = mass_limit(g, k, c.radii).limit;
            return Rows{{g.n(), g.describe(), penrose_check(m, horizon_area(g), g.n(), k, energy_condition(g, k))}};
        });
    }
    const auto parts = parallel_map<Rows>(tasks.size(), jobs, [&](std::size_t i) { return tasks[i](); });
    std::ostringstream os;
    write_inequality_header(os);
    int failures = 0, count = 0;
    std::ostringstream failed;
    for (const auto& p : parts)
        for (const auto& r : p) {
            write_inequality_row(os, r);
            ++count;
            if (r.report.asserted && r.report.d.relative < -c.tol.inequality) {
                if (failures++ < 10) failed << "\n  FAILED " << r.report.name << " n=" << r.n << " k=" << r.report.k << " " << r.surface;
            }
        }
    return {os.str(), "inequalities.csv", failures, std::to_string(count) + " rows, " + std::to_string(failures) + " failed" + failed.str()};
}

Output mass(const RunConfig& c, int jobs)
{
    struct Result {
        nlohmann::json report;
        bool ok = true;
        std::string message;
    };
    const auto results = parallel_map<Result>(c.metrics.size(), jobs, [&](std::size_t i) {
        const MetricSpec& spec = c.metrics[i];
        const RotSymMetric g = spec.build();
        const int k = c.k.value_or(spec.k);
        if (k < 1 || 2 * k >= g.n()) throw ConfigError("mass: need 1 <= k and 2k < n");
        Result r;
        nlohmann::json& j = r.report;
        j["n"] = g.n();
        j["k"] = k;
        j["metric"] = g.describe();
        j["radii"] = c.radii;
        MassEstimate e;
        try {
            e = mass_limit(g, k, c.radii);
        } catch (const std::runtime_error& ex) {
            r.ok = false;
            r.message = g.describe() + ": " + ex.what();
            j["error_message"] = ex.what();
            return r;
        }
        j["flux"] = e.flux;
        j["limit"] = e.limit;
        j["error"] = e.error;
        j["order"] = std::isfinite(e.order) ? nlohmann::json(e.order) : nlohmann::json("roundoff");
        j["decay_window"] = {e.decay_window.first, e.decay_window.second};
        j["energy_condition"] = energy_condition(g, k);
        if (g.horizon() > 0.0) {
            const double rhs = penrose_rhs(horizon_area(g), g.n(), k);
            const bool saturated = std::abs(e.limit - rhs) <= c.tol.saturation * std::max(1.0, std::abs(rhs));
            j["horizon_radius"] = g.horizon();
            j["penrose_rhs"] = rhs;
            j["saturated"] = saturated;
            const GraphMassParts parts = mass_via_graph_decomposition(g, k);
            j["graph"] = {{"horizon_term", parts.horizon_term}, {"bulk_term", parts.bulk_term}, {"total", parts.total}};
            if (g.kind() == MetricKind::AdsSchwarzschild && !saturated) {
                r.ok = false;
                r.message = g.describe() + ": penrose bound not saturated";
            }
        } else {
            j["penrose_rhs"] = nullptr;
            j["saturated"] = false;
        }
        return r;
    });
    nlohmann::json doc;
    int failures = 0;
    std::string summary;
    for (const auto& r : results) {
        if (!r.ok) {
            ++failures;
            summary += "\n  FAILED " + r.message;
        }
    }
    doc = results.size() == 1 ? results.front().report : nlohmann::json::array();
    if (results.size() != 1)
        for (const auto& r : results) doc.push_back(r.report);
    return {doc.dump(2) + "\n", "mass.json", failures,
            std::to_string(results.size()) + " metrics, " + std::to_string(failures) + " failed" + summary};
}

Output flow(const RunConfig& c)
{
    if (c.n_min != c.n_max) throw ConfigError("flow: give a single dimension n");
    const int n = c.n_min;
    const AxisymSurface s = c.flow_surface.value_or(SurfaceSpec{"centered_sphere", 1.0}).build(n);
    FlowPolicy policy;
    policy.modes = c.flow.modes;
    policy.nodes = c.nodes;
    policy.dt = c.flow.dt;
    policy.cap_factor = c.flow.cap_factor;
    policy.stop_radius = c.flow.stop_radius;
    const int k = c.k.value_or(c.flow.k);
    FlowTrace tr;
    try {
        tr = run(s, k, c.flow.t_max, policy);
    } catch (const std::logic_error& e) {
        throw ConfigError(e.what());
    }
    std::ostringstream os;
    write_flow_csv(os, tr);
    int failures = 0;
    for (std::size_t i = 0; i < tr.rows.size(); ++i) {
        const FlowRow& r = tr.rows[i];
        if (!r.horo) ++failures;
        if (i > 0 && r.E > tr.rows[i - 1].E + 1e-8 * r.E_scale) ++failures;
    }
    std::ostringstream sum;
    sum << tr.rows.size() << " rows, stop: " << tr.stop_reason << ", extinction estimate " << format_double(tr.extinction_estimate)
        << ", " << failures << " failed";
    return {os.str(), "flow.csv", failures, sum.str()};
}

}  // namespace gbclab
