#include "gbc/flow.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gbc/symfunc.hpp"

namespace gbc {

namespace {

// Cosine transform helper on the midpoint grid theta_j = pi (j + 1/2) / M.
struct Grid {
    int M;
    int modes;
    std::vector<double> cosv;  // M x modes
    std::vector<double> msin;  // M x modes, m sin(m theta)

    Grid(int M_, int modes_) : M(M_), modes(modes_), cosv(static_cast<std::size_t>(M_ * modes_)), msin(cosv.size())
    {
        for (int j = 0; j < M; ++j) {
            const double t = std::numbers::pi * (j + 0.5) / M;
            for (int m = 0; m < modes; ++m) {
                cosv[static_cast<std::size_t>(j * modes + m)] = std::cos(m * t);
                msin[static_cast<std::size_t>(j * modes + m)] = m * std::sin(m * t);
            }
        }
    }

    void eval(const std::vector<double>& a, std::vector<double>& r, std::vector<double>& r1) const
    {
        r.assign(static_cast<std::size_t>(M), 0.0);
        r1.assign(static_cast<std::size_t>(M), 0.0);
        for (int j = 0; j < M; ++j) {
            double s = 0.0, d = 0.0;
            const double* c = &cosv[static_cast<std::size_t>(j * modes)];
            const double* ms = &msin[static_cast<std::size_t>(j * modes)];
            for (int m = 0; m < modes; ++m) {
                s += a[m] * c[m];
                d -= a[m] * ms[m];
            }
            r[j] = s;
            r1[j] = d;
        }
    }

    std::vector<double> project(const std::vector<double>& f) const
    {
        std::vector<double> a(static_cast<std::size_t>(modes), 0.0);
        for (int j = 0; j < M; ++j) {
            const double* c = &cosv[static_cast<std::size_t>(j * modes)];
            for (int m = 0; m < modes; ++m) a[m] += f[j] * c[m];
        }
        for (int m = 0; m < modes; ++m) a[m] *= (m == 0 ? 1.0 : 2.0) / M;
        return a;
    }
};

const Grid& grid_for(int modes, int M)
{
    thread_local std::vector<std::pair<std::pair<int, int>, Grid>> cache;
    for (const auto& e : cache)
        if (e.first.first == modes && e.first.second == M) return e.second;
    cache.emplace_back(std::make_pair(modes, M), Grid(M, modes));
    return cache.back().second;
}

// 3/2-rule grid for the nonlinear speed
int dealiased_size(int modes) { return (3 * modes + 1) / 2; }

std::vector<double> rhs(const std::vector<double>& a)
{
    const int modes = static_cast<int>(a.size());
    const Grid& G = grid_for(modes, dealiased_size(modes));
    std::vector<double> r, r1;
    G.eval(a, r, r1);
    std::vector<double> f(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) {
        if (!(r[j] > 0.0)) throw FlowError("flow extinct within step");
        const double sh = std::sinh(r[j]);
        const double W = std::sqrt(sh * sh + r1[j] * r1[j]);
        // normal speed F = -V converted to the radial graph speed F W / sinh r
        f[j] = -std::cosh(r[j]) * W / sh;
    }
    return G.project(f);
}

double min_on_grid(const std::vector<double>& a, double* rmax = nullptr)
{
    const int modes = static_cast<int>(a.size());
    const Grid& G = grid_for(modes, 2 * modes);
    std::vector<double> r, r1;
    G.eval(a, r, r1);
    if (rmax) *rmax = *std::max_element(r.begin(), r.end());
    return *std::min_element(r.begin(), r.end());
}

}  // namespace

FlowState::FlowState(int n, double t, std::vector<double> coeffs) : n_(n), t_(t), a_(std::move(coeffs))
{
    if (n_ < 3) throw std::invalid_argument("FlowState: n < 3");
    if (a_.size() < 1) throw std::invalid_argument("FlowState: no coefficients");
}

FlowState FlowState::from_surface(const AxisymSurface& s, int modes)
{
    if (modes < 1) throw std::invalid_argument("FlowState: modes < 1");
    const Grid& G = grid_for(modes, 4 * modes);
    std::vector<double> f(static_cast<std::size_t>(G.M));
    for (int j = 0; j < G.M; ++j) f[j] = s.jet(std::numbers::pi * (j + 0.5) / G.M).r;
    FlowState st(s.n(), 0.0, G.project(f));
    return st;
}

AxisymSurface FlowState::surface() const { return cosine_surface(n_, a_, "flow_state"); }

double FlowState::tail_ratio() const
{
    const int modes = static_cast<int>(a_.size());
    const int start = std::max(1, modes - std::max(1, modes / 8));
    double tail = 0.0;
    for (int m = start; m < modes; ++m) tail = std::max(tail, std::abs(a_[m]));
    return tail / std::abs(a_[0]);
}

FlowState step(const FlowState& s, double dt, double tail_tol)
{
    const auto& a = s.coeffs();
    const std::size_t M = a.size();
    auto axpy = [&](const std::vector<double>& x, double h, const std::vector<double>& k) {
        std::vector<double> y(M);
        for (std::size_t i = 0; i < M; ++i) y[i] = x[i] + h * k[i];
        return y;
    };
    const auto k1 = rhs(a);
    const auto k2 = rhs(axpy(a, 0.5 * dt, k1));
    const auto k3 = rhs(axpy(a, 0.5 * dt, k2));
    const auto k4 = rhs(axpy(a, dt, k3));
    std::vector<double> out(M);
    for (std::size_t i = 0; i < M; ++i) out[i] = a[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    if (!(min_on_grid(out) > 0.0)) throw FlowError("flow extinct within step");
    FlowState next(s.n(), s.t() + dt, std::move(out));
    if (M > 8 && next.tail_ratio() > tail_tol) throw FlowError("resolution exhausted");
    return next;
}

double dt_cap(const FlowState& s, double cap_factor)
{
    double rmax = 0.0;
    const double rmin = min_on_grid(s.coeffs(), &rmax);
    const double modes = static_cast<double>(s.coeffs().size());
    return cap_factor * (std::sinh(rmin) / std::cosh(rmax)) / (modes * modes);
}

std::map<std::string, double> evolution_identity_residuals(const FlowState& s, double dt, int nodes)
{
    const int n = s.n();
    const QuadratureRule rule(nodes, n);
    const FlowState sp = step(s, dt, INFINITY), sm = step(s, -dt, INFINITY);
    const AxisymSurface S0 = s.surface(), Sp = sp.surface(), Sm = sm.surface();
    const SurfaceIntegrator I0(S0, rule), Ip(Sp, rule), Im(Sm, rule);
    auto fd = [&](auto&& Q) { return (Q(Ip) - Q(Im)) / (2.0 * dt); };

    std::map<std::string, double> res;
    {
        const double lhs = fd([](const SurfaceIntegrator& I) { return I.area(); });
        const double rhs = -(n - 1) * I0.weighted(1, Weight::V);
        res["area"] = std::abs(lhs - rhs);
    }
    {
        double worst = 0.0;
        for (double th : {0.0, std::numbers::pi}) {
            const double lhs = (std::cosh(Sp.jet(th).r) - std::cosh(Sm.jet(th).r)) / (2.0 * dt);
            const SurfaceSample p = S0.sample(th);
            worst = std::max(worst, std::abs(lhs + p.u * p.V));
        }
        res["V_pole"] = worst;
    }
    for (int k = 0; k <= n - 2; ++k) {
        const double lhs = fd([k](const SurfaceIntegrator& I) { return I.weighted(k, Weight::V); });
        const double rhs = -I0.integrate([k, n](const SurfaceSample& q, const std::vector<double>& p) {
            return ((k + 1) * q.u * p[k] + (n - k - 1) * q.V * p[k + 1]) * q.V;
        });
        res["Vp_k" + std::to_string(k)] = std::abs(lhs - rhs);
    }
    for (int l = 0; l <= 2; ++l)
        for (int k = 0; k <= n - 2; ++k) {
            const double lhs = fd([k, l](const SurfaceIntegrator& I) {
                return I.integrate([k, l](const SurfaceSample& q, const std::vector<double>& p) {
                    return p[k] / std::pow(q.V, l);
                });
            });
            const double rhs = I0.integrate([k, l, n](const SurfaceSample& q, const std::vector<double>& p) {
                return ((l - k) * q.u * p[k] - (n - k - 1) * q.V * p[k + 1]) / std::pow(q.V, l);
            });
            res["pV_l" + std::to_string(l) + "_k" + std::to_string(k)] = std::abs(lhs - rhs);
        }
    return res;
}

EDerivativeTerms dE_dt_analytic(const SurfaceIntegrator& I, int k)
{
    const int n = I.n();
    if (k < 1 || k >= n - 1) throw std::invalid_argument("dE_dt_analytic: need 1 <= k < n-1");
    auto pk = [n](const std::vector<double>& p, int j) { return j <= n - 1 ? p[j] : 0.0; };
    EDerivativeTerms t{};
    t.group1 = I.integrate([&](const SurfaceSample& q, const std::vector<double>& p) {
        return q.V * q.V * pk(p, k + 2) - q.V * q.V * p[k] - pk(p, k + 2);
    });
    t.group2 = I.integrate([&](const SurfaceSample& q, const std::vector<double>& p) {
        return q.u * q.V * p[k + 1] - q.V * q.V * p[k];
    });
    t.group3 = I.integrate([&](const SurfaceSample& q, const std::vector<double>& p) {
        return q.u * q.V * p[k + 1] - q.u * q.V * p[k - 1] - q.u * p[k + 1] / q.V;
    });
    t.total = -(n - k - 2) * t.group1 - 2.0 * t.group2 - k * t.group3;
    return t;
}

Defect dE_dt_check(const FlowState& s, int k, double dt, int nodes)
{
    const QuadratureRule rule(nodes, s.n());
    const AxisymSurface S0 = s.surface();
    const SurfaceIntegrator I0(S0, rule);
    if (!(I0.min_curvature() >= 1.0 - 1e-6)) throw std::domain_error("dE_dt_check: surface not horospherically convex");
    const FlowState sp = step(s, dt, INFINITY), sm = step(s, -dt, INFINITY);
    const double Ep = E_functional(SurfaceIntegrator(sp.surface(), rule), k);
    const double Em = E_functional(SurfaceIntegrator(sm.surface(), rule), k);
    return make_defect((Ep - Em) / (2.0 * dt), dE_dt_analytic(I0, k).total);
}

FlowTrace run(const AxisymSurface& initial, int k, double T_max, const FlowPolicy& policy)
{
    const int n = initial.n();
    if (k < 1 || k >= n - 1) throw std::invalid_argument("flow run: need 1 <= k < n-1");
    const QuadratureRule rule(policy.nodes, n);
    if (!horospherical_convex(initial, 1e-9, rule)) throw std::domain_error("flow run: initial surface not horospherically convex");

    FlowTrace trace;
    trace.n = n;
    trace.k = k;
    FlowState state = FlowState::from_surface(initial, policy.modes);
    if (state.tail_ratio() > policy.tail_tol) throw FlowError("resolution exhausted");

    auto record = [&](const FlowState& s) {
        const AxisymSurface S = s.surface();
        const SurfaceIntegrator I(S, rule);
        FlowRow row{};
        row.t = s.t();
        row.E = E_functional(I, k);
        row.E_scale = E_scale(I, k);
        row.area = I.area();
        row.volume = enclosed_volume(S, rule);
        row.r_min = min_on_grid(s.coeffs(), &row.r_max);
        row.kappa_min = I.min_curvature();
        row.horo = row.kappa_min >= 1.0 - 1e-6;
        row.dEdt_analytic = dE_dt_analytic(I, k).total;
        row.dEdt_fd = 0.0;
        trace.rows.push_back(row);
    };
    record(state);

    long steps = 0;
    while (true) {
        if (state.t() >= T_max - 1e-15) {
            trace.stop_reason = "t_max";
            break;
        }
        if (trace.rows.back().r_min < policy.stop_radius) {
            trace.stop_reason = "stop_radius";
            break;
        }
        if (steps >= policy.max_steps) {
            trace.stop_reason = "max_steps";
            break;
        }
        double dt = std::min({policy.dt, dt_cap(state, policy.cap_factor), T_max - state.t()});
        bool accepted = false;
        for (int h = 0; h <= policy.max_halvings && !accepted; ++h, dt *= 0.5) {
            try {
                state = step(state, dt, policy.tail_tol);
                accepted = true;
            } catch (const FlowError& e) {
                if (std::string(e.what()) != "resolution exhausted") {
                    trace.stop_reason = e.what();
                    break;
                }
            }
        }
        if (!accepted) {
            if (trace.stop_reason.empty()) trace.stop_reason = "resolution exhausted";
            break;
        }
        ++steps;
        record(state);
    }

    auto& rows = trace.rows;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows.size() < 2) break;
        const std::size_t a = i == 0 ? 0 : i - 1;
        const std::size_t b = i + 1 < rows.size() ? i + 1 : i;
        rows[i].dEdt_fd = (rows[b].E - rows[a].E) / (rows[b].t - rows[a].t);
    }
    // remaining time of a round sphere of the final mean radius
    const FlowState& last = state;
    trace.extinction_estimate = last.t() + std::atan(std::sinh(last.coeffs()[0]));
    return trace;
}

void write_flow_csv(std::ostream& os, const FlowTrace& trace)
{
    os << "t,E,area,volume,r_min,r_max,kappa_min,horo_flag,dEdt_fd,dEdt_analytic\n";
    for (const auto& r : trace.rows) {
        os << format_double(r.t) << ',' << format_double(r.E) << ',' << format_double(r.area) << ','
           << format_double(r.volume) << ',' << format_double(r.r_min) << ',' << format_double(r.r_max) << ','
           << format_double(r.kappa_min) << ',' << (r.horo ? "true" : "false") << ',' << format_double(r.dEdt_fd)
           << ',' << format_double(r.dEdt_analytic) << '\n';
    }
}

}  // namespace gbc
