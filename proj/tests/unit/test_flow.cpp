#include <doctest.h>

#include <numbers>
#include <sstream>

#include "gbc/flow.hpp"
#include "oracles.hpp"

using namespace gbc;

namespace {

FlowState advance(FlowState s, double T, double dt)
{
    const int steps = static_cast<int>(std::lround(T / dt));
    for (int i = 0; i < steps; ++i) s = step(s, dt);
    return s;
}

}  // namespace

TEST_CASE("round spheres follow the closed-form shrinking")
{
    const FlowState s0 = FlowState::from_surface(centered_sphere(5, 1.0), 32);
    const FlowState s1 = advance(s0, 0.1, 1e-3);
    const double exact = std::asinh(std::tan(std::atan(std::sinh(1.0)) - 0.1));
    CHECK(s1.t() == doctest::Approx(0.1).epsilon(1e-12));
    for (double th : {0.0, 1.0, 2.5}) CHECK(s1.surface().jet(th).r == doctest::Approx(exact).epsilon(1e-10));
    CHECK(s1.tail_ratio() < 1e-14);
    // backward steps undo forward ones
    const FlowState back = step(step(s0, 1e-2), -1e-2);
    CHECK(back.coeffs()[0] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("step errors")
{
    const FlowState tiny = FlowState::from_surface(centered_sphere(4, 0.01), 16);
    CHECK_THROWS_WITH_AS(step(tiny, 0.5), "flow extinct within step", FlowError);
    CHECK_THROWS_AS(FlowState(4, 0.0, {}), std::invalid_argument);
}

TEST_CASE("spectral step agrees with geodesic normal advection to second order")
{
    const AxisymSurface s = perturbed_sphere(5, 1.0, 0.05, 2);
    const FlowState st = FlowState::from_surface(s, 64);
    double prev = 0.0;
    for (double dt : {4e-3, 2e-3}) {
        double worst = 0.0;
        const FlowState next = step(st, dt);
        for (double th : {0.3, 1.0, 1.7, 2.6}) {
            const auto [th2, r2] = oracle::advect(s, th, dt);
            worst = std::max(worst, std::abs(next.surface().jet(th2).r - r2));
        }
        if (prev > 0.0) CHECK(std::log2(prev / worst) > 1.8);
        prev = worst;
    }
    CHECK(prev < 1e-5);
}

TEST_CASE("evolution identities hold to the differencing error")
{
    const FlowState st = FlowState::from_surface(offset_sphere(6, 1.0, 0.3), 64);
    const auto coarse = evolution_identity_residuals(st, 2e-3);
    const auto res = evolution_identity_residuals(st, 1e-3);
    CHECK(res.count("area") == 1);
    CHECK(res.count("V_pole") == 1);
    CHECK(res.count("Vp_k0") == 1);
    CHECK(res.count("pV_l2_k4") == 1);
    for (const auto& [key, r] : res) {
        INFO(key);
        CHECK(coarse.at(key) / r == doctest::Approx(4.0).epsilon(0.02));
    }
}

TEST_CASE("derivative of E")
{
    const FlowState round = FlowState::from_surface(centered_sphere(5, 1.0), 32);
    const Defect d0 = dE_dt_check(round, 1, 1e-3);
    CHECK(std::abs(d0.lhs) < 1e-9);
    CHECK(std::abs(d0.rhs) < 1e-9);
    const FlowState off = FlowState::from_surface(offset_sphere(5, 1.0, 0.3), 64);
    const Defect d = dE_dt_check(off, 1, 1e-3), d2 = dE_dt_check(off, 1, 5e-4);
    CHECK(d.rhs < 0.0);
    CHECK(std::abs(d.lhs - d.rhs) < 1e-2 * std::abs(d.rhs));
    CHECK(std::abs(d.lhs - d.rhs) / std::abs(d2.lhs - d2.rhs) == doctest::Approx(4.0).epsilon(0.05));
    const EDerivativeTerms t = dE_dt_analytic(SurfaceIntegrator(off.surface(), QuadratureRule(128, 5)), 1);
    CHECK(t.total == doctest::Approx(-(5 - 1 - 2) * t.group1 - 2 * t.group2 - 1 * t.group3));
    CHECK_THROWS(dE_dt_check(FlowState::from_surface(perturbed_sphere(5, 1.0, 0.3, 4), 64), 1, 1e-3));
}

TEST_CASE("full run of a round sphere")
{
    FlowPolicy policy;
    policy.modes = 16;
    const FlowTrace tr = run(centered_sphere(5, 1.0), 1, 10.0, policy);
    CHECK(tr.stop_reason == "stop_radius");
    CHECK(tr.extinction_estimate == doctest::Approx(std::atan(std::sinh(1.0))).epsilon(1e-9));
    CHECK(tr.rows.back().t == doctest::Approx(0.8658).epsilon(0.02));
    for (const auto& r : tr.rows) {
        CHECK(r.horo);
        CHECK(std::abs(r.E) < 1e-10 * r.E_scale + 1e-12);
    }
    std::ostringstream os;
    write_flow_csv(os, tr);
    CHECK(os.str().rfind("t,E,area,volume,r_min,r_max,kappa_min,horo_flag,dEdt_fd,dEdt_analytic\n", 0) == 0);
}

TEST_CASE("offset sphere run is monotone")
{
    FlowPolicy policy;
    policy.modes = 32;
    const FlowTrace tr = run(offset_sphere(4, 1.0, 0.3), 1, 0.3, policy);
    CHECK(tr.stop_reason == "t_max");
    for (std::size_t i = 1; i < tr.rows.size(); ++i) {
        CHECK(tr.rows[i].E <= tr.rows[i - 1].E + 1e-8 * tr.rows[i].E_scale);
        CHECK(tr.rows[i].horo);
        CHECK(tr.rows[i].kappa_min >= 1.0);
    }
    // the stored finite-difference derivative tracks the analytic one
    const FlowRow& mid = tr.rows[tr.rows.size() / 2];
    CHECK(mid.dEdt_fd == doctest::Approx(mid.dEdt_analytic).epsilon(1e-3));
    CHECK_THROWS(run(perturbed_sphere(5, 1.0, 0.3, 4), 1, 1.0, policy));
    CHECK_THROWS(run(centered_sphere(5, 1.0), 4, 1.0, policy));
}

TEST_CASE("dt cap scales with the mode count")
{
    const FlowState a = FlowState::from_surface(centered_sphere(5, 1.0), 16);
    const FlowState b = FlowState::from_surface(centered_sphere(5, 1.0), 32);
    CHECK(dt_cap(a, 1.0) == doctest::Approx(4.0 * dt_cap(b, 1.0)));
}
