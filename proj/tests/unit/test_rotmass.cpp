#include <doctest.h>

#include "gbc/hyperbolic.hpp"
#include "gbc/metric_field.hpp"
#include "gbc/rotmass.hpp"
#include "gbc/tensor_kernel.hpp"

using namespace gbc;

namespace {

const RotSymMetric& custom6()
{
    static const RotSymMetric g = RotSymMetric::custom(6, {{-2.0, -1.0}, {0.5, -2.0}});
    return g;
}

double dense_tilde_Lk(const RotSymMetric& g, int k, double rho)
{
    Eigen::VectorXd x = Eigen::VectorXd::Zero(g.n());
    x(0) = 0.36 * rho;
    x(1) = -0.48 * rho;
    x(2) = 0.8 * rho;
    return gauss_bonnet_Lk(modified_riemann(riemann(g.cartesian_jet_extended(x))), k);
}

}  // namespace

TEST_CASE("metric construction")
{
    for (auto [n, k] : {std::pair{5, 2}, {7, 2}, {7, 3}, {4, 1}}) CHECK(horizon_radius(n, k, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    const RotSymMetric g = RotSymMetric::ads_schwarzschild(7, 2, 1.5);
    const double h = g.horizon();
    CHECK(std::abs(std::pow(h, 3.5) + std::pow(h, 1.5) - 3.0) < 1e-12);
    CHECK(std::abs(g.psi(h)) < 1e-12);
    CHECK(g.psi(40.0) / (1.0 + 1600.0) == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(RotSymMetric::hyperbolic(5).horizon() == 0.0);
    CHECK(custom6().psi(custom6().horizon()) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("modified Lk vanishes for adS-Schwarzschild and hyperbolic space")
{
    const RotSymMetric g = RotSymMetric::ads_schwarzschild(5, 2, 1.0);
    for (double rho : {1.5, 3.0, 10.0}) {
        CHECK(std::abs(tilde_Lk_metric(g, 2, rho)) < 1e-12);
        CHECK(std::abs(dense_tilde_Lk(g, 2, rho)) < 1e-11);
    }
    CHECK(tilde_Lk_metric(RotSymMetric::hyperbolic(6), 2, 2.0) == 0.0);
    CHECK_THROWS(modified_sectional_pair(g, 0.0));
    CHECK_THROWS(tilde_Lk_metric(g, 3, 2.0));
    // the pair matches the closed form a = -(n/2k - 1) c, c = 2m / rho^{n/k}
    const SectionalPair p = modified_sectional_pair(g, 2.0);
    CHECK(p.c == doctest::Approx(2.0 / std::pow(2.0, 2.5)));
    CHECK(p.a == doctest::Approx(-0.25 * p.c));
}

TEST_CASE("sectional route agrees with the dense contraction on a custom metric")
{
    for (int k = 1; k <= 2; ++k)
        for (double rho : {1.2, 2.0, 5.0}) {
            const double v = tilde_Lk_metric(custom6(), k, rho);
            CHECK(v == doctest::Approx(dense_tilde_Lk(custom6(), k, rho)).epsilon(1e-10).scale(1e-3));
        }
    CHECK(tilde_Lk_metric(custom6(), 2, 2.0) > 0.0);
}

TEST_CASE("mass flux and its limit")
{
    for (double R : {5.0, 50.0}) CHECK(mass_flux(RotSymMetric::hyperbolic(6), 2, R) == 0.0);
    const MassEstimate h = mass_limit(RotSymMetric::hyperbolic(6), 2, {10, 20, 40, 80});
    CHECK(h.limit == 0.0);

    const RotSymMetric g = RotSymMetric::ads_schwarzschild(5, 2, 1.0);
    const MassEstimate e = mass_limit(g, 2, {10, 20, 40, 80});
    CHECK(e.limit == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(e.decay_window.first == doctest::Approx(5.0 / 3.0));
    CHECK(e.decay_window.second == doctest::Approx(2.5));
    const MassEstimate e2 = mass_limit(RotSymMetric::ads_schwarzschild(7, 2, 1.5), 2, {10, 20, 40, 80});
    CHECK(e2.limit == doctest::Approx(2.25).epsilon(1e-4));

    // custom metric: flux = (1 - 1/(4R))^2, a genuine 1/R tail
    for (double R : {4.0, 12.0}) CHECK(mass_flux(custom6(), 2, R) == doctest::Approx(std::pow(1.0 - 0.25 / R, 2)).epsilon(1e-8));
    const MassEstimate c = mass_limit(custom6(), 2, {10, 20, 40, 80, 160});
    CHECK_FALSE(c.converged_at_roundoff);
    CHECK(c.order == doctest::Approx(1.0).epsilon(0.05));
    CHECK(std::abs(c.limit - 1.0) <= c.error);
    CHECK(c.limit == doctest::Approx(1.0).epsilon(1e-2));

    // growing flux has no limit
    const RotSymMetric bad = RotSymMetric::custom(5, {{0.3, 0.5}});
    CHECK_THROWS_WITH(mass_limit(bad, 2, {10, 20, 40, 80}), "mass_limit: no limit detected");
    CHECK_THROWS(mass_limit(g, 2, {10, 20, 40}));
    CHECK_THROWS(mass_limit(g, 2, {10, 40, 20, 80}));
}

TEST_CASE("divergence identity converges at second order")
{
    const double r1 = divergence_identity_residual(custom6(), 2, 2.5, 2e-3);
    const double r2 = divergence_identity_residual(custom6(), 2, 2.5, 1e-3);
    CHECK(r2 < 1e-6);
    CHECK(std::log2(r1 / r2) == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("graph decomposition")
{
    for (auto [n, k, m] : {std::tuple{5, 2, 1.0}, {7, 2, 1.5}, {7, 3, 1.0}}) {
        const RotSymMetric g = RotSymMetric::ads_schwarzschild(n, k, m);
        const GraphMassParts parts = mass_via_graph_decomposition(g, k);
        CHECK(parts.total == doctest::Approx(std::pow(m, k)).epsilon(1e-10));
        CHECK(std::abs(parts.bulk_term) < 1e-12);
        CHECK(penrose_rhs(horizon_area(g), n, k) == doctest::Approx(std::pow(m, k)).epsilon(1e-10));
    }
    const GraphMassParts c = mass_via_graph_decomposition(custom6(), 2);
    CHECK(c.total == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(c.bulk_term > 0.0);
    // the horizon term is the Penrose bound of the horizon
    CHECK(c.horizon_term == doctest::Approx(penrose_rhs(horizon_area(custom6()), 6, 2)).epsilon(1e-12));
    CHECK(c.total >= c.horizon_term);
}

TEST_CASE("radial graph")
{
    const RotSymMetric g = RotSymMetric::ads_schwarzschild(5, 2, 1.0);
    CHECK_THROWS(graph_height_derivative(g, 0.9));
    // f'^2 ~ 2m rho^{-n/k - 4}, so f' decays like rho^{-n/(2k) - 2}
    const double s = std::log(graph_height_derivative(g, 4000.0) / graph_height_derivative(g, 2000.0)) / std::log(2.0);
    CHECK(s == doctest::Approx(-3.25).epsilon(1e-3));
    const double rho = 2.0, h = 1e-4;
    const double fd = (graph_height_derivative(g, rho + h) - graph_height_derivative(g, rho - h)) / (2 * h);
    CHECK(graph_height_second_derivative(g, rho) == doctest::Approx(fd).epsilon(1e-7));
    const Spectrum sp = graph_shape_spectrum(g, rho);
    CHECK(sp.size() == 5);
    const SectionalPair p = modified_sectional_pair(g, rho);
    CHECK(sp[0] * sp[1] == doctest::Approx(p.a).epsilon(1e-10));
    CHECK(sp[1] * sp[2] == doctest::Approx(p.c).epsilon(1e-10));
}

TEST_CASE("penrose right hand side")
{
    CHECK(penrose_rhs(1e-80, 5, 2) < 1e-18);
    CHECK(penrose_rhs(1e-40, 5, 2) < penrose_rhs(1e-20, 5, 2));
    CHECK_THROWS(penrose_rhs(0.0, 5, 2));
    CHECK(mass_constant(5, 2) > 0.0);
}
