#include <doctest.h>

#include <array>
#include <random>

#include "gbc/metric_field.hpp"
#include "gbc/rotsym_metric.hpp"
#include "gbc/tensor_kernel.hpp"
#include "oracles.hpp"

using namespace gbc;

namespace {

RiemannTensor constant_curvature(int m, double K, const Eigen::MatrixXd& g)
{
    Array4 a(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int s = 0; s < m; ++s)
                for (int l = 0; l < m; ++l) a(i, j, s, l) = K * (g(i, s) * g(j, l) - g(i, l) * g(j, s));
    return RiemannTensor(a, MetricTensor(g));
}

double rel(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0}); }

}  // namespace

TEST_CASE("generalized delta examples and determinant oracle")
{
    const std::array<int, 2> a{1, 2}, b{2, 1};
    CHECK(generalized_delta(a, a) == 1);
    CHECK(generalized_delta(a, b) == -1);
    const std::array<int, 3> c{1, 2, 3}, d{3, 1, 2}, e{1, 1, 3};
    CHECK(generalized_delta(c, d) == 1);
    CHECK(generalized_delta(e, c) == 0);

    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> idx(0, 4);
    for (int r = 1; r <= 4; ++r)
        for (int t = 0; t < 200; ++t) {
            std::vector<int> u(static_cast<std::size_t>(r)), l(static_cast<std::size_t>(r));
            for (auto& v : u) v = idx(rng);
            for (auto& v : l) v = idx(rng);
            CHECK(generalized_delta(u, l) == oracle::delta_determinant(u, l));
        }
}

TEST_CASE("curvature tensor validation")
{
    Array4 bad(3);
    bad(0, 1, 0, 1) = 1.0;
    CHECK_THROWS_AS(RiemannTensor(bad, MetricTensor::identity(3)), std::invalid_argument);
    CHECK_THROWS_AS(MetricTensor(Eigen::MatrixXd::Zero(2, 3)), std::invalid_argument);
    CHECK(RiemannTensor::symmetry_defect(riemann_projection(bad)) < 1e-15);
}

TEST_CASE("Lk of flat and constant curvature spaces")
{
    for (int n = 3; n <= 6; ++n) {
        const RiemannTensor flat(Array4(n), MetricTensor::identity(n));
        for (int k = 1; 2 * k <= n; ++k) CHECK(gauss_bonnet_Lk(flat, k) == 0.0);
        // hyperbolic space: modified tensor vanishes identically
        const RiemannTensor hyp = constant_curvature(n, -1.0, Eigen::MatrixXd::Identity(n, n));
        CHECK(modified_riemann(hyp).values().max_abs() < 1e-15);
        // flat: modified tensor is g^g
        const RiemannTensor mt = modified_riemann(flat);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int s = 0; s < n; ++s)
                    for (int l = 0; l < n; ++l)
                        CHECK(mt(i, j, s, l) == (i == s) * (j == l) - (i == l) * (j == s));
        CHECK((unmodified_riemann(mt).values().max_abs()) < 1e-15);
    }
}

TEST_CASE("Lk against the permutation sum oracle and L1 = scalar curvature")
{
    std::mt19937_64 rng(42);
    for (int m = 3; m <= 6; ++m)
        for (int t = 0; t < 5; ++t) {
            const RiemannTensor R = oracle::random_curvature(m, rng, t == 0);
            CHECK(rel(gauss_bonnet_Lk(R, 1), oracle::scalar(R)) < 1e-12);
            for (int k = 1; k <= 3 && 2 * k <= m; ++k)
                CHECK(rel(gauss_bonnet_Lk(R, k), oracle::lk_permutation_sum(R, k)) < 1e-11);
            CHECK(rel(gauss_bonnet_Lk(R, 1), contract(R, P_tensor(R, 1, false))) < 1e-12);
            if (m >= 4) CHECK(rel(gauss_bonnet_Lk(R, 2), contract(R, P_tensor(R, 2, false))) < 1e-11);
        }
}

TEST_CASE("P1 is the antisymmetrised inverse metric")
{
    std::mt19937_64 rng(8);
    const int m = 5;
    const RiemannTensor R = oracle::random_curvature(m, rng);
    const Eigen::MatrixXd& gi = R.metric().inv();
    const FourTensor P = P_tensor(R, 1, false);
    double worst = 0.0;
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t)
            for (int j = 0; j < m; ++j)
                for (int l = 0; l < m; ++l)
                    worst = std::max(worst, std::abs(P(s, t, j, l) - 0.5 * (gi(s, j) * gi(t, l) - gi(s, l) * gi(t, j))));
    CHECK(worst < 1e-13);
    CHECK(RiemannTensor::symmetry_defect(P_tensor(R, 2, true).values()) < 1e-12 * std::max(1.0, P_tensor(R, 2, true).values().max_abs()));
}

TEST_CASE("two-eigenvalue closed form")
{
    for (int n = 3; n <= 7; ++n) {
        CHECK(two_eigenvalue_Lk(0.0, 1.0, n, 1) == doctest::Approx((n - 1) * (n - 2)));
        CHECK(two_eigenvalue_Lk(0.0, 0.0, n, 1) == 0.0);
        for (int k = 1; k <= 3 && 2 * k <= n; ++k)
            for (double a : {-0.7, 0.0, 0.4})
                for (double c : {-0.3, 0.9}) {
                    const double dense = gauss_bonnet_Lk(assemble_two_eigenvalue(a, c, n), k);
                    CHECK(rel(two_eigenvalue_Lk(a, c, n, k), dense) < 1e-12);
                }
        for (int k = 1; 2 * k < n; ++k) {
            const double m = 1.3, rho = 2.2;
            const double c = 2 * m / std::pow(rho, double(n) / k);
            const double a = -(double(n) / (2 * k) - 1) * c;
            CHECK(std::abs(two_eigenvalue_Lk(a, c, n, k)) < 1e-12);
        }
    }
}

TEST_CASE("curvature of rotationally symmetric metrics against finite differences")
{
    const RotSymMetric metrics[] = {RotSymMetric::ads_schwarzschild(5, 2, 1.0), RotSymMetric::custom(6, {{-2.0, -1.0}, {0.5, -2.0}}),
                                    RotSymMetric::hyperbolic(4)};
    for (const auto& g : metrics) {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(g.n());
        x(0) = 1.7;
        x(1) = -0.9;
        x(g.n() - 1) = 0.6;
        const RiemannTensor R = riemann(g.cartesian_jet(x));
        const Array4 ref = oracle::fd_riemann(g, x, 1e-3);
        double worst = 0.0;
        for (int i = 0; i < g.n(); ++i)
            for (int j = 0; j < g.n(); ++j)
                for (int s = 0; s < g.n(); ++s)
                    for (int l = 0; l < g.n(); ++l) worst = std::max(worst, std::abs(R(i, j, s, l) - ref(i, j, s, l)));
        CHECK(worst < 1e-5);
        // extended and plain precision agree
        const RiemannTensor RL = riemann(g.cartesian_jet_extended(x));
        double diff = 0.0;
        for (std::size_t i = 0; i < R.values().data().size(); ++i)
            diff = std::max(diff, std::abs(R.values().data()[i] - RL.values().data()[i]));
        CHECK(diff < 1e-12);
    }
}

TEST_CASE("divergence residual")
{
    CHECK(divergence_residual(RotSymMetric::hyperbolic(5), 2, 2.0, 1e-3) < 1e-12);
    const RotSymMetric g = RotSymMetric::ads_schwarzschild(5, 2, 1.0);
    const double r1 = divergence_residual(g, 2, 3.0, 2e-3), r2 = divergence_residual(g, 2, 3.0, 1e-3);
    CHECK(std::log2(r1 / r2) == doctest::Approx(2.0).epsilon(0.05));
    CHECK(r2 < 1e-6);
    CHECK(divergence_residual(RotSymMetric::hyperbolic(4), 1, 1.0, 1e-3) < 1e-8);
    CHECK_THROWS(divergence_residual(g, 2, 0.5, 1e-3));
}
