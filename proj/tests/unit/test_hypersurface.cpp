#include <doctest.h>

#include <numbers>
#include <random>

#include "gbc/hyperbolic.hpp"
#include "gbc/hypersurface.hpp"
#include "gbc/integrals.hpp"
#include "oracles.hpp"

using namespace gbc;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0}); }

}  // namespace

TEST_CASE("constructors and errors")
{
    CHECK_THROWS(centered_sphere(4, 0.0));
    CHECK_THROWS(offset_sphere(4, 1.0, 1.0));
    CHECK_THROWS(offset_sphere(4, 1.0, -0.1));
    CHECK_THROWS(centered_sphere(2, 1.0));
    const AxisymSurface a = offset_sphere(5, 1.3, 0.0), b = centered_sphere(5, 1.3);
    const AxisymSurface c = perturbed_sphere(5, 1.3, 0.0, 3);
    for (double th : {0.0, 0.4, 1.9, std::numbers::pi}) {
        CHECK(a.jet(th).r == doctest::Approx(b.jet(th).r).epsilon(1e-14));
        CHECK(c.jet(th).r == doctest::Approx(b.jet(th).r).epsilon(1e-14));
    }
}

TEST_CASE("geodesic spheres have curvature coth R everywhere")
{
    for (int n = 3; n <= 7; ++n)
        for (auto [R, d] : {std::pair{1.0, 0.0}, {1.0, 0.4}, {2.0, 0.6}, {0.5, 0.2}}) {
            const AxisymSurface s = offset_sphere(n, R, d);
            for (double th = 0.01; th < std::numbers::pi; th += 0.1) {
                const SurfaceSample q = s.sample(th);
                CHECK(q.kappa_polar == doctest::Approx(1.0 / std::tanh(R)).epsilon(1e-8));
                CHECK(q.kappa_azimuthal == doctest::Approx(1.0 / std::tanh(R)).epsilon(1e-8));
                CHECK(q.u > 0.0);
                CHECK(q.V == doctest::Approx(std::cosh(q.r)).epsilon(1e-14));
            }
        }
}

TEST_CASE("closed forms agree with the hyperboloid embedding")
{
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int t = 0; t < 60; ++t) {
        const int n = 3 + t % 5;
        const AxisymSurface s = t % 3 == 0   ? centered_sphere(n, 0.2 + 2 * U(rng))
                                : t % 3 == 1 ? offset_sphere(n, 1.0 + U(rng), 0.6 * U(rng))
                                             : perturbed_sphere(n, 1.0 + U(rng), 0.05 * U(rng), 2 + t % 4);
        const double th = 0.05 + 3.0 * U(rng);
        const SurfaceSample a = s.sample(th);
        const oracle::EmbeddedSample b = oracle::hyperboloid_sample(s, th);
        CHECK(rel(a.kappa_polar, b.kappa_polar) < 1e-6);
        CHECK(rel(a.kappa_azimuthal, b.kappa_azimuthal) < 1e-6);
        CHECK(rel(a.u, b.u) < 1e-6);
        CHECK(rel(a.area_weight, b.area_weight) < 1e-6);
        // |grad V|^2 = V^2 - 1 - u^2 on any hypersurface
        CHECK(rel(a.grad_V_sq, a.V * a.V - 1.0 - a.u * a.u) < 1e-10);
    }
}

TEST_CASE("reflection symmetry of even profiles")
{
    const AxisymSurface s = perturbed_sphere(6, 1.1, 0.04, 2);
    for (double th : {0.2, 0.7, 1.3}) {
        const SurfaceSample a = s.sample(th), b = s.sample(std::numbers::pi - th);
        CHECK(a.kappa_polar == doctest::Approx(b.kappa_polar).epsilon(1e-12));
        CHECK(a.kappa_azimuthal == doctest::Approx(b.kappa_azimuthal).epsilon(1e-12));
        CHECK(a.u == doctest::Approx(b.u).epsilon(1e-12));
        CHECK(a.r1 == doctest::Approx(-b.r1).epsilon(1e-12));
    }
}

TEST_CASE("poles are regular")
{
    const AxisymSurface s = perturbed_sphere(5, 1.0, 0.05, 3);
    const SurfaceSample p = s.sample(0.0), q = s.sample(1e-6);
    CHECK(p.kappa_polar == doctest::Approx(p.kappa_azimuthal).epsilon(1e-10));
    CHECK(p.kappa_polar == doctest::Approx(q.kappa_polar).epsilon(1e-6));
}

TEST_CASE("horospherical convexity classification")
{
    const QuadratureRule rule(128, 5);
    CHECK(horospherical_convex(centered_sphere(5, 3.0), 1e-9, rule));
    CHECK(horospherical_convex(offset_sphere(5, 1.0, 0.4), 1e-9, rule));
    CHECK_FALSE(horospherical_convex(perturbed_sphere(5, 1.0, 0.3, 4), 1e-9, rule));
    CHECK(convex(perturbed_sphere(5, 1.0, 0.05, 2), rule));
    // a large sphere is within tol of the horosphere limit
    const AxisymSurface big = centered_sphere(5, 12.0);
    CHECK(min_principal_curvature(big, rule) - 1.0 < 1e-9);
    CHECK(horospherical_convex(big, 1e-9, rule));
}

TEST_CASE("area converges spectrally to the closed form")
{
    for (int n = 3; n <= 7; ++n) {
        const double r0 = 1.3;
        const double exact = sphere_volume_constant(n) * std::pow(std::sinh(r0), n - 1);
        const double err = std::abs(SurfaceIntegrator(centered_sphere(n, r0), QuadratureRule(16, n)).area() - exact);
        CHECK(err < 1e-12 * exact);
        // a non-trivial surface: doubling the node count changes the area at roundoff
        const AxisymSurface s = perturbed_sphere(n, 1.0, 0.05, 2);
        const double a64 = SurfaceIntegrator(s, QuadratureRule(64, n)).area();
        const double a128 = SurfaceIntegrator(s, QuadratureRule(128, n)).area();
        CHECK(std::abs(a64 - a128) < 1e-13 * a128);
    }
}

TEST_CASE("legendre polynomials")
{
    CHECK(legendre(0, 0.3).p == 1.0);
    CHECK(legendre(2, 0.3).p == doctest::Approx(0.5 * (3 * 0.09 - 1)));
    CHECK(legendre(2, 0.3).dp == doctest::Approx(0.9));
    CHECK(legendre(3, 0.5).ddp == doctest::Approx(15 * 0.5));
}
