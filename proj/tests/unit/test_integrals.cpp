#include <doctest.h>

#include <numbers>

#include "battery.hpp"
#include "gbc/hyperbolic.hpp"
#include "gbc/integrals.hpp"

using namespace gbc;

TEST_CASE("closed-form integrals on centered spheres")
{
    const QuadratureRule rule(128, 3);
    const AxisymSurface s = centered_sphere(3, 1.0);
    const double area = 4 * std::numbers::pi * std::sinh(1.0) * std::sinh(1.0);
    CHECK(surface_integral(s, [](const SurfaceSample&) { return 1.0; }, rule) == doctest::Approx(area).epsilon(1e-13));
    CHECK(area == doctest::Approx(17.36).epsilon(1e-3));
    CHECK(curvature_integral(s, 1, rule) == doctest::Approx(2.0 / std::tanh(1.0) * area).epsilon(1e-13));
    CHECK(curvature_integral(s, 1, rule) == doctest::Approx(45.58).epsilon(1e-3));
    CHECK(curvature_integral(s, 0, rule) == doctest::Approx(area).epsilon(1e-13));
    CHECK(std::abs(surface_integral(s, [](const SurfaceSample& q) { return std::cos(q.theta); }, rule)) < 1e-13);
    for (int n = 4; n <= 7; ++n) {
        const QuadratureRule r(64, n);
        const AxisymSurface c = centered_sphere(n, 0.8);
        const double A = sphere_volume_constant(n) * std::pow(std::sinh(0.8), n - 1);
        for (int k = 0; k <= n - 1; ++k)
            CHECK(curvature_integral(c, k, r) ==
                  doctest::Approx(binomial(n - 1, k) * std::pow(1.0 / std::tanh(0.8), k) * A).epsilon(1e-12));
        CHECK(weighted_integral(c, 2, Weight::UV, r) ==
              doctest::Approx(std::sinh(0.8) * std::cosh(0.8) * std::pow(1.0 / std::tanh(0.8), 2) * A).epsilon(1e-12));
    }
}

TEST_CASE("minkowski identity")
{
    for (int n = 4; n <= 7; ++n) {
        const QuadratureRule rule(128, n);
        for (int k = 0; k <= n - 2; ++k) {
            CHECK(std::abs(minkowski_residual(centered_sphere(n, 1.2), k, rule).relative) < 1e-12);
            CHECK(std::abs(minkowski_residual(perturbed_sphere(n, 1.0, 0.05, 2), k, rule).relative) < 1e-8);
            CHECK(std::abs(minkowski_residual(offset_sphere(n, 1.0, 0.4), k, rule).relative) < 1e-8);
        }
    }
    CHECK_THROWS(minkowski_residual(centered_sphere(4, 1.0), 3, QuadratureRule(16, 4)));
}

TEST_CASE("proposition defects")
{
    const QuadratureRule rule(128, 5);
    CHECK(std::abs(proposition_defect(centered_sphere(5, 1.5), 2, Proposition::Eq2, rule).defect) < 1e-10);
    CHECK(proposition_defect(offset_sphere(5, 1.0, 0.4), 2, Proposition::Eq2, rule).defect > 0.0);
    CHECK_THROWS(proposition_defect(centered_sphere(5, 1.0), 0, Proposition::Eq2, rule));
    CHECK(proposition_defect(centered_sphere(5, 1.0), 0, Proposition::Eq2k, rule).equality_case);
    CHECK(proposition_k_max(Proposition::Eq1Prop1k, 6) == 4);
    CHECK(std::string(to_string(Proposition::Eq2Prop1k)) == "eq2_prop1k");
}

TEST_CASE("E functional")
{
    for (int n = 4; n <= 7; ++n) {
        const QuadratureRule rule(128, n);
        for (int k = 1; k < n - 1; ++k)
            for (double r0 : {0.3, 1.0, 2.5}) {
                const SurfaceIntegrator I(centered_sphere(n, r0), rule);
                CHECK(std::abs(E_functional(I, k)) < 1e-10 * E_scale(I, k));
            }
    }
    const QuadratureRule r5(128, 5);
    CHECK(E_functional(offset_sphere(5, 1.0, 0.3), 1, r5) >= 0.0);
    CHECK(E_functional(perturbed_sphere(5, 1.2, 0.05, 2), 2, r5) >= 0.0);
}

TEST_CASE("volume and quermassintegrals")
{
    for (int n = 3; n <= 6; ++n) {
        const QuadratureRule rule(64, n);
        const double r0 = 0.9;
        // vol of a geodesic ball by direct radial integration
        const GaussRule gl = gauss_legendre(40);
        double vol = 0.0;
        for (std::size_t i = 0; i < gl.x.size(); ++i) {
            const double s = 0.5 * r0 * (gl.x[i] + 1.0);
            vol += 0.5 * r0 * gl.w[i] * std::pow(std::sinh(s), n - 1);
        }
        vol *= sphere_volume_constant(n);
        CHECK(enclosed_volume(centered_sphere(n, r0), rule) == doctest::Approx(vol).epsilon(1e-12));
        // offset spheres are congruent to centered ones
        CHECK(enclosed_volume(offset_sphere(n, r0, 0.4), rule) == doctest::Approx(vol).epsilon(1e-10));
        CHECK(quermassintegral(centered_sphere(n, r0), 0, rule) == doctest::Approx(vol).epsilon(1e-12));
        CHECK(quermassintegral(offset_sphere(n, r0, 0.4), 2, rule) ==
              doctest::Approx(quermassintegral(centered_sphere(n, r0), 2, rule)).epsilon(1e-9));
        CHECK_THROWS(quermassintegral(centered_sphere(n, r0), n + 1, rule));
    }
}

TEST_CASE("battery surfaces are horospherically convex")
{
    for (int n = battery::kMinN; n <= battery::kMaxN; ++n)
        for (const auto& e : battery::surfaces(n)) CHECK(horospherical_convex(e.surface, 1e-9, QuadratureRule(128, n)));
}
