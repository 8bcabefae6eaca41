#include <doctest.h>

#include <sstream>

#include "gbc/inequalities.hpp"

using namespace gbc;

TEST_CASE("equality on centered spheres")
{
    for (int n = 4; n <= 7; ++n) {
        const QuadratureRule rule(128, n);
        const SurfaceIntegrator I(centered_sphere(n, 1.1), rule);
        for (int k = 1; k <= n - 1; ++k) CHECK(std::abs(af_unweighted(I, k).d.relative) < 1e-9);
        for (int k = 0; 2 * k + 1 <= n - 1; ++k) CHECK(af_weighted_odd(I, k).d.equality_case);
        CHECK(weighted_dlg(I).d.equality_case);
        CHECK(minkowski_bhw(I).d.equality_case);
        for (int k = 1; k <= n - 2; ++k) CHECK(crucial_E(I, k).d.equality_case);
        for (int k = 0; 2 * k <= n - 1; ++k) CHECK(support_weighted(I, k).d.equality_case);
        for (int k = 0; k <= n - 1; k += 2) {
            CHECK(even_conjecture(I, k).d.equality_case);
            CHECK_FALSE(even_conjecture(I, k).asserted);
        }
    }
}

TEST_CASE("strict inequality away from round spheres")
{
    const QuadratureRule rule(128, 5);
    const SurfaceIntegrator off(offset_sphere(5, 1.0, 0.3), rule);
    CHECK(af_weighted_odd(off, 1).d.defect > 0.0);
    CHECK(weighted_dlg(off).d.defect > 0.0);
    CHECK(minkowski_bhw(off).d.defect >= 0.0);
    CHECK(crucial_E(off, 2).d.defect > 0.0);
    CHECK(support_weighted(off, 1).d.defect >= 0.0);
    CHECK(even_conjecture(off, 2).d.defect > 0.0);
    // the unweighted inequality is sharp on every geodesic sphere
    CHECK(af_unweighted(off, 2).d.equality_case);
    const SurfaceIntegrator per(perturbed_sphere(5, 1.2, 0.05, 2), rule);
    for (int k = 1; k <= 4; ++k) CHECK(af_unweighted(per, k).d.defect > 0.0);
    CHECK(minkowski_bhw(per).d.defect >= 0.0);
}

TEST_CASE("hypothesis gating")
{
    const QuadratureRule rule(128, 5);
    const SurfaceIntegrator weak(perturbed_sphere(5, 1.0, 0.3, 4), rule);
    const HypothesisFlags f = surface_flags(weak);
    CHECK_FALSE(f.horospherical);
    CHECK_FALSE(af_unweighted(weak, 2).asserted);
    CHECK_FALSE(crucial_E(weak, 2).asserted);
    const SurfaceIntegrator ok(centered_sphere(5, 1.0), rule);
    CHECK(to_string(surface_flags(ok)) == "horospherical;convex;star_shaped");
    CHECK(to_string(HypothesisFlags{}) == "none");
    CHECK(af_unweighted(ok, 2).asserted);
    CHECK_FALSE(gallego_solanes(ok, 2).asserted);
    CHECK_THROWS(af_weighted_odd(ok, 2));
    CHECK_THROWS(crucial_E(ok, 4));
}

TEST_CASE("near the convexity boundary")
{
    // eps chosen so that the minimal curvature sits just above 1
    const QuadratureRule rule(128, 5);
    double eps = 0.0;
    for (double e = 0.0; e < 0.3; e += 0.002)
        if (horospherical_convex(perturbed_sphere(5, 1.0, e, 4), 0.0, rule)) eps = e;
    const SurfaceIntegrator I(perturbed_sphere(5, 1.0, eps, 4), rule);
    CHECK(I.min_curvature() < 1.02);
    for (int k = 1; k <= 3; ++k) {
        const InequalityReport r = crucial_E(I, k);
        CHECK(r.asserted);
        CHECK(r.d.relative >= -1e-9);
    }
}

TEST_CASE("penrose check gate")
{
    const InequalityReport r = penrose_check(0.1, 10.0, 5, 2, false);
    CHECK(r.d.defect < 0.0);
    CHECK_FALSE(r.asserted);
    CHECK(to_string(r.flags) == "none");
    CHECK(penrose_check(5.0, 10.0, 5, 2, true).asserted);
    CHECK_THROWS(penrose_check(1.0, 0.0, 5, 2, true));
}

TEST_CASE("csv row")
{
    std::ostringstream os;
    write_inequality_header(os);
    const QuadratureRule rule(32, 4);
    write_inequality_row(os, {4, "centered_sphere(r0=1)", weighted_dlg(SurfaceIntegrator(centered_sphere(4, 1.0), rule))});
    const std::string s = os.str();
    CHECK(s.rfind("inequality,n,k,surface,lhs,rhs,defect,relative,equality_case,hypothesis_flags,asserted\n", 0) == 0);
    CHECK(s.find("weighted_dlg,4,1,centered_sphere(r0=1),") != std::string::npos);
    CHECK(s.find(",true,horospherical;convex;star_shaped,true\n") != std::string::npos);
}
