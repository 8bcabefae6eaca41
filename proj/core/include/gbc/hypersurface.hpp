#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gbc/quadrature.hpp"
#include "gbc/symfunc.hpp"

namespace gbc {

struct ConstantProfile {
    double r0;
};
// Geodesic sphere of radius R whose center sits at distance d along the axis.
struct OffsetProfile {
    double R;
    double d;
};
// r0 + eps * P_mode(cos theta)
struct LegendreProfile {
    double r0;
    double eps;
    int mode;
};
// sum_m a_m cos(m theta)
struct CosineProfile {
    std::vector<double> a;
};

using Profile = std::variant<ConstantProfile, OffsetProfile, LegendreProfile, CosineProfile>;

struct ProfileJet {
    double r;
    double r1;          // dr/dtheta
    double r2;          // d2r/dtheta2
    double r1_over_sin; // r1 / sin(theta), finite at the poles
};

ProfileJet profile_jet(const Profile& p, double theta);

struct SurfaceSample {
    double theta;
    double r, r1, r2;
    double kappa_polar;
    double kappa_azimuthal;  // multiplicity n-2
    double V;
    double u;
    double grad_V_sq;        // |grad V|^2 along the surface
    double W;
    double area_weight;      // d(mu) against d(theta)
    double area_density;     // area_weight / sin^{n-2}(theta)
};

class AxisymSurface {
public:
    AxisymSurface(int n, Profile profile, std::string label = {});

    int n() const { return n_; }
    const Profile& profile() const { return profile_; }
    const std::string& label() const { return label_; }

    ProfileJet jet(double theta) const { return profile_jet(profile_, theta); }
    SurfaceSample sample(double theta) const;
    // n-1 principal curvatures at a sample
    Spectrum spectrum(const SurfaceSample& s) const;

private:
    int n_;
    Profile profile_;
    std::string label_;
};

AxisymSurface centered_sphere(int n, double r0);
AxisymSurface offset_sphere(int n, double R, double d);
AxisymSurface perturbed_sphere(int n, double r0, double eps, int mode);
AxisymSurface cosine_surface(int n, std::vector<double> coeffs, std::string label = "cosine_series");

double min_principal_curvature(const AxisymSurface& s, const QuadratureRule& rule);
bool horospherical_convex(const AxisymSurface& s, double tol);
bool horospherical_convex(const AxisymSurface& s, double tol, const QuadratureRule& rule);
bool convex(const AxisymSurface& s, const QuadratureRule& rule);

// Legendre P_l and its first two derivatives at x.
struct LegendreValue {
    double p, dp, ddp;
};
LegendreValue legendre(int l, double x);

}  // namespace gbc
