#include "gbc/hypersurface.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gbc/hyperbolic.hpp"

namespace gbc {

namespace {

ProfileJet jet_of(const ConstantProfile& p, double) { return {p.r0, 0.0, 0.0, 0.0}; }

ProfileJet jet_of(const OffsetProfile& p, double theta)
{
    const double c = std::cos(theta), s = std::sin(theta);
    const double chd = std::cosh(p.d), shd = std::sinh(p.d);
    const double q = std::sqrt(chd * chd - shd * shd * c * c);
    const double r = std::atanh(shd * c / chd) + std::acosh(std::cosh(p.R) / q);
    // F(r,theta) = cosh d cosh r - sinh d sinh r cos(theta) - cosh R = 0
    const double chr = std::cosh(r), shr = std::sinh(r);
    const double Fr = chd * shr - shd * chr * c;
    const double r1_over_sin = -shd * shr / Fr;
    const double r1 = r1_over_sin * s;
    const double Frr = chd * chr - shd * shr * c;
    const double Frt = shd * chr * s;
    const double Ftt = shd * shr * c;
    const double r2 = -(Ftt + 2.0 * Frt * r1 + Frr * r1 * r1) / Fr;
    return {r, r1, r2, r1_over_sin};
}

ProfileJet jet_of(const LegendreProfile& p, double theta)
{
    const double c = std::cos(theta), s = std::sin(theta);
    const LegendreValue L = legendre(p.mode, c);
    return {p.r0 + p.eps * L.p, -p.eps * s * L.dp, p.eps * (s * s * L.ddp - c * L.dp), -p.eps * L.dp};
}

ProfileJet jet_of(const CosineProfile& p, double theta)
{
    const double c = std::cos(theta);
    double r = 0.0, r1 = 0.0, r2 = 0.0, r1s = 0.0;
    // sin(m t)/sin(t) = U_{m-1}(cos t)
    double Um2 = 0.0, Um1 = 1.0;
    const double s1 = std::sin(theta);
    double cprev = c, sprev = -s1, cm = 1.0, sm = 0.0;  // cos, sin at m-1 and m
    for (std::size_t m = 0; m < p.a.size(); ++m) {
        const double md = static_cast<double>(m);
        if (m > 0) {
            const double cn = 2.0 * c * cm - cprev, sn = 2.0 * c * sm - sprev;
            cprev = cm;
            sprev = sm;
            cm = cn;
            sm = sn;
        }
        r += p.a[m] * cm;
        r1 -= md * p.a[m] * sm;
        r2 -= md * md * p.a[m] * cm;
        if (m >= 1) {
            const double U = (m == 1) ? 1.0 : 2.0 * c * Um1 - Um2;
            if (m >= 2) {
                Um2 = Um1;
                Um1 = U;
            }
            r1s -= md * p.a[m] * U;
        }
    }
    return {r, r1, r2, r1s};
}

void validate_profile(int n, const Profile& p)
{
    if (n < 3) throw std::invalid_argument("AxisymSurface: n < 3");
    for (int i = 0; i <= 64; ++i) {
        const double t = std::numbers::pi * i / 64.0;
        const ProfileJet j = profile_jet(p, t);
        if (!(j.r > 0.0) || !std::isfinite(j.r)) throw std::invalid_argument("AxisymSurface: profile not positive");
    }
    for (double t : {0.0, std::numbers::pi})
        if (std::abs(profile_jet(p, t).r1) > 1e-8) throw std::invalid_argument("AxisymSurface: pole regularity violated");
}

}  // namespace

LegendreValue legendre(int l, double x)
{
    if (l < 0) throw std::invalid_argument("legendre: negative degree");
    if (l == 0) return {1.0, 0.0, 0.0};
    double p0 = 1.0, p1 = x, d0 = 0.0, d1 = 1.0, dd0 = 0.0, dd1 = 0.0;
    for (int j = 1; j < l; ++j) {
        const double p2 = ((2.0 * j + 1.0) * x * p1 - j * p0) / (j + 1.0);
        const double d2 = d0 + (2.0 * j + 1.0) * p1;
        const double dd2 = dd0 + (2.0 * j + 1.0) * d1;
        p0 = p1;
        p1 = p2;
        d0 = d1;
        d1 = d2;
        dd0 = dd1;
        dd1 = dd2;
    }
    return {p1, d1, dd1};
}

ProfileJet profile_jet(const Profile& p, double theta)
{
    return std::visit([theta](const auto& q) { return jet_of(q, theta); }, p);
}

AxisymSurface::AxisymSurface(int n, Profile profile, std::string label)
    : n_(n), profile_(std::move(profile)), label_(std::move(label))
{
    validate_profile(n_, profile_);
}

SurfaceSample AxisymSurface::sample(double theta) const
{
    const ProfileJet j = jet(theta);
    const double sh = std::sinh(j.r), ch = std::cosh(j.r);
    const double W = std::sqrt(sh * sh + j.r1 * j.r1);
    const double st = std::sin(theta), ct = std::cos(theta);
    SurfaceSample s{};
    s.theta = theta;
    s.r = j.r;
    s.r1 = j.r1;
    s.r2 = j.r2;
    s.W = W;
    s.kappa_polar = (sh * sh * ch + 2.0 * ch * j.r1 * j.r1 - sh * j.r2) / (W * W * W);
    s.kappa_azimuthal = (ch - ct * j.r1_over_sin / sh) / W;
    s.V = ch;
    s.u = sh * sh / W;
    const double gv = sh * j.r1 / W;
    s.grad_V_sq = gv * gv;
    const double omega = sphere_volume_constant(n_ - 1);
    s.area_density = omega * W * std::pow(sh, n_ - 2);
    s.area_weight = s.area_density * std::pow(st, n_ - 2);
    return s;
}

Spectrum AxisymSurface::spectrum(const SurfaceSample& s) const
{
    std::vector<double> v(static_cast<std::size_t>(n_ - 1), s.kappa_azimuthal);
    v[0] = s.kappa_polar;
    return Spectrum(std::move(v));
}

AxisymSurface centered_sphere(int n, double r0)
{
    if (!(r0 > 0.0)) throw std::invalid_argument("centered_sphere: r0 must be positive");
    std::ostringstream os;
    os << "centered_sphere(r0=" << r0 << ")";
    return AxisymSurface(n, ConstantProfile{r0}, os.str());
}

AxisymSurface offset_sphere(int n, double R, double d)
{
    if (!(d >= 0.0) || !(d < R)) throw std::invalid_argument("offset_sphere: need 0 <= d < R");
    std::ostringstream os;
    os << "offset_sphere(R=" << R << ";d=" << d << ")";
    return AxisymSurface(n, OffsetProfile{R, d}, os.str());
}

AxisymSurface perturbed_sphere(int n, double r0, double eps, int mode)
{
    if (!(r0 > 0.0)) throw std::invalid_argument("perturbed_sphere: r0 must be positive");
    if (mode < 0) throw std::invalid_argument("perturbed_sphere: negative mode");
    std::ostringstream os;
    os << "perturbed_sphere(r0=" << r0 << ";eps=" << eps << ";mode=" << mode << ")";
    return AxisymSurface(n, LegendreProfile{r0, eps, mode}, os.str());
}

AxisymSurface cosine_surface(int n, std::vector<double> coeffs, std::string label)
{
    if (coeffs.empty()) throw std::invalid_argument("cosine_surface: no coefficients");
    return AxisymSurface(n, CosineProfile{std::move(coeffs)}, std::move(label));
}

double min_principal_curvature(const AxisymSurface& s, const QuadratureRule& rule)
{
    double k = INFINITY;
    for (double t : rule.nodes()) {
        const SurfaceSample p = s.sample(t);
        k = std::min({k, p.kappa_polar, p.kappa_azimuthal});
    }
    return k;
}

bool horospherical_convex(const AxisymSurface& s, double tol, const QuadratureRule& rule)
{
    return min_principal_curvature(s, rule) >= 1.0 - tol;
}

bool horospherical_convex(const AxisymSurface& s, double tol)
{
    return horospherical_convex(s, tol, QuadratureRule(128, s.n()));
}

bool convex(const AxisymSurface& s, const QuadratureRule& rule)
{
    return min_principal_curvature(s, rule) > 0.0;
}

}  // namespace gbc
