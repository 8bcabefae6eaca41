#include "gbc/hyperbolic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gbc {

PolarPoint::PolarPoint(double s, Eigen::VectorXd direction) : s_(s), dir_(std::move(direction))
{
    if (!(s_ >= 0.0)) throw std::invalid_argument("PolarPoint: negative distance");
    if (dir_.size() < 1 || std::abs(dir_.norm() - 1.0) > 1e-12) throw std::invalid_argument("PolarPoint: direction not unit");
}

PolarPoint PolarPoint::axial(double s, double theta, int n)
{
    Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
    d(0) = std::cos(theta);
    if (n > 1) d(1) = std::sin(theta);
    return PolarPoint(s, d);
}

HyperboloidPoint::HyperboloidPoint(Eigen::VectorXd x) : x_(std::move(x))
{
    if (x_.size() < 2) throw std::invalid_argument("HyperboloidPoint: too few coordinates");
    if (!(x_(0) > 0.0) || std::abs(minkowski(x_, x_) + 1.0) > 1e-10 * std::max(1.0, x_(0) * x_(0)))
        throw std::invalid_argument("HyperboloidPoint: not on the upper sheet");
}

double minkowski(const Eigen::VectorXd& a, const Eigen::VectorXd& b)
{
    return -a(0) * b(0) + a.tail(a.size() - 1).dot(b.tail(b.size() - 1));
}

double potential_V(double s)
{
    if (!(s >= 0.0)) throw std::invalid_argument("potential_V: negative distance");
    return std::cosh(s);
}

HyperboloidPoint to_hyperboloid(const PolarPoint& p)
{
    Eigen::VectorXd x(p.n() + 1);
    x(0) = std::cosh(p.s());
    x.tail(p.n()) = std::sinh(p.s()) * p.direction();
    return HyperboloidPoint(x);
}

PolarPoint from_hyperboloid(const HyperboloidPoint& X)
{
    const Eigen::VectorXd& x = X.coords();
    const Eigen::VectorXd sp = x.tail(x.size() - 1);
    const double norm = sp.norm();
    const double s = std::asinh(norm);
    if (norm == 0.0) {
        Eigen::VectorXd d = Eigen::VectorXd::Zero(sp.size());
        d(0) = 1.0;
        return PolarPoint(0.0, d);
    }
    return PolarPoint(s, sp / norm);
}

double hyperboloid_distance(const HyperboloidPoint& a, const HyperboloidPoint& b)
{
    return std::acosh(std::max(1.0, -minkowski(a.coords(), b.coords())));
}

double rho_of_r(double r)
{
    if (!(r >= 0.0)) throw std::invalid_argument("rho_of_r: negative r");
    return std::sinh(r);
}

double r_of_rho(double rho)
{
    if (!(rho >= 0.0)) throw std::invalid_argument("r_of_rho: negative rho");
    return std::asinh(rho);
}

double sphere_volume_constant(int n)
{
    if (n < 1) throw std::invalid_argument("sphere_volume_constant: n < 1");
    return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

}  // namespace gbc
