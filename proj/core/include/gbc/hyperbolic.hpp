#pragma once

#include <Eigen/Dense>

namespace gbc {

// Geodesic polar point: distance s from the base point and a unit direction in R^n.
class PolarPoint {
public:
    PolarPoint(double s, Eigen::VectorXd direction);
    // Axisymmetric convenience: direction (cos theta, sin theta, 0, ...) in R^n.
    static PolarPoint axial(double s, double theta, int n);

    double s() const { return s_; }
    const Eigen::VectorXd& direction() const { return dir_; }
    int n() const { return static_cast<int>(dir_.size()); }

private:
    double s_;
    Eigen::VectorXd dir_;
};

// Point of the upper sheet of <x,x> = -1 in Minkowski space R^{1,n}.
class HyperboloidPoint {
public:
    explicit HyperboloidPoint(Eigen::VectorXd x);
    const Eigen::VectorXd& coords() const { return x_; }
    int n() const { return static_cast<int>(x_.size()) - 1; }

private:
    Eigen::VectorXd x_;
};

double minkowski(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

double potential_V(double s);
HyperboloidPoint to_hyperboloid(const PolarPoint& p);
PolarPoint from_hyperboloid(const HyperboloidPoint& x);
double hyperboloid_distance(const HyperboloidPoint& a, const HyperboloidPoint& b);

double rho_of_r(double r);
double r_of_rho(double rho);

// omega_{n-1}, volume of the unit S^{n-1}.
double sphere_volume_constant(int n);

}  // namespace gbc
