#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "gbc/metric_field.hpp"

namespace gbc {

enum class MetricKind { AdsSchwarzschild, Hyperbolic, Custom };

struct PowerTerm {
    double coef;
    double power;
};

// g = d rho^2 / psi(rho) + rho^2 dTheta^2 with psi = 1 + rho^2 + sum coef * rho^power.
class RotSymMetric {
public:
    static RotSymMetric ads_schwarzschild(int n, int k, double m);
    static RotSymMetric hyperbolic(int n);
    static RotSymMetric custom(int n, std::vector<PowerTerm> terms);

    MetricKind kind() const { return kind_; }
    int n() const { return n_; }
    int k() const { return k_; }
    double mass_parameter() const { return m_; }
    const std::vector<PowerTerm>& terms() const { return terms_; }
    double rho_min() const { return rho_min_; }
    // Largest zero of psi, 0 when psi has none.
    double horizon() const { return horizon_; }
    std::string describe() const;

    double psi(double rho) const;
    double dpsi(double rho) const;
    double ddpsi(double rho) const;

    // Metric jet in Cartesian coordinates of R^n, g_ij = delta_ij + (1/psi - 1) x_i x_j / rho^2.
    MetricJet cartesian_jet(const Eigen::VectorXd& x) const;
    MetricJetL cartesian_jet_extended(const Eigen::VectorXd& x) const;

private:
    template <class T>
    BasicMetricJet<T> jet_impl(const Eigen::VectorXd& x) const;
    template <class T>
    T psi_t(T rho, int order) const;

    RotSymMetric(MetricKind kind, int n, int k, double m, std::vector<PowerTerm> terms);

    MetricKind kind_;
    int n_;
    int k_;
    double m_;
    std::vector<PowerTerm> terms_;
    double rho_min_ = 0.0;
    double horizon_ = 0.0;
};

// Positive root of rho^{n/k} + rho^{n/k-2} = 2m.
double horizon_radius(int n, int k, double m);

}  // namespace gbc
