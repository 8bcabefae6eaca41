#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace gbc {

class RotSymMetric;

class MetricTensor {
public:
    explicit MetricTensor(Eigen::MatrixXd g);
    static MetricTensor identity(int m) { return MetricTensor(Eigen::MatrixXd::Identity(m, m)); }

    int dim() const { return static_cast<int>(g_.rows()); }
    const Eigen::MatrixXd& g() const { return g_; }
    const Eigen::MatrixXd& inv() const { return g_inv_; }

private:
    Eigen::MatrixXd g_;
    Eigen::MatrixXd g_inv_;
};

// Dense m^4 array, flat row-major in (i,j,k,l).
class Array4 {
public:
    Array4() = default;
    explicit Array4(int m) : m_(m), v_(static_cast<std::size_t>(m * m * m * m), 0.0) {}

    int dim() const { return m_; }
    double& operator()(int i, int j, int k, int l) { return v_[index(i, j, k, l)]; }
    double operator()(int i, int j, int k, int l) const { return v_[index(i, j, k, l)]; }
    std::span<const double> data() const { return v_; }
    double max_abs() const;

private:
    std::size_t index(int i, int j, int k, int l) const
    {
        return static_cast<std::size_t>(((i * m_ + j) * m_ + k) * m_ + l);
    }
    int m_ = 0;
    std::vector<double> v_;
};

// R_{ijsl}, all indices down, sectional curvature K(e_i,e_j) = R_{ijij} for orthonormal e.
// Validated at construction: antisymmetry, pair symmetry, first Bianchi.
class RiemannTensor {
public:
    RiemannTensor(Array4 values, MetricTensor metric);

    int dim() const { return values_.dim(); }
    const Array4& values() const { return values_; }
    const MetricTensor& metric() const { return metric_; }
    double operator()(int i, int j, int k, int l) const { return values_(i, j, k, l); }

    // Worst violation of the algebraic symmetries, absolute.
    static double symmetry_defect(const Array4& a);

private:
    Array4 values_;
    MetricTensor metric_;
};

// Four-tensor with all indices up, e.g. P^{stjl}.
class FourTensor {
public:
    FourTensor(Array4 values, MetricTensor metric);

    int dim() const { return values_.dim(); }
    const Array4& values() const { return values_; }
    const MetricTensor& metric() const { return metric_; }
    double operator()(int i, int j, int k, int l) const { return values_(i, j, k, l); }

private:
    Array4 values_;
    MetricTensor metric_;
};

int generalized_delta(std::span<const int> upper, std::span<const int> lower);

// Projects an arbitrary 4-array onto the algebraic curvature tensors.
Array4 riemann_projection(const Array4& a);

double gauss_bonnet_Lk(const RiemannTensor& R, int k);
RiemannTensor modified_riemann(const RiemannTensor& R);
RiemannTensor unmodified_riemann(const RiemannTensor& Rt);
FourTensor P_tensor(const RiemannTensor& R, int k, bool modified);

// R_{stjl} P^{stjl}
double contract(const RiemannTensor& R, const FourTensor& P);

Eigen::MatrixXd ricci(const RiemannTensor& R);
double scalar_curvature(const RiemannTensor& R);
double riemann_norm_sq(const RiemannTensor& R);
double ricci_norm_sq(const RiemannTensor& R);

// Curvature operator with eigenvalue a on the planes e_0^e_i and c on e_i^e_j (i,j >= 1), identity metric.
RiemannTensor assemble_two_eigenvalue(double a, double c, int n);
double two_eigenvalue_Lk(double a, double c, int n, int k);

// Max-norm of a central-difference approximation of div P~_(k) at x = rho*e_1.
double divergence_residual(const RotSymMetric& metric, int k, double rho, double h);

}  // namespace gbc
