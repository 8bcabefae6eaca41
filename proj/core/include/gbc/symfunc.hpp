#pragma once

#include <Eigen/Dense>
#include <initializer_list>
#include <span>
#include <vector>

namespace gbc {

double binomial(int n, int k);

// Eigenvalue list (principal curvatures). Length >= 1, entries finite.
class Spectrum {
public:
    Spectrum() = default;
    explicit Spectrum(std::vector<double> values);
    Spectrum(std::initializer_list<double> values);

    int size() const { return static_cast<int>(values_.size()); }
    double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    std::span<const double> values() const { return values_; }

private:
    std::vector<double> values_;
};

// Operator B^i_j that is self-adjoint with respect to the metric g, i.e. g*B symmetric.
class SymmetricOperator {
public:
    explicit SymmetricOperator(Eigen::MatrixXd entries);
    SymmetricOperator(Eigen::MatrixXd entries, Eigen::MatrixXd metric);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXd& entries() const { return entries_; }
    const Eigen::MatrixXd& metric() const { return metric_; }
    Spectrum eigenvalues() const;

private:
    Eigen::MatrixXd entries_;
    Eigen::MatrixXd metric_;
};

// sigma_k via the characteristic-polynomial recursion. k > m gives 0.
double elementary_symmetric(int k, const Spectrum& s);
// All sigma_0..sigma_m at once.
std::vector<double> elementary_symmetric_all(const Spectrum& s);
// sigma_k of an operator through the trace recursion sigma_k = tr(T_{k-1} B)/k.
double elementary_symmetric(int k, const SymmetricOperator& B);

double normalized_p(int k, const Spectrum& s);

// T_k = sigma_k I - B T_{k-1}, T_0 = I.
SymmetricOperator newton_transform(int k, const SymmetricOperator& B);

bool garding_positive(int k, const Spectrum& s);

}  // namespace gbc
