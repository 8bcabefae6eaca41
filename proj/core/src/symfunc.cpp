#include "gbc/symfunc.hpp"

#include <cmath>
#include <stdexcept>

namespace gbc {

double binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::round(r);
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values))
{
    if (values_.empty()) throw std::invalid_argument("Spectrum: empty");
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("Spectrum: non-finite value");
}

Spectrum::Spectrum(std::initializer_list<double> values) : Spectrum(std::vector<double>(values)) {}

SymmetricOperator::SymmetricOperator(Eigen::MatrixXd entries)
    : SymmetricOperator(entries, Eigen::MatrixXd::Identity(entries.rows(), entries.cols()))
{
}

SymmetricOperator::SymmetricOperator(Eigen::MatrixXd entries, Eigen::MatrixXd metric)
    : entries_(std::move(entries)), metric_(std::move(metric))
{
    const auto m = entries_.rows();
    if (m < 1 || entries_.cols() != m || metric_.rows() != m || metric_.cols() != m)
        throw std::invalid_argument("SymmetricOperator: shape mismatch");
    if ((metric_ - metric_.transpose()).norm() > 1e-12 * (1.0 + metric_.norm()))
        throw std::invalid_argument("SymmetricOperator: metric not symmetric");
    Eigen::LLT<Eigen::MatrixXd> llt(metric_);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("SymmetricOperator: metric not positive definite");
    Eigen::MatrixXd lowered = metric_ * entries_;
    if ((lowered - lowered.transpose()).norm() > 1e-12 * (1.0 + lowered.norm()))
        throw std::invalid_argument("SymmetricOperator: not self-adjoint for metric");
}

Spectrum SymmetricOperator::eigenvalues() const
{
    // g^{1/2} B g^{-1/2} is symmetric
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gs(metric_);
    Eigen::MatrixXd root = gs.operatorSqrt();
    Eigen::MatrixXd iroot = gs.operatorInverseSqrt();
    Eigen::MatrixXd S = root * entries_ * iroot;
    S = 0.5 * (S + S.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = es.eigenvalues();
    return Spectrum(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

std::vector<double> elementary_symmetric_all(const Spectrum& s)
{
    const int m = s.size();
    std::vector<double> e(static_cast<std::size_t>(m) + 1, 0.0);
    e[0] = 1.0;
    for (int i = 0; i < m; ++i) {
        const double x = s[i];
        for (int j = i + 1; j >= 1; --j) e[j] += x * e[j - 1];
    }
    return e;
}

double elementary_symmetric(int k, const Spectrum& s)
{
    if (k < 0) throw std::invalid_argument("elementary_symmetric: k < 0");
    if (k > s.size()) return 0.0;
    const int m = s.size();
    std::vector<double> e(static_cast<std::size_t>(k) + 1, 0.0);
    e[0] = 1.0;
    for (int i = 0; i < m; ++i) {
        const double x = s[i];
        for (int j = std::min(i + 1, k); j >= 1; --j) e[j] += x * e[j - 1];
    }
    return e[k];
}

double elementary_symmetric(int k, const SymmetricOperator& B)
{
    if (k < 0) throw std::invalid_argument("elementary_symmetric: k < 0");
    const int m = B.dim();
    if (k == 0) return 1.0;
    if (k > m) return 0.0;
    const Eigen::MatrixXd& b = B.entries();
    Eigen::MatrixXd T = Eigen::MatrixXd::Identity(m, m);
    double sigma = 0.0;
    for (int j = 1; j <= k; ++j) {
        sigma = (T * b).trace() / j;
        T = sigma * Eigen::MatrixXd::Identity(m, m) - b * T;
    }
    return sigma;
}

double normalized_p(int k, const Spectrum& s)
{
    if (k < 0) throw std::invalid_argument("normalized_p: k < 0");
    if (k > s.size()) return 0.0;
    return elementary_symmetric(k, s) / binomial(s.size(), k);
}

SymmetricOperator newton_transform(int k, const SymmetricOperator& B)
{
    const int m = B.dim();
    if (k < 0 || k > m - 1) throw std::invalid_argument("newton_transform: k out of range");
    const Eigen::MatrixXd& b = B.entries();
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(m, m);
    Eigen::MatrixXd T = I;
    for (int j = 1; j <= k; ++j) {
        const double sigma = (T * b).trace() / j;
        T = sigma * I - b * T;
    }
    return SymmetricOperator(T, B.metric());
}

bool garding_positive(int k, const Spectrum& s)
{
    if (k < 1 || k > s.size()) throw std::invalid_argument("garding_positive: k out of range");
    const auto e = elementary_symmetric_all(s);
    for (int j = 1; j <= k; ++j)
        if (!(e[j] > 0.0)) return false;
    return true;
}

}  // namespace gbc
