#include "gbc/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace gbc {

namespace {

double beta_sq(int j, double a)
{
    const double t = 2.0 * j + 2.0 * a;
    return j * (j + 2.0 * a) / ((t + 1.0) * (t - 1.0));
}

}  // namespace

GaussRule gauss_gegenbauer(int N, double a)
{
    if (N < 1) throw std::invalid_argument("gauss_gegenbauer: N < 1");
    if (!(a >= 0.0)) throw std::invalid_argument("gauss_gegenbauer: alpha < 0");
    const double mu0 = std::exp(std::lgamma(0.5) + std::lgamma(a + 1.0) - std::lgamma(a + 1.5));

    std::vector<double> b(static_cast<std::size_t>(N) + 1, 0.0);
    for (int j = 1; j <= N; ++j) b[j] = std::sqrt(beta_sq(j, a));

    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(N, N);
    for (int j = 1; j < N; ++j) T(j, j - 1) = T(j - 1, j) = b[j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T, Eigen::EigenvaluesOnly);

    GaussRule rule;
    rule.x.resize(static_cast<std::size_t>(N));
    rule.w.resize(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
        double x = es.eigenvalues()(i);
        double sum = 0.0;
        // Newton polish on the orthonormal p_N, then Christoffel numbers
        for (int it = 0; it < 3; ++it) {
            double pm = 0.0, p = 1.0 / std::sqrt(mu0), dpm = 0.0, dp = 0.0;
            sum = p * p;
            for (int j = 0; j < N; ++j) {
                const double pn = (x * p - b[j] * pm) / b[j + 1];
                const double dpn = (p + x * dp - b[j] * dpm) / b[j + 1];
                pm = p;
                p = pn;
                dpm = dp;
                dp = dpn;
                if (j + 1 < N) sum += p * p;
            }
            if (dp != 0.0) x -= p / dp;
        }
        double pm = 0.0, p = 1.0 / std::sqrt(mu0);
        sum = p * p;
        for (int j = 0; j + 1 < N; ++j) {
            const double pn = (x * p - b[j] * pm) / b[j + 1];
            pm = p;
            p = pn;
            sum += p * p;
        }
        rule.x[i] = x;
        rule.w[i] = 1.0 / sum;
    }
    return rule;
}

QuadratureRule::QuadratureRule(int N, int n) : n_(n)
{
    if (n < 3) throw std::invalid_argument("QuadratureRule: n < 3");
    const GaussRule g = gauss_gegenbauer(N, 0.5 * (n - 3));
    theta_.resize(g.x.size());
    w_ = g.w;
    for (std::size_t i = 0; i < g.x.size(); ++i) theta_[i] = std::acos(g.x[i]);
}

}  // namespace gbc
