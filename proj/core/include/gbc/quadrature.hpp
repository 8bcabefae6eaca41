#pragma once

#include <vector>

namespace gbc {

// Gauss rule on [-1,1] for the weight (1-x^2)^alpha.
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};

GaussRule gauss_gegenbauer(int N, double alpha);
inline GaussRule gauss_legendre(int N) { return gauss_gegenbauer(N, 0.0); }

// Rule in theta on (0,pi) for integrals of f(theta) sin^{n-2}(theta) dtheta, via x = cos(theta).
class QuadratureRule {
public:
    QuadratureRule(int N, int n);

    int size() const { return static_cast<int>(theta_.size()); }
    int n() const { return n_; }
    const std::vector<double>& nodes() const { return theta_; }
    const std::vector<double>& weights() const { return w_; }

private:
    int n_;
    std::vector<double> theta_;
    std::vector<double> w_;
};

}  // namespace gbc
