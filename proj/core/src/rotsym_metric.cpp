#include "gbc/rotsym_metric.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gbc/jet.hpp"

namespace gbc {

namespace {

double largest_root(const RotSymMetric& g)
{
    // psi -> +inf at infinity; scan down for the last sign change
    double hi = 1e3;
    if (g.psi(hi) <= 0.0) throw std::invalid_argument("custom metric: psi not positive at large rho");
    double prev = hi;
    for (double r = hi; r > 1e-8; r *= 0.97) {
        if (g.psi(r) <= 0.0) {
            double lo = r, up = prev;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + up);
                (g.psi(mid) > 0.0 ? up : lo) = mid;
            }
            return up;
        }
        prev = r;
    }
    return 0.0;
}

}  // namespace

RotSymMetric::RotSymMetric(MetricKind kind, int n, int k, double m, std::vector<PowerTerm> terms)
    : kind_(kind), n_(n), k_(k), m_(m), terms_(std::move(terms))
{
    if (n_ < 3) throw std::invalid_argument("RotSymMetric: n < 3");
    for (const auto& t : terms_) {
        if (!std::isfinite(t.coef) || !std::isfinite(t.power)) throw std::invalid_argument("RotSymMetric: non-finite term");
        if (t.power >= 2.0) throw std::invalid_argument("RotSymMetric: term power must be below 2");
    }
}

RotSymMetric RotSymMetric::ads_schwarzschild(int n, int k, double m)
{
    if (k < 1 || 2 * k >= n) throw std::invalid_argument("ads_schwarzschild: need 1 <= k and 2k < n");
    if (!(m > 0.0)) throw std::invalid_argument("ads_schwarzschild: m must be positive");
    RotSymMetric g(MetricKind::AdsSchwarzschild, n, k, m,
                   {{-2.0 * m, 2.0 - static_cast<double>(n) / k}});
    g.rho_min_ = horizon_radius(n, k, m);
    g.horizon_ = g.rho_min_;
    return g;
}

RotSymMetric RotSymMetric::hyperbolic(int n) { return RotSymMetric(MetricKind::Hyperbolic, n, 0, 0.0, {}); }

RotSymMetric RotSymMetric::custom(int n, std::vector<PowerTerm> terms)
{
    RotSymMetric g(MetricKind::Custom, n, 0, 0.0, std::move(terms));
    const double root = largest_root(g);
    g.horizon_ = root;
    g.rho_min_ = root > 0.0 ? root + 1e-6 : 0.0;
    return g;
}

std::string RotSymMetric::describe() const
{
    std::ostringstream os;
    switch (kind_) {
    case MetricKind::AdsSchwarzschild: os << "ads_schwarzschild(n=" << n_ << ",k=" << k_ << ",m=" << m_ << ")"; break;
    case MetricKind::Hyperbolic: os << "hyperbolic(n=" << n_ << ")"; break;
    case MetricKind::Custom:
        os << "custom(n=" << n_;
        for (const auto& t : terms_) os << ";" << t.coef << "*rho^" << t.power;
        os << ")";
        break;
    }
    return os.str();
}

double RotSymMetric::psi(double rho) const
{
    double s = 1.0 + rho * rho;
    for (const auto& t : terms_) s += t.coef * std::pow(rho, t.power);
    return s;
}

double RotSymMetric::dpsi(double rho) const
{
    double s = 2.0 * rho;
    for (const auto& t : terms_) s += t.coef * t.power * std::pow(rho, t.power - 1.0);
    return s;
}

double RotSymMetric::ddpsi(double rho) const
{
    double s = 2.0;
    for (const auto& t : terms_) s += t.coef * t.power * (t.power - 1.0) * std::pow(rho, t.power - 2.0);
    return s;
}

template <class T>
T RotSymMetric::psi_t(T rho, int order) const
{
    using std::pow;
    T s = order == 0 ? 1 + rho * rho : order == 1 ? 2 * rho : T(2);
    for (const auto& t : terms_) {
        const T p = static_cast<T>(t.power);
        const T c = order == 0 ? T(1) : order == 1 ? p : p * (p - 1);
        s += static_cast<T>(t.coef) * c * pow(rho, p - order);
    }
    return s;
}

template <class T>
BasicMetricJet<T> RotSymMetric::jet_impl(const Eigen::VectorXd& x) const
{
    using J1 = BasicJet<T>;
    using Mat = typename BasicMetricJet<T>::Mat;
    const int d = static_cast<int>(x.size());
    if (d != n_) throw std::invalid_argument("cartesian_jet: dimension mismatch");
    std::vector<J1> X;
    for (int i = 0; i < d; ++i) X.push_back(J1::variable(static_cast<T>(x(i)), i, d));
    J1 r2 = J1::constant(0, d);
    for (const auto& xi : X) r2 = r2 + xi * xi;
    const J1 rho = sqrt(r2);
    if (!(rho.v > rho_min_)) throw std::domain_error("cartesian_jet: point inside excluded region");
    const J1 psi_j = rho.compose(psi_t(rho.v, 0), psi_t(rho.v, 1), psi_t(rho.v, 2));
    const J1 A = (reciprocal(psi_j) - J1::constant(1, d)) / r2;

    BasicMetricJet<T> J;
    J.g = Mat::Zero(d, d);
    J.dg.assign(static_cast<std::size_t>(d), Mat::Zero(d, d));
    J.ddg.assign(static_cast<std::size_t>(d), std::vector<Mat>(static_cast<std::size_t>(d), Mat::Zero(d, d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            J1 gij = A * X[i] * X[j];
            if (i == j) gij = T(1) + gij;
            J.g(i, j) = gij.v;
            for (int a = 0; a < d; ++a) {
                J.dg[a](i, j) = gij.g(a);
                for (int b = 0; b < d; ++b) J.ddg[a][b](i, j) = gij.h(a, b);
            }
        }
    return J;
}

MetricJet RotSymMetric::cartesian_jet(const Eigen::VectorXd& x) const { return jet_impl<double>(x); }
MetricJetL RotSymMetric::cartesian_jet_extended(const Eigen::VectorXd& x) const { return jet_impl<long double>(x); }

double horizon_radius(int n, int k, double m)
{
    if (!(m > 0.0)) throw std::invalid_argument("horizon_radius: m must be positive");
    if (k < 1) throw std::invalid_argument("horizon_radius: k < 1");
    const double p = static_cast<double>(n) / k;
    auto f = [&](double r) { return std::pow(r, p) + std::pow(r, p - 2.0) - 2.0 * m; };
    auto df = [&](double r) { return p * std::pow(r, p - 1.0) + (p - 2.0) * std::pow(r, p - 3.0); };
    double lo = 0.0, hi = 1.0;
    while (f(hi) < 0.0) hi *= 2.0;
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    double r = 0.5 * (lo + hi);
    for (int it = 0; it < 3; ++it) r -= f(r) / df(r);
    return r;
}

}  // namespace gbc
