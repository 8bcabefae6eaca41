#include "gbc/metric_field.hpp"

#include <cmath>
#include <stdexcept>

#include "gbc/rotsym_metric.hpp"

namespace gbc {

template <class T>
BasicChristoffel<T> christoffel(const BasicMetricJet<T>& J)
{
    using Mat = typename BasicMetricJet<T>::Mat;
    const int n = J.dim();
    const Mat gi = J.g.inverse();
    BasicChristoffel<T> G(static_cast<std::size_t>(n), Mat::Zero(n, n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                T s = 0;
                for (int d = 0; d < n; ++d) s += gi(a, d) * (J.dg[b](d, c) + J.dg[c](d, b) - J.dg[d](b, c));
                G[a](b, c) = s / 2;
            }
    return G;
}

template <class T>
RiemannTensor riemann(const BasicMetricJet<T>& J)
{
    using Mat = typename BasicMetricJet<T>::Mat;
    const int n = J.dim();
    const Mat gi = J.g.inverse();
    const BasicChristoffel<T> G = christoffel(J);

    // first-kind symbols and their derivatives
    auto gamma1 = [&](int d, int b, int c) { return (J.dg[b](d, c) + J.dg[c](d, b) - J.dg[d](b, c)) / 2; };
    auto dgamma1 = [&](int l, int d, int b, int c) {
        return (J.ddg[l][b](d, c) + J.ddg[l][c](d, b) - J.ddg[l][d](b, c)) / 2;
    };
    // dG[l][a](b,c) = d_l Gamma^a_{bc}
    std::vector<BasicChristoffel<T>> dG(static_cast<std::size_t>(n),
                                        BasicChristoffel<T>(static_cast<std::size_t>(n), Mat::Zero(n, n)));
    for (int l = 0; l < n; ++l) {
        const Mat dgi = -gi * J.dg[l] * gi;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    T s = 0;
                    for (int d = 0; d < n; ++d) s += dgi(a, d) * gamma1(d, b, c) + gi(a, d) * dgamma1(l, d, b, c);
                    dG[l][a](b, c) = s;
                }
    }
    // R^a_{bcd} e_a = R(e_c, e_d) e_b
    std::vector<T> up(static_cast<std::size_t>(n * n * n * n));
    auto at = [n](int a, int b, int c, int d) { return static_cast<std::size_t>(((a * n + b) * n + c) * n + d); };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    T s = dG[c][a](d, b) - dG[d][a](c, b);
                    for (int e = 0; e < n; ++e) s += G[a](c, e) * G[e](d, b) - G[a](d, e) * G[e](c, b);
                    up[at(a, b, c, d)] = s;
                }
    // <R(e_c,e_d)e_b, e_a> with (a,b,c,d) -> slots (c,d,a,b) gives R_{ijij} = K
    Array4 out(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    T s = 0;
                    for (int e = 0; e < n; ++e) s += J.g(a, e) * up[at(e, b, c, d)];
                    out(c, d, a, b) = static_cast<double>(s);
                }
    return RiemannTensor(std::move(out), MetricTensor(J.g.template cast<double>()));
}

template BasicChristoffel<double> christoffel(const BasicMetricJet<double>&);
template BasicChristoffel<long double> christoffel(const BasicMetricJet<long double>&);
template RiemannTensor riemann(const BasicMetricJet<double>&);
template RiemannTensor riemann(const BasicMetricJet<long double>&);

RiemannTensor pull_back(const RiemannTensor& R, const Eigen::MatrixXd& J)
{
    const int n = R.dim();
    Array4 cur = R.values();
    for (int slot = 0; slot < 4; ++slot) {
        Array4 next(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        int idx[4] = {i, j, k, l};
                        double s = 0.0;
                        for (int q = 0; q < n; ++q) {
                            int src[4] = {i, j, k, l};
                            src[slot] = q;
                            s += cur(src[0], src[1], src[2], src[3]) * J(q, idx[slot]);
                        }
                        next(i, j, k, l) = s;
                    }
        cur = std::move(next);
    }
    Eigen::MatrixXd g = J.transpose() * R.metric().g() * J;
    return RiemannTensor(std::move(cur), MetricTensor(0.5 * (g + g.transpose())));
}

double divergence_residual(const RotSymMetric& metric, int k, double rho, double h)
{
    const int n = metric.n();
    if (!(rho > metric.rho_min())) throw std::domain_error("divergence_residual: rho outside metric domain");
    if (!(h > 0.0) || rho - h <= metric.rho_min()) throw std::domain_error("divergence_residual: bad step");
    auto P_at = [&](const Eigen::VectorXd& x) { return P_tensor(riemann(metric.cartesian_jet_extended(x)), k, true); };

    Eigen::VectorXd x0 = Eigen::VectorXd::Zero(n);
    x0(0) = rho;
    const MetricJet J0 = metric.cartesian_jet(x0);
    const Christoffel G = christoffel(J0);
    const FourTensor P0 = P_at(x0);

    std::vector<Array4> dP;
    for (int s = 0; s < n; ++s) {
        Eigen::VectorXd xp = x0, xm = x0;
        xp(s) += h;
        xm(s) -= h;
        const FourTensor Pp = P_at(xp), Pm = P_at(xm);
        Array4 d(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int e = 0; e < n; ++e) d(a, b, c, e) = (Pp(a, b, c, e) - Pm(a, b, c, e)) / (2.0 * h);
        dP.push_back(std::move(d));
    }
    double worst = 0.0;
    for (int t = 0; t < n; ++t)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                double div = 0.0;
                for (int s = 0; s < n; ++s) {
                    div += dP[s](s, t, j, l);
                    for (int a = 0; a < n; ++a) {
                        div += G[s](s, a) * P0(a, t, j, l);
                        div += G[t](s, a) * P0(s, a, j, l);
                        div += G[j](s, a) * P0(s, t, a, l);
                        div += G[l](s, a) * P0(s, t, j, a);
                    }
                }
                worst = std::max(worst, std::abs(div));
            }
    return worst;
}

}  // namespace gbc
