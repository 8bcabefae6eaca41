#include "gbc/tensor_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gbc/symfunc.hpp"

namespace gbc {

namespace {

struct SignedPerm {
    std::vector<int> p;
    int sign;
};

int permutation_sign(const std::vector<int>& p)
{
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return (inv % 2) ? -1 : 1;
}

const std::vector<SignedPerm>& permutations(int r)
{
    static std::vector<std::vector<SignedPerm>> cache = [] {
        std::vector<std::vector<SignedPerm>> c(9);
        for (int len = 0; len <= 8; ++len) {
            std::vector<int> p(static_cast<std::size_t>(len));
            std::iota(p.begin(), p.end(), 0);
            do {
                c[static_cast<std::size_t>(len)].push_back({p, permutation_sign(p)});
            } while (std::next_permutation(p.begin(), p.end()));
        }
        return c;
    }();
    if (r < 0 || r > 8) throw std::invalid_argument("permutations: length out of range");
    return cache[static_cast<std::size_t>(r)];
}

// Ordered tuples of r distinct indices in [0,m); pairs (2a,2a+1) increasing when pair_ordered.
template <class F>
void for_each_tuple(int m, int r, bool pair_ordered, F&& f)
{
    std::vector<int> t(static_cast<std::size_t>(r));
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == r) {
            f(t);
            return;
        }
        for (int i = 0; i < m; ++i) {
            if (used[i]) continue;
            if (pair_ordered && (pos % 2 == 1) && i < t[pos - 1]) continue;
            used[i] = 1;
            t[pos] = i;
            self(self, pos + 1);
            used[i] = 0;
        }
    };
    rec(rec, 0);
}

// R_{ij}^{ab}
Array4 mixed(const RiemannTensor& R)
{
    const int m = R.dim();
    const Eigen::MatrixXd& gi = R.metric().inv();
    Array4 half(m), out(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int c = 0; c < m; ++c)
                for (int b = 0; b < m; ++b) {
                    double s = 0.0;
                    for (int d = 0; d < m; ++d) s += R(i, j, c, d) * gi(d, b);
                    half(i, j, c, b) = s;
                }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    double s = 0.0;
                    for (int c = 0; c < m; ++c) s += gi(a, c) * half(i, j, c, b);
                    out(i, j, a, b) = s;
                }
    return out;
}

Array4 raise_last_two(const Array4& mixedP, const Eigen::MatrixXd& gi)
{
    const int m = mixedP.dim();
    Array4 half(m), out(m);
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t)
            for (int a = 0; a < m; ++a)
                for (int l = 0; l < m; ++l) {
                    double v = 0.0;
                    for (int b = 0; b < m; ++b) v += mixedP(s, t, a, b) * gi(b, l);
                    half(s, t, a, l) = v;
                }
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t)
            for (int j = 0; j < m; ++j)
                for (int l = 0; l < m; ++l) {
                    double v = 0.0;
                    for (int a = 0; a < m; ++a) v += half(s, t, a, l) * gi(a, j);
                    out(s, t, j, l) = v;
                }
    return out;
}

double metric_scale(const Array4& a) { return std::max(1.0, a.max_abs()); }

}  // namespace

MetricTensor::MetricTensor(Eigen::MatrixXd g) : g_(std::move(g))
{
    if (g_.rows() < 1 || g_.rows() != g_.cols()) throw std::invalid_argument("MetricTensor: not square");
    if ((g_ - g_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, g_.cwiseAbs().maxCoeff()))
        throw std::invalid_argument("MetricTensor: not symmetric");
    g_ = 0.5 * (g_ + g_.transpose());
    Eigen::LLT<Eigen::MatrixXd> llt(g_);
    if (llt.info() != Eigen::Success) throw std::invalid_argument("MetricTensor: not positive definite");
    g_inv_ = llt.solve(Eigen::MatrixXd::Identity(g_.rows(), g_.cols()));
    g_inv_ = 0.5 * (g_inv_ + g_inv_.transpose());
}

double Array4::max_abs() const
{
    double s = 0.0;
    for (double x : v_) s = std::max(s, std::abs(x));
    return s;
}

double RiemannTensor::symmetry_defect(const Array4& a)
{
    const int m = a.dim();
    double worst = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l) {
                    const double v = a(i, j, k, l);
                    worst = std::max(worst, std::abs(v + a(j, i, k, l)));
                    worst = std::max(worst, std::abs(v + a(i, j, l, k)));
                    worst = std::max(worst, std::abs(v - a(k, l, i, j)));
                    worst = std::max(worst, std::abs(v + a(j, k, i, l) + a(k, i, j, l)));
                }
    return worst;
}

RiemannTensor::RiemannTensor(Array4 values, MetricTensor metric)
    : values_(std::move(values)), metric_(std::move(metric))
{
    if (values_.dim() != metric_.dim()) throw std::invalid_argument("RiemannTensor: dimension mismatch");
    if (symmetry_defect(values_) > 1e-11 * metric_scale(values_))
        throw std::invalid_argument("RiemannTensor: curvature symmetries violated");
}

FourTensor::FourTensor(Array4 values, MetricTensor metric)
    : values_(std::move(values)), metric_(std::move(metric))
{
    if (values_.dim() != metric_.dim()) throw std::invalid_argument("FourTensor: dimension mismatch");
}

int generalized_delta(std::span<const int> upper, std::span<const int> lower)
{
    if (upper.size() != lower.size()) throw std::invalid_argument("generalized_delta: length mismatch");
    const std::size_t r = upper.size();
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a + 1; b < r; ++b)
            if (upper[a] == upper[b]) return 0;
    // lower must be a permutation of upper
    std::vector<int> p(r);
    for (std::size_t b = 0; b < r; ++b) {
        auto it = std::find(upper.begin(), upper.end(), lower[b]);
        if (it == upper.end()) return 0;
        p[b] = static_cast<int>(it - upper.begin());
    }
    std::vector<int> q = p;
    std::sort(q.begin(), q.end());
    if (std::adjacent_find(q.begin(), q.end()) != q.end()) return 0;
    return permutation_sign(p);
}

Array4 riemann_projection(const Array4& a)
{
    const int m = a.dim();
    Array4 b(m), r(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l) {
                    const double x = a(i, j, k, l) - a(j, i, k, l) - a(i, j, l, k) + a(j, i, l, k);
                    const double y = a(k, l, i, j) - a(l, k, i, j) - a(k, l, j, i) + a(l, k, j, i);
                    b(i, j, k, l) = (x + y) / 8.0;
                }
    // remove the totally antisymmetric part
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l)
                    r(i, j, k, l) = b(i, j, k, l) - (b(i, j, k, l) + b(i, k, l, j) + b(i, l, j, k)) / 3.0;
    return r;
}

double gauss_bonnet_Lk(const RiemannTensor& R, int k)
{
    if (k < 0) throw std::invalid_argument("gauss_bonnet_Lk: k < 0");
    const int m = R.dim();
    if (k == 0) return 1.0;
    if (2 * k > m) return 0.0;
    const Array4 Rm = mixed(R);
    const int r = 2 * k;
    const auto& perms = permutations(r);
    double total = 0.0;
    std::vector<int> low(static_cast<std::size_t>(r));
    for_each_tuple(m, r, true, [&](const std::vector<int>& up) {
        double acc = 0.0;
        for (const auto& sp : perms) {
            for (int q = 0; q < r; ++q) low[q] = up[sp.p[q]];
            double prod = 1.0;
            for (int a = 0; a < k && prod != 0.0; ++a)
                prod *= Rm(up[2 * a], up[2 * a + 1], low[2 * a], low[2 * a + 1]);
            acc += sp.sign * prod;
        }
        total += acc;
    });
    // pair ordering of the upper tuple removed 2^k, prefactor is 1/2^k
    return total;
}

RiemannTensor modified_riemann(const RiemannTensor& R)
{
    const int m = R.dim();
    const Eigen::MatrixXd& g = R.metric().g();
    Array4 out = R.values();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int s = 0; s < m; ++s)
                for (int l = 0; l < m; ++l) out(i, j, s, l) += g(i, s) * g(j, l) - g(i, l) * g(j, s);
    return RiemannTensor(std::move(out), R.metric());
}

RiemannTensor unmodified_riemann(const RiemannTensor& Rt)
{
    const int m = Rt.dim();
    const Eigen::MatrixXd& g = Rt.metric().g();
    Array4 out = Rt.values();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int s = 0; s < m; ++s)
                for (int l = 0; l < m; ++l) out(i, j, s, l) -= g(i, s) * g(j, l) - g(i, l) * g(j, s);
    return RiemannTensor(std::move(out), Rt.metric());
}

FourTensor P_tensor(const RiemannTensor& R0, int k, bool modified)
{
    const int m = R0.dim();
    if (k < 1 || 2 * k > m) throw std::invalid_argument("P_tensor: need 1 <= k and 2k <= m");
    const RiemannTensor R = modified ? modified_riemann(R0) : R0;
    const Array4 Rm = mixed(R);
    const int r = 2 * k;
    const auto& perms = permutations(r);
    Array4 Pm(m);
    std::vector<int> up(static_cast<std::size_t>(r)), low(static_cast<std::size_t>(r));
    for_each_tuple(m, r, false, [&](const std::vector<int>& tuple) {
        // tuple = (i_1..i_{2k-2}, s, t); pair ordering of the contracted part saves 2^{k-1}
        for (int a = 0; a + 1 < r - 2; a += 2)
            if (tuple[a] > tuple[a + 1]) return;
        up = tuple;
        const int s = up[r - 2], t = up[r - 1];
        for (const auto& sp : perms) {
            for (int q = 0; q < r; ++q) low[q] = up[sp.p[q]];
            double prod = sp.sign;
            for (int a = 0; a < k - 1 && prod != 0.0; ++a)
                prod *= Rm(up[2 * a], up[2 * a + 1], low[2 * a], low[2 * a + 1]);
            Pm(s, t, low[r - 2], low[r - 1]) += prod;
        }
    });
    // 2^{k-1} from pair ordering against the 1/2^k prefactor
    Array4 scaled(m);
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t)
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) scaled(s, t, a, b) = 0.5 * Pm(s, t, a, b);
    return FourTensor(raise_last_two(scaled, R.metric().inv()), R.metric());
}

double contract(const RiemannTensor& R, const FourTensor& P)
{
    const int m = R.dim();
    if (P.dim() != m) throw std::invalid_argument("contract: dimension mismatch");
    double s = 0.0;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                for (int d = 0; d < m; ++d) s += R(a, b, c, d) * P(a, b, c, d);
    return s;
}

Eigen::MatrixXd ricci(const RiemannTensor& R)
{
    const int m = R.dim();
    const Eigen::MatrixXd& gi = R.metric().inv();
    Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(m, m);
    for (int j = 0; j < m; ++j)
        for (int l = 0; l < m; ++l)
            for (int i = 0; i < m; ++i)
                for (int s = 0; s < m; ++s) ric(j, l) += gi(i, s) * R(i, j, s, l);
    return ric;
}

double scalar_curvature(const RiemannTensor& R)
{
    return (R.metric().inv() * ricci(R)).trace();
}

double riemann_norm_sq(const RiemannTensor& R)
{
    const Array4 Rm = mixed(R);
    const int m = R.dim();
    // R_{ijab} R^{ij ab} = R_{ij}^{ab} R_{ab}^{ij}
    double s = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) s += Rm(i, j, a, b) * Rm(a, b, i, j);
    return s;
}

double ricci_norm_sq(const RiemannTensor& R)
{
    const Eigen::MatrixXd& gi = R.metric().inv();
    const Eigen::MatrixXd ric = ricci(R);
    return (gi * ric * gi * ric).trace();
}

RiemannTensor assemble_two_eigenvalue(double a, double c, int n)
{
    if (n < 2) throw std::invalid_argument("assemble_two_eigenvalue: n < 2");
    Array4 v(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double K = (i == 0 || j == 0) ? a : c;
            v(i, j, i, j) = K;
            v(i, j, j, i) = -K;
        }
    return RiemannTensor(std::move(v), MetricTensor::identity(n));
}

double two_eigenvalue_Lk(double a, double c, int n, int k)
{
    if (k < 0) throw std::invalid_argument("two_eigenvalue_Lk: k < 0");
    if (k == 0) return 1.0;
    if (2 * k > n) return 0.0;
    double fact = 1.0;
    for (int i = 2; i <= 2 * k; ++i) fact *= i;
    return fact * (binomial(n - 1, 2 * k) * std::pow(c, k) + binomial(n - 1, 2 * k - 1) * a * std::pow(c, k - 1));
}

}  // namespace gbc
