#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace gbc {

// Second-order forward-mode jet: value, gradient and Hessian in d variables.
template <class T>
struct BasicJet {
    using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;
    using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

    T v = 0;
    Vec g;
    Mat h;

    static BasicJet constant(T c, int d) { return {c, Vec::Zero(d), Mat::Zero(d, d)}; }
    static BasicJet variable(T x, int i, int d)
    {
        BasicJet j = constant(x, d);
        j.g(i) = 1;
        return j;
    }

    // f(this) given f, f', f'' at v
    BasicJet compose(T f0, T f1, T f2) const { return {f0, f1 * g, f1 * h + f2 * g * g.transpose()}; }
};

using Jet = BasicJet<double>;

template <class T>
BasicJet<T> operator+(const BasicJet<T>& a, const BasicJet<T>& b)
{
    return {a.v + b.v, a.g + b.g, a.h + b.h};
}
template <class T>
BasicJet<T> operator-(const BasicJet<T>& a, const BasicJet<T>& b)
{
    return {a.v - b.v, a.g - b.g, a.h - b.h};
}
template <class T>
BasicJet<T> operator*(const BasicJet<T>& a, const BasicJet<T>& b)
{
    return {a.v * b.v, a.v * b.g + b.v * a.g, a.v * b.h + b.v * a.h + a.g * b.g.transpose() + b.g * a.g.transpose()};
}
template <class T>
BasicJet<T> operator*(T s, const BasicJet<T>& a)
{
    return {s * a.v, s * a.g, s * a.h};
}
template <class T>
BasicJet<T> operator+(T s, const BasicJet<T>& a)
{
    return {s + a.v, a.g, a.h};
}
template <class T>
BasicJet<T> reciprocal(const BasicJet<T>& a)
{
    const T iv = 1 / a.v;
    return a.compose(iv, -iv * iv, 2 * iv * iv * iv);
}
template <class T>
BasicJet<T> operator/(const BasicJet<T>& a, const BasicJet<T>& b)
{
    return a * reciprocal(b);
}
template <class T>
BasicJet<T> sqrt(const BasicJet<T>& a)
{
    using std::sqrt;
    const T s = sqrt(a.v);
    return a.compose(s, T(0.5) / s, T(-0.25) / (s * a.v));
}

}  // namespace gbc
