#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gbc/tensor_kernel.hpp"

namespace gbc {

// Metric components with exact first and second coordinate derivatives at a point.
template <class T>
struct BasicMetricJet {
    using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
    Mat g;
    std::vector<Mat> dg;                // dg[k](i,j) = d_k g_ij
    std::vector<std::vector<Mat>> ddg;  // ddg[k][l](i,j) = d_k d_l g_ij

    int dim() const { return static_cast<int>(g.rows()); }
};

using MetricJet = BasicMetricJet<double>;
// Extended precision variant for metrics whose curvature is a small perturbation of a large background.
using MetricJetL = BasicMetricJet<long double>;

// gamma[a](b,c) = Gamma^a_{bc}
template <class T>
using BasicChristoffel = std::vector<Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>>;
using Christoffel = BasicChristoffel<double>;

template <class T>
BasicChristoffel<T> christoffel(const BasicMetricJet<T>& J);
// Curvature is accumulated in T and rounded to double at the end.
template <class T>
RiemannTensor riemann(const BasicMetricJet<T>& J);

extern template BasicChristoffel<double> christoffel(const BasicMetricJet<double>&);
extern template BasicChristoffel<long double> christoffel(const BasicMetricJet<long double>&);
extern template RiemannTensor riemann(const BasicMetricJet<double>&);
extern template RiemannTensor riemann(const BasicMetricJet<long double>&);

// Pulls back an all-lower curvature tensor along a linear change of frame: R'_{abcd} = R_{ijkl} J^i_a J^j_b J^k_c J^l_d.
RiemannTensor pull_back(const RiemannTensor& R, const Eigen::MatrixXd& J);

}  // namespace gbc
