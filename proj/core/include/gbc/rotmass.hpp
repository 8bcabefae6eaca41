#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "gbc/rotsym_metric.hpp"
#include "gbc/symfunc.hpp"

namespace gbc {

struct SectionalPair {
    double a;  // radial planes
    double c;  // tangential planes
};

// Sectional curvatures of the modified tensor R + g^g.
SectionalPair modified_sectional_pair(const RotSymMetric& g, double rho);
double tilde_Lk_metric(const RotSymMetric& g, int k, double rho);

// Normalizing constant (n-2k)! / (2^{k-1} (n-1)! omega_{n-1}).
double mass_constant(int n, int k);

// Radial graph f(rho) in the static slab whose induced metric is g.
double graph_height_derivative(const RotSymMetric& g, double rho);
double graph_height_second_derivative(const RotSymMetric& g, double rho);
// Radial eigenvalue first, then n-1 tangential ones.
Spectrum graph_shape_spectrum(const RotSymMetric& g, double rho);

// Integrand of the mass integral at the Cartesian point x, contracted with the outward unit normal of the
// coordinate sphere through x.
double flux_integrand(const RotSymMetric& g, int k, const Eigen::VectorXd& x);
double flux_density(const RotSymMetric& g, int k, double rho);
double mass_flux(const RotSymMetric& g, int k, double R);

double divergence_identity_residual(const RotSymMetric& g, int k, double rho, double h);

struct MassEstimate {
    std::vector<double> radii;
    std::vector<double> flux;
    double limit = 0.0;
    double order = 0.0;        // detected decay power, infinity when converged at roundoff
    double error = 0.0;
    bool converged_at_roundoff = false;
    std::pair<double, double> decay_window;  // (n/(k+1), n/k]
};

MassEstimate mass_limit(const RotSymMetric& g, int k, const std::vector<double>& radii);

struct GraphMassParts {
    double horizon_radius;
    double horizon_term;
    double bulk_term;
    double total;
};

GraphMassParts mass_via_graph_decomposition(const RotSymMetric& g, int k, int bulk_nodes = 64);

double penrose_rhs(double area, int n, int k);
double horizon_area(const RotSymMetric& g);

}  // namespace gbc
