#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbc/defect.hpp"
#include "gbc/hypersurface.hpp"
#include "gbc/integrals.hpp"

namespace gbc {

class FlowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FlowPolicy {
    int modes = 64;
    int nodes = 128;          // quadrature nodes for diagnostics
    double dt = 1e-3;         // requested step, further capped
    double cap_factor = 16.0; // dt <= cap_factor * (min sinh r / max cosh r) / modes^2
    double stop_radius = 0.02;
    double tail_tol = 1e-10;
    int max_halvings = 6;
    long max_steps = 2000000;
};

// Profile r(theta,t) as a truncated cosine series.
class FlowState {
public:
    FlowState(int n, double t, std::vector<double> coeffs);
    static FlowState from_surface(const AxisymSurface& s, int modes);

    int n() const { return n_; }
    double t() const { return t_; }
    const std::vector<double>& coeffs() const { return a_; }
    AxisymSurface surface() const;
    double tail_ratio() const;

private:
    int n_;
    double t_;
    std::vector<double> a_;
};

// dt may be negative (backward flow) for differencing.
FlowState step(const FlowState& s, double dt, double tail_tol = 1e-10);
double dt_cap(const FlowState& s, double cap_factor);

std::map<std::string, double> evolution_identity_residuals(const FlowState& s, double dt, int nodes = 128);

struct EDerivativeTerms {
    double group1;  // int V^2 p_{k+2} - V^2 p_k - p_{k+2}
    double group2;  // int u V p_{k+1} - V^2 p_k
    double group3;  // int u V p_{k+1} - u V p_{k-1} - u p_{k+1}/V
    double total;   // -(n-k-2) g1 - 2 g2 - k g3
};
EDerivativeTerms dE_dt_analytic(const SurfaceIntegrator& I, int k);
Defect dE_dt_check(const FlowState& s, int k, double dt, int nodes = 128);

struct FlowRow {
    double t, E, area, volume, r_min, r_max, kappa_min;
    bool horo;
    double dEdt_fd, dEdt_analytic;
    double E_scale;
};

struct FlowTrace {
    int n = 0;
    int k = 0;
    std::vector<FlowRow> rows;
    std::string stop_reason;
    double extinction_estimate = 0.0;
};

FlowTrace run(const AxisymSurface& initial, int k, double T_max, const FlowPolicy& policy);

void write_flow_csv(std::ostream& os, const FlowTrace& trace);

}  // namespace gbc
