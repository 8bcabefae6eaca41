#pragma once

#include <functional>
#include <vector>

#include "gbc/defect.hpp"
#include "gbc/hypersurface.hpp"
#include "gbc/quadrature.hpp"

namespace gbc {

enum class Weight { One, V, U, V2, UV, U2, InvV, UOverV };
enum class Proposition { Eq2, Eq4, Eq1Prop1k, Eq2Prop1k, Eq2k };

const char* to_string(Proposition p);

// Samples and curvature functions of a surface at the nodes of a rule.
class SurfaceIntegrator {
public:
    SurfaceIntegrator(const AxisymSurface& s, const QuadratureRule& rule);

    int n() const { return n_; }
    const std::vector<SurfaceSample>& samples() const { return samples_; }

    double integrate(const std::function<double(const SurfaceSample&)>& f) const;
    // f receives the sample and its normalized curvatures p_0..p_{n-1}
    double integrate(const std::function<double(const SurfaceSample&, const std::vector<double>&)>& f) const;

    double area() const;
    double sigma_integral(int k) const;
    double weighted(int k, Weight w) const;
    double min_curvature() const;

private:
    int n_;
    std::vector<double> w_;
    std::vector<SurfaceSample> samples_;
    std::vector<std::vector<double>> p_;
};

double weight_value(Weight w, const SurfaceSample& s);

double surface_integral(const AxisymSurface& s, const std::function<double(const SurfaceSample&)>& f,
                        const QuadratureRule& rule);
double curvature_integral(const AxisymSurface& s, int k, const QuadratureRule& rule);
double weighted_integral(const AxisymSurface& s, int k, Weight w, const QuadratureRule& rule);

Defect minkowski_residual(const SurfaceIntegrator& I, int k);
Defect minkowski_residual(const AxisymSurface& s, int k, const QuadratureRule& rule);

Defect proposition_defect(const SurfaceIntegrator& I, int k, Proposition which);
Defect proposition_defect(const AxisymSurface& s, int k, Proposition which, const QuadratureRule& rule);
// Admissible k range of each statement.
int proposition_k_min(Proposition which);
int proposition_k_max(Proposition which, int n);

double E_functional(const SurfaceIntegrator& I, int k);
double E_functional(const AxisymSurface& s, int k, const QuadratureRule& rule);
// Sum of the absolute values of the three terms of E.
double E_scale(const SurfaceIntegrator& I, int k);

double enclosed_volume(const AxisymSurface& s, const QuadratureRule& rule);
// W_0..W_n
std::vector<double> quermassintegrals(const SurfaceIntegrator& I, double volume);
double quermassintegral(const AxisymSurface& s, int k, const QuadratureRule& rule);

}  // namespace gbc
