#pragma once

#include <ostream>
#include <string>

#include "gbc/defect.hpp"
#include "gbc/integrals.hpp"

namespace gbc {

struct HypothesisFlags {
    bool horospherical = false;
    bool convex = false;
    bool star_shaped = false;
    bool energy_condition = false;  // used by penrose_check only
};

HypothesisFlags surface_flags(const SurfaceIntegrator& I);
std::string to_string(const HypothesisFlags& f);

struct InequalityReport {
    std::string name;
    int k = 0;
    Defect d;
    HypothesisFlags flags;
    // true when the statement is a theorem and its hypotheses hold for this input
    bool asserted = false;
};

InequalityReport af_unweighted(const SurfaceIntegrator& I, int k);
InequalityReport af_weighted_odd(const SurfaceIntegrator& I, int k);
InequalityReport weighted_dlg(const SurfaceIntegrator& I);
InequalityReport minkowski_bhw(const SurfaceIntegrator& I);
InequalityReport crucial_E(const SurfaceIntegrator& I, int k);
InequalityReport support_weighted(const SurfaceIntegrator& I, int k);
// Even-k weighted inequality; k = 0 is its missing base case. Never asserted.
InequalityReport even_conjecture(const SurfaceIntegrator& I, int k);
// Comparison with the area bound C(n-1,k)|Sigma| using the constant 1. Never asserted.
InequalityReport gallego_solanes(const SurfaceIntegrator& I, int k);
InequalityReport penrose_check(double mass, double horizon_area, int n, int k, bool energy_condition_ok);

struct InequalityRow {
    int n = 0;
    std::string surface;
    InequalityReport report;
};

void write_inequality_header(std::ostream& os);
void write_inequality_row(std::ostream& os, const InequalityRow& row);

}  // namespace gbc
