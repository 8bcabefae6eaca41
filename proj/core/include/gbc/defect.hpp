#pragma once

#include <ostream>
#include <string>

namespace gbc {

inline constexpr double kEqualityTolerance = 1e-7;

struct Defect {
    double lhs = 0.0;
    double rhs = 0.0;
    double defect = 0.0;
    double relative = 0.0;
    bool equality_case = false;
};

Defect make_defect(double lhs, double rhs, double equality_tol = kEqualityTolerance);

// Shortest round-trip decimal form, fixed across runs.
std::string format_double(double x);

struct DefectRow {
    std::string name;
    int n = 0;
    int k = 0;
    std::string surface;
    Defect d;
};

void write_defect_header(std::ostream& os);
void write_defect_fields(std::ostream& os, const DefectRow& row);

}  // namespace gbc
