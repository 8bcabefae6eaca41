#include "gbc/defect.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace gbc {

Defect make_defect(double lhs, double rhs, double equality_tol)
{
    Defect d;
    d.lhs = lhs;
    d.rhs = rhs;
    d.defect = lhs - rhs;
    d.relative = d.defect / std::max({std::abs(lhs), std::abs(rhs), 1.0});
    d.equality_case = std::abs(d.relative) < equality_tol;
    return d;
}

std::string format_double(double x)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void write_defect_header(std::ostream& os)
{
    os << "inequality,n,k,surface,lhs,rhs,defect,relative,equality_case";
}

void write_defect_fields(std::ostream& os, const DefectRow& row)
{
    os << row.name << ',' << row.n << ',' << row.k << ',' << row.surface << ',' << format_double(row.d.lhs) << ','
       << format_double(row.d.rhs) << ',' << format_double(row.d.defect) << ',' << format_double(row.d.relative)
       << ',' << (row.d.equality_case ? "true" : "false");
}

}  // namespace gbc
