#pragma once

#include <ostream>
#include <string>

#include "config.hpp"

namespace gbclab {

enum ExitCode { kOk = 0, kAssertionFailed = 1, kConfigError = 2 };

struct Output {
    std::string text;
    std::string file_name;  // name inside --out and the golden directory
    int failures = 0;
    std::string summary;    // one line for stderr
};

Output verify_identities(const RunConfig& c, int jobs);
Output verify_inequalities(const RunConfig& c, int jobs);
Output mass(const RunConfig& c, int jobs);
Output flow(const RunConfig& c);

}  // namespace gbclab
