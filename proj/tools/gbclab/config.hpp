#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gbc/hypersurface.hpp"
#include "gbc/rotsym_metric.hpp"

namespace gbclab {

// Bad configuration or a request outside an operation's domain; maps to exit status 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SurfaceSpec {
    std::string kind;  // centered_sphere, offset_sphere, perturbed_sphere
    double r0 = 1.0;
    double R = 1.0;
    double d = 0.0;
    double eps = 0.0;
    int mode = 2;

    gbc::AxisymSurface build(int n) const;
};

struct MetricSpec {
    std::string kind;  // ads_schwarzschild, hyperbolic, custom
    int n = 5;
    int k = 1;
    double m = 1.0;
    std::vector<gbc::PowerTerm> terms;

    gbc::RotSymMetric build() const;
};

struct FlowSpec {
    int k = 1;
    double t_max = 10.0;
    double dt = 1e-3;
    double cap_factor = 16.0;
    double stop_radius = 0.02;
    int modes = 64;
};

struct Tolerances {
    double minkowski = 1e-8;
    double proposition = 1e-9;
    double equality = 1e-10;
    double tensor = 1e-10;
    double inequality = 1e-8;
    double order = 1.9;
    double saturation = 1e-4;
};

struct RunConfig {
    std::string command;
    int n_min = 4;
    int n_max = 7;
    std::optional<int> k;
    int nodes = 128;
    unsigned long long seed = 1;
    int random_tensors = 20;
    std::vector<SurfaceSpec> surfaces;
    std::vector<MetricSpec> metrics;
    std::vector<double> radii = {10, 20, 40, 80};
    std::optional<SurfaceSpec> flow_surface;
    FlowSpec flow;
    Tolerances tol;
};

RunConfig default_config(const std::string& command);
// Overlays a JSON document on the defaults. Unknown keys are rejected.
RunConfig load_config(const std::string& command, const nlohmann::json& doc);
RunConfig load_config_file(const std::string& command, const std::filesystem::path& path);

}  // namespace gbclab
