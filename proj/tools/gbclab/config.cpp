#include "config.hpp"

#include <fstream>
#include <set>

namespace gbclab {

namespace {

using nlohmann::json;

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where)
{
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
}

template <class T>
void get(const json& j, const char* key, T& out, const std::string& where)
{
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(where + "." + key + ": " + e.what());
    }
}

SurfaceSpec parse_surface(const json& j, const std::string& where)
{
    check_keys(j, {"kind", "r0", "R", "d", "eps", "mode"}, where);
    SurfaceSpec s;
    get(j, "kind", s.kind, where);
    get(j, "r0", s.r0, where);
    get(j, "R", s.R, where);
    get(j, "d", s.d, where);
    get(j, "eps", s.eps, where);
    get(j, "mode", s.mode, where);
    if (s.kind != "centered_sphere" && s.kind != "offset_sphere" && s.kind != "perturbed_sphere")
        throw ConfigError(where + ": unknown surface kind '" + s.kind + "'");
    return s;
}

MetricSpec parse_metric(const json& j, const std::string& where)
{
    check_keys(j, {"kind", "n", "k", "m", "terms"}, where);
    MetricSpec m;
    get(j, "kind", m.kind, where);
    get(j, "n", m.n, where);
    get(j, "k", m.k, where);
    get(j, "m", m.m, where);
    if (j.contains("terms")) {
        if (!j["terms"].is_array()) throw ConfigError(where + ".terms: expected an array");
        for (std::size_t i = 0; i < j["terms"].size(); ++i) {
            const std::string w = where + ".terms[" + std::to_string(i) + "]";
            check_keys(j["terms"][i], {"coef", "power"}, w);
            gbc::PowerTerm t{0.0, 0.0};
            get(j["terms"][i], "coef", t.coef, w);
            get(j["terms"][i], "power", t.power, w);
            m.terms.push_back(t);
        }
    }
    if (m.kind != "ads_schwarzschild" && m.kind != "hyperbolic" && m.kind != "custom")
        throw ConfigError(where + ": unknown metric kind '" + m.kind + "'");
    if (m.kind == "ads_schwarzschild" && !(2 * m.k < m.n)) throw ConfigError(where + ": need 2k < n");
    return m;
}

}  // namespace

gbc::AxisymSurface SurfaceSpec::build(int n) const
{
    try {
        if (kind == "centered_sphere") return gbc::centered_sphere(n, r0);
        if (kind == "offset_sphere") return gbc::offset_sphere(n, R, d);
        return gbc::perturbed_sphere(n, r0, eps, mode);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

gbc::RotSymMetric MetricSpec::build() const
{
    try {
        if (kind == "ads_schwarzschild") return gbc::RotSymMetric::ads_schwarzschild(n, k, m);
        if (kind == "hyperbolic") return gbc::RotSymMetric::hyperbolic(n);
        return gbc::RotSymMetric::custom(n, terms);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
}

RunConfig default_config(const std::string& command)
{
    RunConfig c;
    c.command = command;
    c.surfaces = {
        {"centered_sphere", 0.5}, {"centered_sphere", 1.0}, {"centered_sphere", 2.0},
        {"offset_sphere", 1.0, 1.0, 0.3}, {"offset_sphere", 1.0, 1.5, 0.4}, {"offset_sphere", 1.0, 2.0, 0.6},
        {"perturbed_sphere", 1.2, 1.0, 0.0, 0.05, 2}, {"perturbed_sphere", 1.0, 1.0, 0.0, 0.03, 3},
        {"perturbed_sphere", 1.5, 1.0, 0.0, 0.02, 4},
    };
    c.metrics = {
        {"ads_schwarzschild", 5, 2, 1.0, {}},
        {"ads_schwarzschild", 7, 2, 1.5, {}},
        {"ads_schwarzschild", 7, 3, 1.0, {}},
        {"custom", 6, 2, 0.0, {{-2.0, -1.0}, {0.5, -2.0}}},
    };
    if (command == "mass") c.metrics = {c.metrics.front()};
    if (command == "flow") {
        c.n_min = c.n_max = 5;
        c.flow_surface = SurfaceSpec{"centered_sphere", 1.0};
    }
    return c;
}

RunConfig load_config(const std::string& command, const json& doc)
{
    RunConfig c = default_config(command);
    check_keys(doc, {"command", "n", "k", "nodes", "seed", "random_tensors", "surfaces", "metric", "metrics", "radii",
                     "surface", "flow", "tolerances"},
               "config");
    if (doc.contains("command") && doc["command"].get<std::string>() != command)
        throw ConfigError("config: written for '" + doc["command"].get<std::string>() + "', not '" + command + "'");
    if (doc.contains("n")) {
        const json& n = doc["n"];
        if (n.is_number_integer()) {
            c.n_min = c.n_max = n.get<int>();
        } else {
            check_keys(n, {"min", "max"}, "config.n");
            get(n, "min", c.n_min, "config.n");
            get(n, "max", c.n_max, "config.n");
        }
        if (c.n_min < 3 || c.n_max < c.n_min) throw ConfigError("config.n: need 3 <= min <= max");
    }
    if (doc.contains("k")) {
        int k = 0;
        get(doc, "k", k, "config");
        c.k = k;
    }
    get(doc, "nodes", c.nodes, "config");
    if (c.nodes < 8) throw ConfigError("config.nodes: need at least 8");
    get(doc, "seed", c.seed, "config");
    get(doc, "random_tensors", c.random_tensors, "config");
    get(doc, "radii", c.radii, "config");
    if (doc.contains("surfaces")) {
        c.surfaces.clear();
        for (std::size_t i = 0; i < doc["surfaces"].size(); ++i)
            c.surfaces.push_back(parse_surface(doc["surfaces"][i], "config.surfaces[" + std::to_string(i) + "]"));
    }
    if (doc.contains("metrics")) {
        c.metrics.clear();
        for (std::size_t i = 0; i < doc["metrics"].size(); ++i)
            c.metrics.push_back(parse_metric(doc["metrics"][i], "config.metrics[" + std::to_string(i) + "]"));
    }
    if (doc.contains("metric")) c.metrics = {parse_metric(doc["metric"], "config.metric")};
    if (doc.contains("surface")) c.flow_surface = parse_surface(doc["surface"], "config.surface");
    if (doc.contains("flow")) {
        const json& f = doc["flow"];
        check_keys(f, {"k", "t_max", "dt", "cap_factor", "stop_radius", "modes"}, "config.flow");
        get(f, "k", c.flow.k, "config.flow");
        get(f, "t_max", c.flow.t_max, "config.flow");
        get(f, "dt", c.flow.dt, "config.flow");
        get(f, "cap_factor", c.flow.cap_factor, "config.flow");
        get(f, "stop_radius", c.flow.stop_radius, "config.flow");
        get(f, "modes", c.flow.modes, "config.flow");
    }
    if (doc.contains("tolerances")) {
        const json& t = doc["tolerances"];
        check_keys(t, {"minkowski", "proposition", "equality", "tensor", "inequality", "order", "saturation"},
                   "config.tolerances");
        get(t, "minkowski", c.tol.minkowski, "config.tolerances");
        get(t, "proposition", c.tol.proposition, "config.tolerances");
        get(t, "equality", c.tol.equality, "config.tolerances");
        get(t, "tensor", c.tol.tensor, "config.tolerances");
        get(t, "inequality", c.tol.inequality, "config.tolerances");
        get(t, "order", c.tol.order, "config.tolerances");
        get(t, "saturation", c.tol.saturation, "config.tolerances");
    }
    return c;
}

RunConfig load_config_file(const std::string& command, const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path.string());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in, nullptr, true, true);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    return load_config(command, doc);
}

}  // namespace gbclab
