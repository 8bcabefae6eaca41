#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"

namespace fs = std::filesystem;
using namespace gbclab;

namespace {

struct Options {
    std::string config;
    std::string out;
    std::string golden;
    bool update_golden = false;
    std::optional<int> nodes;
    std::optional<double> tol;
    std::optional<unsigned long long> seed;
    std::optional<int> n;
    std::optional<int> k;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
};

int compare_golden(const Output& out, const fs::path& dir, bool update)
{
    const fs::path file = dir / out.file_name;
    if (update) {
        fs::create_directories(dir);
        std::ofstream(file, std::ios::binary) << out.text;
        std::cerr << "golden updated: " << file.string() << "\n";
        return kOk;
    }
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        std::cerr << "golden file missing: " << file.string() << "\n";
        return kAssertionFailed;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (ss.str() != out.text) {
        std::cerr << "output differs from golden file " << file.string() << "\n";
        return kAssertionFailed;
    }
    return kOk;
}

int execute(const std::string& command, const Options& o)
{
    RunConfig c = o.config.empty() ? default_config(command) : load_config_file(command, o.config);
    if (o.nodes) c.nodes = *o.nodes;
    if (o.seed) c.seed = *o.seed;
    if (o.n) c.n_min = c.n_max = *o.n;
    if (o.k) c.k = *o.k;
    if (o.tol) {
        c.tol.minkowski = c.tol.proposition = c.tol.equality = c.tol.tensor = c.tol.inequality = c.tol.saturation = *o.tol;
    }
    if (c.nodes < 8) throw ConfigError("--nodes: need at least 8");

    Output out;
    if (command == "verify-identities") out = verify_identities(c, o.jobs);
    if (command == "verify-inequalities") out = verify_inequalities(c, o.jobs);
    if (command == "mass") out = mass(c, o.jobs);
    if (command == "flow") out = flow(c);

    if (o.out.empty()) {
        std::cout << out.text;
    } else {
        fs::create_directories(o.out);
        std::ofstream(fs::path(o.out) / out.file_name, std::ios::binary) << out.text;
    }
    std::cerr << command << ": " << out.summary << "\n";
    int status = out.failures == 0 ? kOk : kAssertionFailed;
    if (!o.golden.empty()) status = std::max(status, compare_golden(out, o.golden, o.update_golden));
    return status;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Numerical checks for weighted curvature inequalities and Gauss-Bonnet-Chern mass"};
    app.require_subcommand(1);
    Options o;
    std::vector<CLI::App*> subs;
    for (const char* name : {"verify-identities", "verify-inequalities", "mass", "flow"}) {
        CLI::App* s = app.add_subcommand(name);
        s->add_option("--config", o.config, "JSON run configuration")->check(CLI::ExistingFile);
        s->add_option("--out", o.out, "output directory (stdout when absent)");
        s->add_option("--nodes", o.nodes, "quadrature nodes");
        s->add_option("--tol", o.tol, "override every value tolerance");
        s->add_option("--seed", o.seed, "seed for generated batteries");
        s->add_option("--n", o.n, "restrict to one dimension");
        s->add_option("--k", o.k, "restrict to one index k");
        s->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
        s->add_option("--golden", o.golden, "compare the output with the file in this directory");
        s->add_flag("--update-golden", o.update_golden, "rewrite the golden file instead of comparing");
        subs.push_back(s);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }
    if (o.update_golden && o.golden.empty()) {
        std::cerr << "--update-golden needs --golden DIR\n";
        return kConfigError;
    }
    for (CLI::App* s : subs) {
        if (!s->parsed()) continue;
        try {
            return execute(s->get_name(), o);
        } catch (const ConfigError& e) {
            std::cerr << "configuration error: " << e.what() << "\n";
            return kConfigError;
        } catch (const std::logic_error& e) {
            std::cerr << "domain error: " << e.what() << "\n";
            return kConfigError;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kAssertionFailed;
        }
    }
    return kConfigError;
}
