#include "g2v/cli/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace g2v;

namespace {

constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Returns false when the path cannot be written.
bool write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return static_cast<bool>(std::cout);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << text;
    return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numeric verification of the G2 standard L-function computations"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run a verification suite");
    std::string suite, config_path;
    std::map<std::string, std::string> flags;
    run->add_option("suite", suite, "cubicforms, localzeta, rootsys, intertwiner, gammaledger, archnum or all")->required();
    run->add_option("--config", config_path, "key=value file; flags override it");
    const std::pair<const char*, const char*> run_flags[] = {
        {"p", "primes, comma separated"},
        {"val-bound", "largest val(det) of a coset"},
        {"weights", "even weights, comma separated"},
        {"samples", "random cases per check"},
        {"seed", "base seed"},
        {"tol", "numeric tolerance"},
        {"format", "json or text"},
        {"out", "report file, default stdout"},
        {"jobs", "worker threads"},
    };
    for (const auto& [key, help] : run_flags) run->add_option(std::string("--") + key, flags[key], help);

    auto* enumerate = app.add_subcommand("enumerate", "write an enumeration table as CSV");
    std::string kind, out_path, cubic_text;
    EnumerateParams params;
    enumerate->add_option("kind", kind, "subrings, cosets or sublattice-contents")->required();
    enumerate->add_option("--bound", params.bound, "largest subring index");
    enumerate->add_option("--p", params.p, "prime");
    enumerate->add_option("--val-bound", params.val_bound, "largest val(det) of a coset");
    enumerate->add_option("--cubic", cubic_text, "a,b,c,d");
    enumerate->add_option("--out", out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*run) {
            if (!is_suite(suite)) {
                std::cerr << "unknown suite '" << suite << "'\n";
                return kUsage;
            }
            SuiteConfig config = config_path.empty() ? SuiteConfig{} : parse_config(read_file(config_path));
            for (const auto& [key, value] : flags)
                if (!value.empty()) apply_setting(config, key, value);
            config.validate();
            Report report = run_suite(suite, config);
            if (!write_output(config.out, emit_report(report, config.format))) {
                std::cerr << "cannot write " << config.out << "\n";
                return kUsage;
            }
            return exit_code(report);
        }
        EnumerateKind k;
        if (kind == "subrings") k = EnumerateKind::subrings;
        else if (kind == "cosets") k = EnumerateKind::cosets;
        else if (kind == "sublattice-contents") k = EnumerateKind::sublattice_contents;
        else {
            std::cerr << "unknown enumeration '" << kind << "'\n";
            return kUsage;
        }
        if (!cubic_text.empty()) {
            params.cubic.clear();
            std::stringstream ss(cubic_text);
            for (std::string item; std::getline(ss, item, ',');) params.cubic.push_back(std::stol(item));
        }
        if (!write_output(out_path, enumerate_csv(k, params))) {
            std::cerr << "cannot write " << out_path << "\n";
            return kUsage;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
