#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace g2v {

enum class Format { text, json };

struct SuiteConfig {
    std::vector<long> primes{2, 3, 5};
    int max_det_val = 3;
    std::vector<int> weights{2, 4, 6, 8, 10};
    int samples = 200;
    std::uint64_t seed = 20240601;
    double tol = 1e-8;
    Format format = Format::text;
    std::string out;  // empty: standard output
    int jobs = 0;     // 0: hardware concurrency
    // Throws std::invalid_argument on a non-prime, an odd or small weight, or a non-positive count.
    void validate() const;
};

// key=value lines; '#' starts a comment. Unknown keys and malformed values throw std::invalid_argument.
SuiteConfig parse_config(const std::string& text, SuiteConfig base = {});
// Applies one key=value setting; the same keys as the config file.
void apply_setting(SuiteConfig& config, const std::string& key, const std::string& value);

enum class Status { pass, fail, skip };
std::string to_string(Status s);

struct CaseRecord {
    std::string id;
    Status status = Status::skip;
    std::string expected;
    std::string actual;
    std::string anchor;  // the statement this case verifies
};

struct Summary {
    int pass = 0, fail = 0, skip = 0;
};

struct Report {
    std::string suite;
    SuiteConfig config;
    std::vector<CaseRecord> cases;  // sorted by id
    long long wall_ms = 0;
    Summary summary() const;
};

struct Case {
    std::string id;
    std::string anchor;
    // Receives a generator seed derived from the config seed and the case id.
    std::function<CaseRecord(std::uint64_t seed)> run;
};

const std::vector<std::string>& suite_names();  // module suites plus "all"
bool is_suite(const std::string& name);
// Throws std::invalid_argument for an unknown suite.
std::vector<Case> build_suite(const std::string& name, const SuiteConfig& config);
// Runs the cases on a bounded worker pool; results are sorted by id.
Report run_suite(const std::string& name, const SuiteConfig& config);
int exit_code(const Report& report);  // 0 when nothing failed, else 1

std::string emit_report(const Report& report, Format format);

enum class EnumerateKind { subrings, cosets, sublattice_contents };
struct EnumerateParams {
    int bound = 30;           // subrings: largest index
    long p = 2;               // cosets, sublattice-contents
    int val_bound = 2;        // cosets: largest val(det)
    std::vector<long> cubic{0, 1, 1, 0};  // sublattice-contents: a, b, c, d
};
inline constexpr int kMaxSubringBound = 60;
inline constexpr int kMaxCosetValBound = 6;
// Throws std::out_of_range when a bound exceeds its limit, std::invalid_argument on bad input.
std::string enumerate_csv(EnumerateKind kind, const EnumerateParams& params);

}  // namespace g2v
