#include "g2v/cli/suite.hpp"

#include "g2v/cubicforms/padic.hpp"
#include "g2v/exactalg/rational.hpp"
#include "g2v/localzeta/coset.hpp"
#include "g2v/localzeta/local_zeta.hpp"

#include <json.hpp>

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace g2v {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
    T value{};
    const std::string t = trim(text);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
        throw std::invalid_argument("config: bad value for " + key + ": '" + text + "'");
    return value;
}

template <class T>
std::vector<T> parse_list(const std::string& key, const std::string& text) {
    std::vector<T> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_number<T>(key, item));
    if (out.empty()) throw std::invalid_argument("config: empty list for " + key);
    return out;
}

nlohmann::ordered_json config_json(const SuiteConfig& c) {
    nlohmann::ordered_json j;
    j["primes"] = c.primes;
    j["max_det_val"] = c.max_det_val;
    j["weights"] = c.weights;
    j["samples"] = c.samples;
    j["seed"] = c.seed;
    j["tol"] = c.tol;
    return j;
}

}  // namespace

void SuiteConfig::validate() const {
    if (primes.empty()) throw std::invalid_argument("config: no primes");
    for (long p : primes)
        if (!is_prime(p)) throw std::invalid_argument("config: " + std::to_string(p) + " is not prime");
    if (weights.empty()) throw std::invalid_argument("config: no weights");
    for (int l : weights)
        if (l < 2 || l % 2 != 0) throw std::invalid_argument("config: weight " + std::to_string(l) + " is not even >= 2");
    if (max_det_val < 0) throw std::invalid_argument("config: max_det_val must be >= 0");
    if (samples < 1) throw std::invalid_argument("config: samples must be >= 1");
    if (!(tol > 0)) throw std::invalid_argument("config: tol must be positive");
    if (jobs < 0) throw std::invalid_argument("config: jobs must be >= 0");
}

void apply_setting(SuiteConfig& c, const std::string& key, const std::string& value) {
    if (key == "primes" || key == "p") c.primes = parse_list<long>(key, value);
    else if (key == "max_det_val" || key == "val-bound") c.max_det_val = parse_number<int>(key, value);
    else if (key == "weights") c.weights = parse_list<int>(key, value);
    else if (key == "samples") c.samples = parse_number<int>(key, value);
    else if (key == "seed") c.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "tol") c.tol = parse_number<double>(key, value);
    else if (key == "jobs") c.jobs = parse_number<int>(key, value);
    else if (key == "out") c.out = trim(value);
    else if (key == "format") {
        const std::string v = trim(value);
        if (v == "text") c.format = Format::text;
        else if (v == "json") c.format = Format::json;
        else throw std::invalid_argument("config: format must be text or json");
    } else throw std::invalid_argument("config: unknown key '" + key + "'");
}

SuiteConfig parse_config(const std::string& text, SuiteConfig base) {
    std::stringstream ss(text);
    int line_no = 0;
    for (std::string line; std::getline(ss, line);) {
        ++line_no;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(line_no) + " has no '='");
        apply_setting(base, trim(line.substr(0, eq)), line.substr(eq + 1));
    }
    return base;
}

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skip: return "skip";
    }
    return "?";
}

Summary Report::summary() const {
    Summary s;
    for (const CaseRecord& c : cases) {
        if (c.status == Status::pass) ++s.pass;
        else if (c.status == Status::fail) ++s.fail;
        else ++s.skip;
    }
    return s;
}

int exit_code(const Report& report) { return report.summary().fail == 0 ? 0 : 1; }

std::string emit_report(const Report& report, Format format) {
    const Summary s = report.summary();
    if (format == Format::json) {
        nlohmann::ordered_json j;
        j["suite"] = report.suite;
        j["config"] = config_json(report.config);
        j["cases"] = nlohmann::ordered_json::array();
        for (const CaseRecord& c : report.cases)
            j["cases"].push_back({{"id", c.id},
                                  {"status", to_string(c.status)},
                                  {"expected", c.expected},
                                  {"actual", c.actual},
                                  {"anchor", c.anchor}});
        j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skip", s.skip}};
        j["wall_ms"] = report.wall_ms;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    for (const CaseRecord& c : report.cases) {
        os << (c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "SKIP") << "  " << c.id
           << "  actual: " << c.actual;
        if (c.status != Status::pass) os << "  expected: " << c.expected;
        os << "\n";
    }
    os << "suite " << report.suite << ": " << s.pass << " passed, " << s.fail << " failed, " << s.skip << " skipped ("
       << report.wall_ms << " ms)\n";
    return os.str();
}

std::string enumerate_csv(EnumerateKind kind, const EnumerateParams& params) {
    switch (kind) {
        case EnumerateKind::subrings:
            if (params.bound < 1) throw std::invalid_argument("enumerate: bound must be >= 1");
            if (params.bound > kMaxSubringBound)
                throw std::out_of_range("enumerate: subring bound above " + std::to_string(kMaxSubringBound));
            return subrings_csv(subrings_of_index(params.bound));
        case EnumerateKind::cosets: {
            if (!is_prime(params.p)) throw std::invalid_argument("enumerate: p must be prime");
            if (params.val_bound < 0) throw std::invalid_argument("enumerate: val-bound must be >= 0");
            if (params.val_bound > kMaxCosetValBound)
                throw std::out_of_range("enumerate: val-bound above " + std::to_string(kMaxCosetValBound));
            LocalContext ctx = LocalContext::split(params.p);
            return coset_csv(ctx, coset_reps(ctx, params.val_bound));
        }
        case EnumerateKind::sublattice_contents: {
            if (!is_prime(params.p)) throw std::invalid_argument("enumerate: p must be prime");
            if (params.cubic.size() != 4) throw std::invalid_argument("enumerate: cubic needs four coefficients");
            BinaryCubic f{params.cubic[0], params.cubic[1], params.cubic[2], params.cubic[3]};
            if (f.is_zero()) throw std::invalid_argument("enumerate: zero cubic");
            std::map<int, int> hist;
            for (const Sublattice& s : index_p_sublattices(f, PAdicContext(params.p))) ++hist[s.content];
            std::ostringstream os;
            os << "content,count\n";
            for (const auto& [c, n] : hist) os << c << "," << n << "\n";
            return os.str();
        }
    }
    throw std::invalid_argument("enumerate: unknown kind");
}

}  // namespace g2v
