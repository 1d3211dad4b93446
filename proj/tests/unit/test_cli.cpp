#include <doctest.h>

#include "g2v/cli/suite.hpp"

#include <json.hpp>

using namespace g2v;

TEST_CASE("config parsing") {
    SuiteConfig c = parse_config("# comment\nprimes = 2,7\nmax_det_val=2\nweights=4,6\nseed=99\nformat=json\n\n");
    CHECK(c.primes == std::vector<long>{2, 7});
    CHECK(c.max_det_val == 2);
    CHECK(c.weights == std::vector<int>{4, 6});
    CHECK(c.seed == 99);
    CHECK(c.format == Format::json);
    apply_setting(c, "p", "3");
    CHECK(c.primes == std::vector<long>{3});
    CHECK_THROWS(parse_config("colour=blue"));
    CHECK_THROWS(parse_config("samples=ten"));
    CHECK_THROWS(parse_config("no equals sign"));
    SuiteConfig bad;
    bad.primes = {4};
    CHECK_THROWS(bad.validate());
    bad = SuiteConfig{};
    bad.weights = {3};
    CHECK_THROWS(bad.validate());
}

TEST_CASE("report serialization") {
    Report empty{"rootsys", SuiteConfig{}, {}, 5};
    auto j = nlohmann::json::parse(emit_report(empty, Format::json));
    CHECK(j["summary"]["pass"] == 0);
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["summary"]["skip"] == 0);
    CHECK(j["cases"].empty());
    CHECK(j["wall_ms"] == 5);

    Report one{"x", SuiteConfig{}, {{"x/a", Status::fail, "1/2 \"q\"", "0,5", "statement"}}, 0};
    j = nlohmann::json::parse(emit_report(one, Format::json));
    CHECK(j["cases"][0]["expected"] == "1/2 \"q\"");
    CHECK(j["cases"][0]["actual"] == "0,5");
    CHECK(j["cases"][0]["status"] == "fail");
    CHECK(j["cases"][0]["anchor"] == "statement");
    CHECK(exit_code(one) == 1);
    std::string text = emit_report(one, Format::text);
    CHECK(text.find("FAIL  x/a") == 0);
    CHECK(text.find("suite x: 0 passed, 1 failed, 0 skipped") != std::string::npos);
}

TEST_CASE("suites") {
    CHECK_THROWS(build_suite("bogus", {}));
    SuiteConfig cfg;
    cfg.samples = 20;
    Report r = run_suite("rootsys", cfg);
    CHECK(exit_code(r) == 0);
    CHECK(r.summary().pass == static_cast<int>(r.cases.size()));
    CHECK(std::is_sorted(r.cases.begin(), r.cases.end(), [](const CaseRecord& a, const CaseRecord& b) { return a.id < b.id; }));

    cfg.primes = {2, 3};
    cfg.max_det_val = 2;
    cfg.jobs = 3;
    Report a = run_suite("cubicforms", cfg), b = run_suite("cubicforms", cfg);
    a.wall_ms = b.wall_ms = 0;
    CHECK(emit_report(a, Format::json) == emit_report(b, Format::json));
    CHECK(exit_code(a) == 0);
}

TEST_CASE("enumerations") {
    EnumerateParams p;
    p.bound = 10;
    std::string sub = enumerate_csv(EnumerateKind::subrings, p);
    CHECK(sub.rfind("index,count,contents_histogram\n1,1,", 0) == 0);
    CHECK(std::count(sub.begin(), sub.end(), '\n') == 11);
    p.p = 2;
    p.val_bound = 2;
    std::string cos = enumerate_csv(EnumerateKind::cosets, p);
    CHECK(std::count(cos.begin(), cos.end(), '\n') == 12);
    p.cubic = {1, 0, 0, 0};
    CHECK(enumerate_csv(EnumerateKind::sublattice_contents, p) == "content,count\n-1,2\n2,1\n");
    p.bound = kMaxSubringBound + 1;
    CHECK_THROWS_AS(enumerate_csv(EnumerateKind::subrings, p), std::out_of_range);
    p.val_bound = kMaxCosetValBound + 1;
    CHECK_THROWS_AS(enumerate_csv(EnumerateKind::cosets, p), std::out_of_range);
}
