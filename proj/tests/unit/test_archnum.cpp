#include <doctest.h>

#include "g2v/archnum/archnum.hpp"

#include <cmath>
#include <numbers>

using namespace g2v;

namespace {
constexpr double kPi = std::numbers::pi;

// Exact value of a closed form at a fixed rational point.
bool equals_exactly(const GammaExpr& e, long s, const Rational& value) {
    ConstantComparison c = equal_up_to_constant(e.substitute(0, s), GammaExpr(value));
    return c.equal && c.constant && c.constant->is_one();
}
}  // namespace

TEST_CASE("quadrature examples") {
    auto gauss = integrate([](std::span<const double> x) { return std::exp(-x[0] * x[0]); }, 1, {});
    CHECK(gauss.converged);
    CHECK(std::abs(gauss.value - std::sqrt(kPi)) < 1e-10);
    auto r32 = integrate([](std::span<const double> x) { return std::pow(x[0] * x[0] + 1, -1.5); }, 1, {});
    CHECK(std::abs(r32.value - 2) < 1e-10);
    auto r2 = integrate([](std::span<const double> x) { return std::pow(x[0] * x[0] + 1, -2.0); }, 1, {});
    CHECK(std::abs(r2.value - kPi / 2) < 1e-10);
    auto g3 = integrate([](std::span<const double> x) { return std::exp(-(x[0] * x[0] + x[1] * x[1] + x[2] * x[2])); },
                        3, {1e-8, 1e-14, 15, Region::full});
    CHECK(g3.converged);
    CHECK(std::abs(g3.value - std::pow(kPi, 1.5)) < 1e-7);
    QuadSpec ordered;
    ordered.region = Region::ordered;
    auto g2 = integrate([](std::span<const double> x) { return std::exp(-(x[0] * x[0] + x[1] * x[1])); }, 2, ordered);
    CHECK(std::abs(g2.value - kPi / 2) < 1e-9);
    auto unit = integrate_interval([](double x) { return x * x; }, 0, 1, {});
    CHECK(std::abs(unit.value - 1.0 / 3) < 1e-12);
    CHECK(unit.error_estimate >= 0);
    CHECK(unit.evaluations > 0);
}

TEST_CASE("quadrature failures are explicit") {
    auto nan = integrate_interval([](double) { return std::nan(""); }, 0, 1, {});
    CHECK_FALSE(nan.converged);
    CHECK_FALSE(nan.message.empty());
    QuadSpec shallow{1e-15, 1e-300, 1, Region::full};
    auto rough = integrate_interval([](double x) { return std::sin(200 * x) * std::sin(200 * x); }, 0, 1, shallow);
    CHECK_FALSE(rough.converged);
    CHECK_FALSE(rough.message.empty());
    CHECK_THROWS(integrate([](std::span<const double>) { return 1.0; }, 4, {}));
    CHECK_THROWS(integrate_interval([](double) { return 1.0; }, 0, INFINITY, {}));
    CHECK_THROWS(QuadSpec{0, 1e-14, 15, Region::full}.validate());
}

TEST_CASE("quadrature is deterministic") {
    auto f = [](std::span<const double> x) { return std::pow(1 + x[0] * x[0], -1.3) * std::pow(1 + x[1] * x[1], -0.8); };
    auto a = integrate(f, 2, {}), b = integrate(f, 2, {});
    CHECK(a.value == b.value);
    CHECK(a.error_estimate == b.error_estimate);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("SL2 integral") {
    CHECK(equals_exactly(sl2_closed_form(0), 2, Rational(2)));
    CHECK(equals_exactly(sl2_pochhammer_form(0), 2, Rational(2)));
    for (double s : {1.5, 2.0, 3.0})
        for (int j : {0, 2, 4}) {
            Sl2Report r = sl2_check(s, j);
            CAPTURE(s);
            CAPTURE(j);
            CHECK(r.symbolic_match);
            CHECK(r.error <= 1e-8);
            CHECK(r.pass);
        }
    CHECK(std::abs(sl2_check(2, 0).real_part.value - 2) < 1e-10);
    CHECK(std::abs(sl2_check(3, 4).closed_form) < 1e-15);
    CHECK_THROWS(sl2_check(1, 0));
    CHECK_THROWS(sl2_closed_form(1));
}

TEST_CASE("J' change of variables") {
    CHECK(jacobian_check());
    CHECK(quartic_ratio_check(500, 7));
}

TEST_CASE("J' ratio at two points") {
    QuadSpec loose{1e-4, 1e-14, 15, Region::ordered};
    RatioReport r = jprime_check({1.5, 2.0}, 1e-4, loose);
    CHECK(r.all_converged);
    CHECK(r.pass);
    CHECK(std::abs(r.mean - 4 * std::pow(kPi, 3)) < 1e-6 * r.mean);
    CHECK_THROWS(jprime_numeric(0.5));
}

TEST_CASE("archimedean chain") {
    for (int ell : {2, 4, 6, 8}) {
        ChainReport r = istar_chain_check(ell, {2.5, 3.0, 3.5, 4.5});
        CAPTURE(ell);
        CHECK(r.numeric.pass);
        CHECK(r.symbolic.equal);
        REQUIRE(r.symbolic.constant.has_value());
        CHECK(std::abs(r.symbolic.constant->value() - r.numeric.mean) < 1e-9 * std::abs(r.numeric.mean));
        CHECK(r.pass);
    }
    CHECK(std::abs(istar_chain_check(4, {3.0}).numeric.mean - 17.4934183276249) < 1e-9);
    CHECK_THROWS(istar_assembled(3));
}
