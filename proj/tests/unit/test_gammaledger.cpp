#include <doctest.h>

#include "generators.hpp"

#include "g2v/gammaledger/gamma_expr.hpp"

#include <cmath>
#include <numbers>

using namespace g2v;

namespace {
Affine sp(long c) { return Affine::s_plus(c); }
GammaExpr G(const Affine& a, int e = 1) { return GammaExpr::gamma(a, e); }
GammaExpr L(const Affine& a, int e = 1) { return GammaExpr::lambda(a, e); }
RatFun lin(long c) { return sp(c).as_ratfun(); }
constexpr double pi = std::numbers::pi;
}  // namespace

TEST_CASE("expand_RC definitions") {
    GammaExpr r3 = expand_RC(GammaKind::R, Affine::constant(3));
    CHECK(r3.gamma_exponent(Affine::constant(Rational(3, 2))) == 1);
    CHECK(r3.pi_exponent() == Affine::constant(Rational(-3, 2)));
    GammaExpr c2 = expand_RC(GammaKind::C, Affine::constant(2));
    CHECK(c2.evaluate(0.0) == doctest::Approx(1 / (2 * pi * pi)).epsilon(1e-14));
}

TEST_CASE("Gamma_R(s) Gamma_R(s+1) duplicates to Gamma_C(s)") {
    GammaExpr prod = gamma_normalize(GammaExpr::gamma_R(sp(0)) * GammaExpr::gamma_R(sp(1)));
    GammaExpr dup = apply_duplication(prod, Affine(Rational(1, 2), 0), Duplication::forward);
    auto cmp = equal_up_to_constant(dup, GammaExpr::gamma_C(sp(0)));
    REQUIRE(cmp.equal);
    REQUIRE(cmp.constant);
    CHECK(cmp.constant->is_one());
}

TEST_CASE("gamma_normalize examples") {
    GammaExpr e = gamma_normalize(G(sp(2)) / G(sp(0)));
    CHECK(e.gamma_factors().empty());
    CHECK(e.prefactor() == lin(0) * lin(1));

    RatFun target = lin(-3) * lin(-4) * lin(-4) * lin(-5);
    GammaExpr lhs = gamma_normalize(G(sp(-2)) * G(sp(-3)) / (G(sp(-4)) * G(sp(-5))));
    CHECK(lhs.gamma_factors().empty());
    CHECK(lhs.prefactor() == target);
    GammaExpr rhs = gamma_normalize(G(Affine(-1, 6)) * G(Affine(-1, 5)) / (G(Affine(-1, 4)) * G(Affine(-1, 3))));
    CHECK(rhs.gamma_factors().empty());
    CHECK(rhs.prefactor() == target);
}

TEST_CASE("constant arguments normalize to rationals and powers of pi") {
    GammaExpr e = gamma_normalize(G(Affine::constant(4)) * G(Affine::constant(Rational(5, 2))));
    CHECK(e.gamma_factors().empty());
    CHECK(e.prefactor() == RatFun(Rational(6 * 3, 4)));
    CHECK(e.pi_exponent() == Affine::constant(Rational(1, 2)));
    GammaExpr third = gamma_normalize(G(Affine::constant(Rational(7, 3))));
    CHECK(third.gamma_exponent(Affine::constant(Rational(1, 3))) == 1);
}

TEST_CASE("apply_duplication examples") {
    GammaExpr e = apply_duplication(G(Affine::constant(1)) * G(Affine::constant(Rational(3, 2))),
                                    Affine::constant(1), Duplication::forward);
    CHECK(e.evaluate(0.0) == doctest::Approx(std::sqrt(pi) / 2).epsilon(1e-14));
    CHECK(e.gamma_exponent(Affine::constant(2)) == 1);

    Affine half_s(Rational(1, 2), 0);
    GammaExpr f = apply_duplication(G(half_s) * G(half_s + Rational(1, 2)), half_s, Duplication::forward);
    CHECK(f == GammaExpr::power_of_two(Affine(-1, 1)) * GammaExpr::power_of_pi(Affine::constant(Rational(1, 2))) *
                   G(sp(0)));

    GammaExpr b = apply_duplication(G(Affine(2, -4)), sp(-2), Duplication::backward);
    CHECK(b == GammaExpr::power_of_two(Affine(2, -5)) * GammaExpr::power_of_pi(Affine::constant(Rational(-1, 2))) *
                   G(sp(-2)) * G(Affine(1, Rational(-3, 2))));
    CHECK_THROWS_AS(apply_duplication(G(sp(0)), sp(0), Duplication::forward), std::invalid_argument);
    CHECK_THROWS_AS(apply_duplication(G(sp(0)), sp(0), Duplication::backward), std::invalid_argument);

    GammaExpr inv = apply_duplication(G(half_s, -1) * G(half_s + Rational(1, 2), -1), half_s, Duplication::forward);
    CHECK(inv.gamma_exponent(sp(0)) == -1);
}

TEST_CASE("lambda_canonicalize examples") {
    CHECK(lambda_canonicalize(L(Affine(-2, 5))) == L(Affine(2, -4)));
    CHECK(lambda_canonicalize(L(Affine::constant(Rational(1, 2)))) == L(Affine::constant(Rational(1, 2))));
    CHECK(lambda_canonicalize(L(Affine(-1, 2))) == L(sp(-1)));
    CHECK(lambda_canonicalize(L(Affine::constant(-3))) == L(Affine::constant(4)));
}

TEST_CASE("equal_up_to_constant examples") {
    auto a = equal_up_to_constant(G(sp(0)), GammaExpr(3) * G(sp(0)));
    CHECK(a.equal);
    REQUIRE(a.constant);
    CHECK(a.constant->rational == Rational(1, 3));
    CHECK_FALSE(equal_up_to_constant(G(sp(1)), G(sp(0))).equal);
    CHECK_FALSE(equal_up_to_constant(L(sp(0)), G(sp(0))).equal);
    auto c = equal_up_to_constant(G(sp(0)) * G(Affine::constant(Rational(1, 3))), G(sp(0)));
    CHECK(c.equal);
    CHECK_FALSE(c.constant);
}

TEST_CASE("pole orders") {
    CHECK(pole_order_at(G(sp(0)), 0) == 1);
    CHECK(pole_order_at(GammaExpr::gamma_R(sp(1)), -1) == 1);
    CHECK(pole_order_at(arch_L_factor(4), -10) == 3);
    CHECK(pole_order_at(arch_L_factor(4), -11) == 4);
    CHECK(pole_order_at(L(sp(0)) / L(sp(-1)), 1) == 0);
    CHECK(pole_order_at(L(sp(0)) / L(sp(-1)), 0) == 1);
    CHECK(pole_order_at(L(sp(0)), 1) == 1);
    CHECK(pole_order_at(L(sp(0)), 2) == 0);
    CHECK(pole_order_at(GammaExpr(lin(2)) * G(sp(0)), -2) == 0);
}

TEST_CASE("arch_L_factor and trivial zeros") {
    GammaExpr two = arch_L_factor(2);
    GammaExpr expected = GammaExpr::gamma_C(sp(1)) * GammaExpr::gamma_C(sp(2)) * GammaExpr::gamma_C(sp(3)) *
                         GammaExpr::gamma_R(sp(1));
    CHECK(two == expected);
    double v = arch_L_factor(4).evaluate(1.0);
    CHECK(std::isfinite(v));
    CHECK(v > 0);
    CHECK_THROWS_AS(arch_L_factor(3), std::invalid_argument);
    CHECK_THROWS_AS(arch_L_factor(0), std::invalid_argument);

    CHECK(trivial_zero_orders(4, 10, 11).at(-10) == 3);
    CHECK(trivial_zero_orders(4, 10, 11).at(-11) == 4);
    CHECK(trivial_zero_orders(2, 4, 4).at(-4) == 3);
    for (int ell : {2, 4, 6})
        for (auto [s0, order] : trivial_zero_orders(ell, 2 * ell - 1, 2 * ell + 40)) CHECK(order == (s0 % 2 == 0 ? 3 : 4));
    CHECK_THROWS_AS(trivial_zero_orders(4, 6, 10), std::invalid_argument);
}

namespace {

GammaExpr random_expr(std::mt19937_64& rng) {
    GammaExpr e(testing::random_rational(rng) + Rational(10));
    int factors = static_cast<int>(testing::random_int(rng, 1, 5));
    static const Rational slopes[] = {Rational(1), Rational(-1), Rational(2), Rational(1, 2)};
    for (int i = 0; i < factors; ++i) {
        Affine arg(slopes[testing::random_int(rng, 0, 3)], Rational(testing::random_int(rng, -12, 12), 2));
        e *= GammaExpr::gamma(arg, static_cast<int>(testing::random_int(rng, -2, 2)));
    }
    if (testing::random_int(rng, 0, 1)) e *= GammaExpr::power_of_two(Affine(testing::random_rational(rng), 1));
    return e;
}

GammaExpr random_shifts(GammaExpr e, std::mt19937_64& rng) {
    for (int round = 0; round < 6 && !e.gamma_factors().empty(); ++round) {
        auto it = e.gamma_factors().begin();
        std::advance(it, testing::random_int(rng, 0, static_cast<long>(e.gamma_factors().size()) - 1));
        Affine arg = it->first;
        if (arg.is_constant()) continue;
        e = shift_gamma(e, arg, static_cast<int>(testing::random_int(rng, -3, 3)) | 1);
    }
    return e;
}

}  // namespace

TEST_CASE("gamma_normalize is idempotent and confluent") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        GammaExpr e = random_expr(rng);
        GammaExpr n = gamma_normalize(e);
        REQUIRE(gamma_normalize(n) == n);
        REQUIRE(gamma_normalize(random_shifts(e, rng)) == n);
        REQUIRE(gamma_normalize(random_shifts(e, rng)) == gamma_normalize(random_shifts(e, rng)));
    }
}

TEST_CASE("normalization preserves numeric values and pole orders") {
    std::mt19937_64 rng(11);
    int compared = 0;
    for (int i = 0; i < 1000; ++i) {
        GammaExpr e = random_expr(rng);
        GammaExpr n = gamma_normalize(e);
        Rational s0(testing::random_int(rng, -40, 40), 4);
        REQUIRE(pole_order_at(e, s0) == pole_order_at(n, s0));
        double s = s0.to_double() + 0.1234;
        double a = e.evaluate(s), b = n.evaluate(s);
        if (!std::isfinite(a) || std::abs(a) < 1e-250 || std::abs(a) > 1e250) continue;
        ++compared;
        REQUIRE(std::abs(a - b) <= 1e-10 * std::abs(a));
    }
    CHECK(compared > 500);
}

TEST_CASE("equal_up_to_constant is an equivalence relation on samples") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        GammaExpr a = random_expr(rng);
        GammaExpr b = random_shifts(a, rng) * GammaExpr(testing::random_rational(rng) + Rational(20));
        GammaExpr c = random_shifts(b, rng) * GammaExpr::power_of_pi(Affine::constant(3));
        GammaExpr d = random_expr(rng);
        REQUIRE(equal_up_to_constant(a, a).equal);
        REQUIRE(equal_up_to_constant(a, b).equal == equal_up_to_constant(b, a).equal);
        REQUIRE(equal_up_to_constant(a, b).equal);
        REQUIRE(equal_up_to_constant(b, c).equal);
        REQUIRE(equal_up_to_constant(a, c).equal);
        REQUIRE(equal_up_to_constant(a, d).equal == equal_up_to_constant(d, a).equal);
    }
}
