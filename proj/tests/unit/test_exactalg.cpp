#include <doctest.h>

#include "generators.hpp"

#include "g2v/exactalg/ratfun.hpp"
#include "g2v/exactalg/series.hpp"

using namespace g2v;
using g2v::testing::random_poly;

namespace {
const Poly s = Poly::var(Sym::s);
const Poly w = Poly::var(Sym::w);
const Poly u = Poly::var(Sym::u);
const Poly v = Poly::var(Sym::v);
}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
    Rational a(6, -4);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(a + Rational(3, 2) == 0);
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(valuation(Rational(12, 5), 2) == 2);
    CHECK(valuation(Rational(12, 5), 5) == -1);
    CHECK(valuation(Rational(0), 3) == kInfiniteValuation);
    CHECK(in_Zp(Rational(1, 3), 2));
    CHECK_FALSE(in_Zp(Rational(1, 3), 3));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(floor(Rational(-1, 2)) == -1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("poly ring axioms on random triples") {
    std::mt19937_64 rng(20240601);
    std::vector<Sym> syms{Sym::s, Sym::z, Sym::w, Sym::u, Sym::v};
    for (int i = 0; i < 1000; ++i) {
        Poly a = random_poly(rng, syms), b = random_poly(rng, syms), c = random_poly(rng, syms);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a - a).is_zero());
    }
}

TEST_CASE("poly substitution and evaluation") {
    Poly p = s * s - Poly(1);
    CHECK(p.substitute(Sym::s, s + Poly(1)) == s * s + Poly(2) * s);
    CHECK(p.evaluate({{Sym::s, Rational(3)}}) == 8);
    CHECK(p.str() == "s^2 - 1");
    CHECK((Poly(Rational(1, 2)) * w).str() == "1/2*w");
}

TEST_CASE("pochhammer examples") {
    Poly half_one_minus_s = Poly::linear(Sym::s, Rational(-1, 2), Rational(1, 2));
    CHECK(pochhammer(half_one_minus_s, 0) == Poly(1));
    CHECK(pochhammer(w, 2) == w * w + w);
    Poly half_one_plus_s = Poly::linear(Sym::s, Rational(1, 2), Rational(1, 2));
    CHECK(pochhammer(half_one_plus_s, 2) == (s * s + Poly(4) * s + Poly(3)) * Poly(Rational(1, 4)));
}

TEST_CASE("pochhammer splits as (b)_j (b+j)_k") {
    Poly b = Poly::linear(Sym::s, Rational(1, 2), Rational(-3, 2));
    for (int j = 0; j <= 8; ++j)
        for (int k = 0; k <= 8; ++k) REQUIRE(pochhammer(b, j + k) == pochhammer(b, j) * pochhammer(b + Poly(j), k));
}

TEST_CASE("ratfun reduction") {
    RatFun r = ratfun_reduce(s * s - Poly(1), s - Poly(1));
    CHECK(r == RatFun(s + Poly(1)));
    CHECK(r.is_polynomial());

    RatFun zero = ratfun_reduce(Poly(), s);
    CHECK(zero.is_zero());
    CHECK(zero.denominator() == Poly(1));

    Poly n = (s - Poly(3)) * (s - Poly(4)).pow(2) * (s - Poly(5));
    Poly d = s * (s - Poly(1)).pow(2) * (s - Poly(2));
    RatFun c = ratfun_reduce(n, d);
    CHECK(c.numerator() == n);
    CHECK(c.denominator() == d);

    CHECK_THROWS_AS(ratfun_reduce(s, Poly()), std::domain_error);
    CHECK_THROWS_AS(ratfun_reduce(s * w, s), std::invalid_argument);
}

TEST_CASE("ratfun field operations") {
    RatFun a = ratfun_reduce(s + Poly(1), s - Poly(2));
    RatFun b = ratfun_reduce(Poly(3), s * s);
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
    CHECK(a * a.inverse() == RatFun(1));
    CHECK(a.pole_order_at(2) == 1);
    CHECK(a.pole_order_at(-1) == -1);
    CHECK(b.pole_order_at(0) == 2);
    CHECK(a.compose_linear(-1, 5) == ratfun_reduce(Poly(6) - s, Poly(3) - s));
    CHECK(a.evaluate(Rational(3)) == 4);
    CHECK_THROWS(a.evaluate(Rational(2)));
}

TEST_CASE("series_pow examples") {
    TruncSeries one = series_pow(u, Sym::w, 2);
    CHECK(one.coefficient(2, 0) == (w * w + w) * Poly(Rational(1, 2)));
    CHECK(one.coefficient(0, 0) == Poly(1));

    Poly base = Poly(2) * u + Poly(2) * v - (u - v).pow(2);
    TruncSeries f = series_pow(base, Sym::w, 4);
    CHECK(f.coefficient(0, 0) == Poly(1));
    CHECK(f.coefficient(1, 0) == Poly(2) * w);
    CHECK(f.coefficient(1, 1) == Poly(4) * w * w + Poly(6) * w);
    CHECK_THROWS_AS(series_pow(base + Poly(1), Sym::w, 3), std::invalid_argument);
}

TEST_CASE("series_pow at w = -m is the truncated binomial power") {
    const std::vector<Sym> uv{Sym::u, Sym::v};
    std::vector<Poly> bases{u, Poly(2) * u + Poly(2) * v - (u - v).pow(2), u * v + Poly(Rational(1, 3)) * v};
    for (const Poly& base : bases) {
        for (int cutoff : {3, 6}) {
            TruncSeries f = series_pow(base, Sym::w, cutoff);
            for (int m = 1; m <= 5; ++m) {
                Poly inst = f.to_poly().substitute(Sym::w, Poly(-m));
                Poly exact = (Poly(1) - base).pow(m).truncate(uv, cutoff);
                REQUIRE(inst == exact);
            }
        }
    }
}
