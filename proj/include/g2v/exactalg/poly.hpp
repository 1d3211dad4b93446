#pragma once

#include "g2v/exactalg/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace g2v {

// Symbols in their fixed order; x, y name the coordinates of the weight-l space.
enum class Sym : int { s = 0, z, w, u, v, x, y };
inline constexpr int kNumSyms = 7;
const char* sym_name(Sym sym);

using Exponents = std::array<int, kNumSyms>;

// Graded lexicographic, larger symbols compared first.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over Q.
class Poly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    Poly() = default;
    Poly(const Rational& c);
    template <std::integral T>
    Poly(T c) : Poly(Rational(c)) {}

    static Poly var(Sym sym);
    static Poly monomial(const Exponents& e, const Rational& c);
    // slope * sym + offset
    static Poly linear(Sym sym, const Rational& slope, const Rational& offset);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coeff(const Exponents& e) const;
    int degree(Sym sym) const;
    int total_degree() const;
    std::set<Sym> symbols() const;
    std::pair<Exponents, Rational> leading_term() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly pow(unsigned k) const;
    Poly substitute(Sym sym, const Poly& value) const;
    Poly substitute(Sym sym, const Rational& value) const { return substitute(sym, Poly(value)); }
    Rational evaluate(const std::map<Sym, Rational>& values) const;
    // Drops every term whose total degree in the given symbols exceeds cutoff.
    Poly truncate(const std::vector<Sym>& syms, int cutoff) const;
    // Coefficient of sym^k as a polynomial in the other symbols.
    Poly coefficient_of(Sym sym, int k) const;
    bool has_integer_coefficients() const;

    std::string str() const;

private:
    void add_term(const Exponents& e, const Rational& c);
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace g2v
