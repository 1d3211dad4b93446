#pragma once

#include "g2v/exactalg/poly.hpp"

#include <utility>
#include <vector>

namespace g2v {

// Dense univariate polynomial over Q, coefficients stored low degree first.
class UPoly {
public:
    UPoly() = default;
    UPoly(const Rational& c);
    explicit UPoly(std::vector<Rational> coeffs);
    static UPoly x();
    static UPoly from_poly(const Poly& p, Sym sym);

    Poly to_poly(Sym sym) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : Rational(0); }

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const Rational& k);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    UPoly monic() const;
    Rational evaluate(const Rational& t) const;
    double evaluate(double t) const;
    // p(slope * x + offset)
    UPoly compose_linear(const Rational& slope, const Rational& offset) const;
    // Multiplicity of t as a root (0 when p(t) != 0); the zero polynomial is rejected.
    int root_multiplicity(const Rational& t) const;

private:
    void trim();
    std::vector<Rational> c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly exact_div(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);

}  // namespace g2v
