#pragma once

#include "g2v/exactalg/poly.hpp"

#include <map>
#include <string>

namespace g2v {

// Laurent polynomial in z = p^-s; negative exponents appear in intermediate Hecke terms.
class ZPoly {
public:
    ZPoly() = default;
    ZPoly(const Rational& c);
    template <class T, std::enable_if_t<std::is_integral_v<T>, int> = 0>
    ZPoly(T c) : ZPoly(Rational(c)) {}

    static ZPoly z(int k = 1);

    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int k) const;
    const std::map<int, Rational>& terms() const { return terms_; }
    bool has_integer_coefficients() const;
    int min_exponent() const;

    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend bool operator==(const ZPoly&, const ZPoly&) = default;

    Rational evaluate(const Rational& z) const;
    // Requires nonnegative exponents.
    Poly to_poly() const;
    std::string str() const;

private:
    std::map<int, Rational> terms_;
};

// z^k (1 - z^n)
ZPoly z_times_one_minus(int k, int n);

}  // namespace g2v
