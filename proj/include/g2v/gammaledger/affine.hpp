#pragma once

#include "g2v/exactalg/ratfun.hpp"

#include <compare>
#include <string>

namespace g2v {

// slope * s + offset
struct Affine {
    Rational slope;
    Rational offset;

    Affine() = default;
    Affine(const Rational& slope_, const Rational& offset_) : slope(slope_), offset(offset_) {}
    static Affine constant(const Rational& c) { return Affine(0, c); }
    static Affine s_plus(const Rational& c) { return Affine(1, c); }

    bool is_constant() const { return slope.is_zero(); }
    Rational at(const Rational& s) const { return slope * s + offset; }
    double at(double s) const { return slope.to_double() * s + offset.to_double(); }
    // Same affine form with s replaced by a * s + b.
    Affine compose(const Rational& a, const Rational& b) const { return Affine(slope * a, slope * b + offset); }
    RatFun as_ratfun() const { return RatFun(UPoly(std::vector<Rational>{offset, slope}), UPoly(Rational(1)), Sym::s); }

    Affine operator-() const { return Affine(-slope, -offset); }
    friend Affine operator+(const Affine& a, const Affine& b) { return Affine(a.slope + b.slope, a.offset + b.offset); }
    friend Affine operator-(const Affine& a, const Affine& b) { return Affine(a.slope - b.slope, a.offset - b.offset); }
    friend Affine operator+(const Affine& a, const Rational& c) { return Affine(a.slope, a.offset + c); }
    friend Affine operator-(const Affine& a, const Rational& c) { return Affine(a.slope, a.offset - c); }
    friend Affine operator*(const Rational& k, const Affine& a) { return Affine(k * a.slope, k * a.offset); }
    friend bool operator==(const Affine&, const Affine&) = default;
    friend std::strong_ordering operator<=>(const Affine& a, const Affine& b) {
        if (auto c = a.slope <=> b.slope; c != 0) return c;
        return a.offset <=> b.offset;
    }

    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const Affine& a);

}  // namespace g2v
