#pragma once

#include "g2v/exactalg/upoly.hpp"

#include <Eigen/Core>

#include <string>

namespace g2v {

// Reduced univariate rational function num/den, den monic.
// Constants carry no meaningful symbol and combine with any other value.
class RatFun {
public:
    RatFun() : den_(Rational(1)) {}
    RatFun(const Rational& c) : num_(c), den_(Rational(1)) {}
    template <std::integral T>
    RatFun(T c) : RatFun(Rational(c)) {}
    RatFun(const Poly& p);
    RatFun(UPoly num, UPoly den, Sym sym);

    static RatFun var(Sym sym) { return RatFun(Poly::var(sym)); }

    Sym symbol() const { return sym_; }
    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    Poly numerator() const { return num_.to_poly(sym_); }
    Poly denominator() const { return den_.to_poly(sym_); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    Rational constant_value() const;

    RatFun operator-() const;
    RatFun inverse() const;
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o) { return *this *= o.inverse(); }
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    friend bool operator==(const RatFun& a, const RatFun& b);

    RatFun pow(long k) const;
    Rational evaluate(const Rational& t) const;
    double evaluate(double t) const;
    // f(slope * sym + offset)
    RatFun compose_linear(const Rational& slope, const Rational& offset) const;
    // Pole order at t: positive for poles, negative for zeros.
    int pole_order_at(const Rational& t) const;

    std::string str() const;

private:
    void normalize();
    Sym sym_ = Sym::s;
    UPoly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RatFun& r);

// Canonical reduced form of n/d; both must be univariate in one common symbol.
RatFun ratfun_reduce(const Poly& n, const Poly& d);

}  // namespace g2v

namespace Eigen {
template <>
struct NumTraits<g2v::RatFun> : GenericNumTraits<g2v::RatFun> {
    typedef g2v::RatFun Real;
    typedef g2v::RatFun NonInteger;
    typedef g2v::RatFun Nested;
    typedef g2v::RatFun Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 20,
        MulCost = 20
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen
