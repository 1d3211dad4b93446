#include "g2v/exactalg/ratfun.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace g2v {

namespace {

Sym single_symbol(const Poly& p, Sym fallback) {
    auto syms = p.symbols();
    if (syms.size() > 1)
        throw std::invalid_argument("RatFun: multivariate rational functions are not supported");
    return syms.empty() ? fallback : *syms.begin();
}

Sym common_symbol(const RatFun& a, const RatFun& b) {
    if (a.is_constant()) return b.symbol();
    if (b.is_constant()) return a.symbol();
    if (a.symbol() != b.symbol())
        throw std::invalid_argument("RatFun: operands use different symbols");
    return a.symbol();
}

}  // namespace

RatFun::RatFun(const Poly& p) : den_(Rational(1)) {
    sym_ = single_symbol(p, Sym::s);
    num_ = UPoly::from_poly(p, sym_);
}

RatFun::RatFun(UPoly num, UPoly den, Sym sym) : sym_(sym), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = UPoly(Rational(1));
        return;
    }
    UPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    Rational lead = den_.lead();
    if (lead != Rational(1)) {
        Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RatFun::constant_value() const {
    if (!is_constant()) throw std::logic_error("RatFun: not a constant");
    return num_.coeff(0);
}

RatFun RatFun::operator-() const {
    RatFun out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw std::domain_error("RatFun: inverse of zero");
    return RatFun(den_, num_, sym_);
}

RatFun& RatFun::operator+=(const RatFun& o) {
    Sym sym = common_symbol(*this, o);
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        sym_ = sym;
        normalize();
        return *this;
    }
    // With both inputs reduced, only the common denominator factor can cancel.
    UPoly g = gcd(den_, o.den_);
    UPoly bq = exact_div(den_, g), dq = exact_div(o.den_, g);
    UPoly n = num_ * dq + o.num_ * bq;
    UPoly d = bq * o.den_;
    sym_ = sym;
    if (n.is_zero()) {
        num_ = UPoly();
        den_ = UPoly(Rational(1));
        return *this;
    }
    UPoly h = gcd(n, g);
    if (h.degree() > 0) {
        n = exact_div(n, h);
        d = exact_div(d, h);
    }
    num_ = std::move(n);
    den_ = std::move(d);
    Rational lead = den_.lead();
    if (lead != Rational(1)) {
        Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
    Sym sym = common_symbol(*this, o);
    if (is_zero() || o.is_zero()) {
        num_ = UPoly();
        den_ = UPoly(Rational(1));
        return *this;
    }
    UPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    UPoly n = exact_div(num_, g1) * exact_div(o.num_, g2);
    UPoly d = exact_div(den_, g2) * exact_div(o.den_, g1);
    num_ = std::move(n);
    den_ = std::move(d);
    sym_ = sym;
    Rational lead = den_.lead();
    if (lead != Rational(1)) {
        Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
    return *this;
}

bool operator==(const RatFun& a, const RatFun& b) {
    if (a.num_ != b.num_ || a.den_ != b.den_) return false;
    return a.is_constant() || a.sym_ == b.sym_;
}

RatFun RatFun::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    RatFun result(1), base = *this;
    while (k) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

Rational RatFun::evaluate(const Rational& t) const {
    Rational d = den_.evaluate(t);
    if (d.is_zero()) throw std::domain_error("RatFun: evaluation at a pole");
    return num_.evaluate(t) / d;
}

// Exact evaluation at the double's rational value avoids cancellation in expanded forms.
double RatFun::evaluate(double t) const {
    Rational x = Rational::from_double(t);
    Rational d = den_.evaluate(x);
    if (d.is_zero()) return num_.evaluate(x).sign() * HUGE_VAL;
    return (num_.evaluate(x) / d).to_double();
}

RatFun RatFun::compose_linear(const Rational& slope, const Rational& offset) const {
    return RatFun(num_.compose_linear(slope, offset), den_.compose_linear(slope, offset), sym_);
}

int RatFun::pole_order_at(const Rational& t) const {
    if (is_zero()) throw std::domain_error("RatFun: order of the zero function");
    return den_.root_multiplicity(t) - num_.root_multiplicity(t);
}

std::string RatFun::str() const {
    if (den_.is_constant()) return numerator().str();
    return "(" + numerator().str() + ")/(" + denominator().str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFun& r) { return os << r.str(); }

RatFun ratfun_reduce(const Poly& n, const Poly& d) {
    if (d.is_zero()) throw std::domain_error("ratfun_reduce: zero denominator");
    Sym sym = single_symbol(n, single_symbol(d, Sym::s));
    Sym dsym = single_symbol(d, sym);
    if (dsym != sym) throw std::invalid_argument("ratfun_reduce: numerator and denominator use different symbols");
    return RatFun(UPoly::from_poly(n, sym), UPoly::from_poly(d, sym), sym);
}

}  // namespace g2v
