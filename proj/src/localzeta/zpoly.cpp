#include "g2v/localzeta/zpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace g2v {

ZPoly::ZPoly(const Rational& c) {
    if (!c.is_zero()) terms_[0] = c;
}

ZPoly ZPoly::z(int k) {
    ZPoly out;
    out.terms_[k] = Rational(1);
    return out;
}

Rational ZPoly::coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool ZPoly::has_integer_coefficients() const {
    for (const auto& [k, c] : terms_)
        if (!c.is_integer()) return false;
    return true;
}

int ZPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    for (const auto& [k, c] : o.terms_) {
        Rational& slot = terms_[k];
        slot += c;
        if (slot.is_zero()) terms_.erase(k);
    }
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    for (const auto& [k, c] : o.terms_) {
        Rational& slot = terms_[k];
        slot -= c;
        if (slot.is_zero()) terms_.erase(k);
    }
    return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    ZPoly out;
    for (const auto& [i, x] : a.terms_)
        for (const auto& [j, y] : b.terms_) {
            Rational& slot = out.terms_[i + j];
            slot += x * y;
            if (slot.is_zero()) out.terms_.erase(i + j);
        }
    return out;
}

Rational ZPoly::evaluate(const Rational& z) const {
    Rational out;
    for (const auto& [k, c] : terms_) out += c * pow(z, k);
    return out;
}

Poly ZPoly::to_poly() const {
    Poly out;
    for (const auto& [k, c] : terms_) {
        if (k < 0) throw std::domain_error("ZPoly::to_poly: negative exponent");
        Exponents e{};
        e[static_cast<int>(Sym::z)] = k;
        out += Poly::monomial(e, c);
    }
    return out;
}

std::string ZPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.str();
            continue;
        }
        if (mag != 1) os << mag.str() << "*";
        os << "z";
        if (k != 1) os << "^" << k;
    }
    return os.str();
}

ZPoly z_times_one_minus(int k, int n) { return ZPoly::z(k) - ZPoly::z(k + n); }

}  // namespace g2v
