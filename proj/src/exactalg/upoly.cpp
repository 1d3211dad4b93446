#include "g2v/exactalg/upoly.hpp"

#include <stdexcept>

namespace g2v {

UPoly::UPoly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::x() { return UPoly(std::vector<Rational>{0, 1}); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::from_poly(const Poly& p, Sym sym) {
    std::vector<Rational> c;
    int idx = static_cast<int>(sym);
    for (const auto& [e, coef] : p.terms()) {
        for (int i = 0; i < kNumSyms; ++i)
            if (i != idx && e[i] != 0)
                throw std::invalid_argument("UPoly: polynomial is not univariate in " + std::string(sym_name(sym)));
        if (static_cast<int>(c.size()) <= e[idx]) c.resize(e[idx] + 1);
        c[e[idx]] = coef;
    }
    return UPoly(std::move(c));
}

Poly UPoly::to_poly(Sym sym) const {
    Poly out;
    for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
        if (c_[k].is_zero()) continue;
        Exponents e{};
        e[static_cast<int>(sym)] = k;
        out += Poly::monomial(e, c_[k]);
    }
    return out;
}

UPoly UPoly::operator-() const {
    UPoly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Rational& k) {
    if (k.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= k;
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(out));
}

UPoly UPoly::monic() const {
    if (c_.empty()) return *this;
    UPoly out = *this;
    out *= Rational(1) / lead();
    return out;
}

Rational UPoly::evaluate(const Rational& t) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double UPoly::evaluate(double t) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->to_double();
    return acc;
}

UPoly UPoly::compose_linear(const Rational& slope, const Rational& offset) const {
    UPoly lin(std::vector<Rational>{offset, slope});
    UPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UPoly(*it);
    return acc;
}

int UPoly::root_multiplicity(const Rational& t) const {
    if (is_zero()) throw std::invalid_argument("UPoly::root_multiplicity: zero polynomial");
    int m = 0;
    std::vector<Rational> cur = c_;
    while (cur.size() > 1) {
        // synthetic division by (x - t)
        std::vector<Rational> q(cur.size() - 1);
        Rational carry;
        for (size_t k = cur.size(); k-- > 1;) {
            carry = cur[k] + carry * t;
            q[k - 1] = carry;
        }
        Rational rem = cur[0] + carry * t;
        if (!rem.is_zero()) break;
        cur = std::move(q);
        ++m;
    }
    return m;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("UPoly: division by zero polynomial");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<Rational> rem = a.coeffs();
    std::vector<Rational> q(a.degree() - b.degree() + 1);
    Rational inv_lead = Rational(1) / b.lead();
    const auto& bc = b.coeffs();
    int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        if (rem[k].is_zero()) continue;
        Rational f = rem[k] * inv_lead;
        q[k - db] = f;
        for (int i = 0; i <= db; ++i) rem[k - db + i] -= f * bc[i];
    }
    return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("UPoly: division is not exact");
    return q;
}

UPoly gcd(UPoly a, UPoly b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.degree() == 0) return UPoly(Rational(1));
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

}  // namespace g2v
