#include "g2v/exactalg/poly.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace g2v {

const char* sym_name(Sym sym) {
    static const char* names[kNumSyms] = {"s", "z", "w", "u", "v", "x", "y"};
    return names[static_cast<int>(sym)];
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    for (int i = kNumSyms - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

Poly Poly::var(Sym sym) {
    Exponents e{};
    e[static_cast<int>(sym)] = 1;
    return monomial(e, 1);
}

Poly Poly::monomial(const Exponents& e, const Rational& c) {
    Poly p;
    p.add_term(e, c);
    return p;
}

Poly Poly::linear(Sym sym, const Rational& slope, const Rational& offset) {
    return var(sym) * Poly(slope) + Poly(offset);
}

void Poly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rational Poly::constant_term() const { return coeff(Exponents{}); }

Rational Poly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree(Sym sym) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(sym)]);
    return d;
}

int Poly::total_degree() const {
    return terms_.empty() ? -1 : std::accumulate(terms_.rbegin()->first.begin(), terms_.rbegin()->first.end(), 0);
}

std::set<Sym> Poly::symbols() const {
    std::set<Sym> out;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < kNumSyms; ++i)
            if (e[i] != 0) out.insert(static_cast<Sym>(i));
    return out;
}

std::pair<Exponents, Rational> Poly::leading_term() const {
    if (terms_.empty()) return {Exponents{}, Rational(0)};
    return *terms_.rbegin();
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e;
            for (int i = 0; i < kNumSyms; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::pow(unsigned k) const {
    Poly result(1), base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return result;
}

Poly Poly::substitute(Sym sym, const Poly& value) const {
    int idx = static_cast<int>(sym);
    std::vector<Poly> powers{Poly(1)};
    Poly out;
    for (const auto& [e, c] : terms_) {
        while (static_cast<int>(powers.size()) <= e[idx]) powers.push_back(powers.back() * value);
        Exponents rest = e;
        rest[idx] = 0;
        out += monomial(rest, c) * powers[e[idx]];
    }
    return out;
}

Rational Poly::evaluate(const std::map<Sym, Rational>& values) const {
    Rational total;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < kNumSyms; ++i) {
            if (e[i] == 0) continue;
            auto it = values.find(static_cast<Sym>(i));
            if (it == values.end())
                throw std::invalid_argument(std::string("Poly::evaluate: no value for ") + sym_name(static_cast<Sym>(i)));
            t *= g2v::pow(it->second, e[i]);
        }
        total += t;
    }
    return total;
}

Poly Poly::truncate(const std::vector<Sym>& syms, int cutoff) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (Sym sym : syms) d += e[static_cast<int>(sym)];
        if (d <= cutoff) out.terms_.emplace(e, c);
    }
    return out;
}

Poly Poly::coefficient_of(Sym sym, int k) const {
    Poly out;
    int idx = static_cast<int>(sym);
    for (const auto& [e, c] : terms_)
        if (e[idx] == k) {
            Exponents rest = e;
            rest[idx] = 0;
            out.terms_.emplace(rest, c);
        }
    return out;
}

bool Poly::has_integer_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_integer()) return false;
    return true;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool unit_monomial = e == Exponents{};
        Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (mag != Rational(1) || unit_monomial) {
            os << mag;
            wrote = true;
        }
        for (int i = 0; i < kNumSyms; ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << sym_name(static_cast<Sym>(i));
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace g2v
