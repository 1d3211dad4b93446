#include "g2v/exactalg/series.hpp"

#include <stdexcept>

namespace g2v {

Poly pochhammer(const Poly& base, int k) {
    if (k < 0) throw std::invalid_argument("pochhammer: negative length");
    Poly out(1);
    for (int i = 0; i < k; ++i) out *= base + Poly(i);
    return out;
}

Poly TruncSeries::coefficient(int j, int k) const {
    auto it = coeffs_.find({j, k});
    return it == coeffs_.end() ? Poly() : it->second;
}

void TruncSeries::set(int j, int k, Poly coeff) {
    if (j < 0 || k < 0 || j + k > cutoff_) throw std::out_of_range("TruncSeries: index beyond cutoff");
    if (coeff.is_zero())
        coeffs_.erase({j, k});
    else
        coeffs_[{j, k}] = std::move(coeff);
}

TruncSeries TruncSeries::from_poly(const Poly& p, int cutoff) {
    TruncSeries out(cutoff);
    const int iu = static_cast<int>(Sym::u), iv = static_cast<int>(Sym::v);
    for (const auto& [e, c] : p.terms()) {
        for (int i = 0; i < kNumSyms; ++i)
            if (i != iu && i != iv && i != static_cast<int>(Sym::w) && e[i] != 0)
                throw std::invalid_argument("TruncSeries: unexpected symbol");
        if (e[iu] + e[iv] > cutoff) continue;
        Exponents rest = e;
        rest[iu] = rest[iv] = 0;
        out.coeffs_[{e[iu], e[iv]}] += Poly::monomial(rest, c);
    }
    for (auto it = out.coeffs_.begin(); it != out.coeffs_.end();)
        it = it->second.is_zero() ? out.coeffs_.erase(it) : std::next(it);
    return out;
}

Poly TruncSeries::to_poly() const {
    Poly out;
    for (const auto& [jk, c] : coeffs_) {
        Exponents e{};
        e[static_cast<int>(Sym::u)] = jk.first;
        e[static_cast<int>(Sym::v)] = jk.second;
        out += Poly::monomial(e, 1) * c;
    }
    return out;
}

TruncSeries series_pow(const Poly& base, Sym exponent, int cutoff) {
    if (!base.constant_term().is_zero())
        throw std::invalid_argument("series_pow: base has a nonzero constant term");
    for (Sym sym : base.symbols())
        if (sym != Sym::u && sym != Sym::v) throw std::invalid_argument("series_pow: base must be a polynomial in u, v");
    const std::vector<Sym> uv{Sym::u, Sym::v};
    const Poly w = Poly::var(exponent);
    Poly sum(1), power(1), coeff(1);
    for (int k = 1; k <= cutoff; ++k) {
        power = (power * base).truncate(uv, cutoff);
        if (power.is_zero()) break;
        // (w)_k / k! built incrementally
        coeff = coeff * (w + Poly(k - 1)) * Poly(Rational(1, k));
        sum += coeff * power;
    }
    return TruncSeries::from_poly(sum, cutoff);
}

}  // namespace g2v
