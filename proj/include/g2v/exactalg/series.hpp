#pragma once

#include "g2v/exactalg/poly.hpp"

#include <map>
#include <utility>

namespace g2v {

// base (base+1) ... (base+k-1); 1 when k = 0.
Poly pochhammer(const Poly& base, int k);

// Power series in (u, v) truncated at total degree `cutoff`, coefficients polynomial in w.
class TruncSeries {
public:
    explicit TruncSeries(int cutoff) : cutoff_(cutoff) {}

    int cutoff() const { return cutoff_; }
    // Zero polynomial for (j, k) with no stored term.
    Poly coefficient(int j, int k) const;
    void set(int j, int k, Poly coeff);
    const std::map<std::pair<int, int>, Poly>& coefficients() const { return coeffs_; }

    // Collects a polynomial in u, v, w; terms above the cutoff are dropped.
    static TruncSeries from_poly(const Poly& p, int cutoff);
    Poly to_poly() const;

private:
    int cutoff_;
    std::map<std::pair<int, int>, Poly> coeffs_;
};

// (1 - base)^(-w) = sum_k (w)_k base^k / k!, base in u, v without constant term.
TruncSeries series_pow(const Poly& base, Sym exponent, int cutoff);

}  // namespace g2v
