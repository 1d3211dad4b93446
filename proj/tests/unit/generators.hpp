#pragma once

#include "g2v/exactalg/poly.hpp"

#include <random>

namespace g2v::testing {

inline Rational random_rational(std::mt19937_64& rng, long bound = 9) {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    return Rational(num(rng), den(rng));
}

inline long random_int(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Poly random_poly(std::mt19937_64& rng, std::vector<Sym> syms, int terms = 4, int max_exp = 2) {
    Poly p;
    for (int t = 0; t < terms; ++t) {
        Exponents e{};
        for (Sym s : syms) e[static_cast<int>(s)] = static_cast<int>(random_int(rng, 0, max_exp));
        p += Poly::monomial(e, random_rational(rng));
    }
    return p;
}

}  // namespace g2v::testing
