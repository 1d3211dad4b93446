#pragma once

// Brute-force references that share no code with the library beyond Rational.

#include "g2v/exactalg/rational.hpp"

#include <array>
#include <map>

namespace g2v::oracle {

using Coeffs = std::array<Rational, 4>;      // a, b, c, d
using Matrix2 = std::array<Rational, 4>;     // m11, m12, m21, m22

// Multiplies omega'' = m11 omega + m12 theta and theta'' = m21 omega + m22 theta inside the
// algebra of the cubic and tests whether every product lies in span_{Z_p}{1, omega'', theta''}.
bool lattice_closed(const Coeffs& f, const Matrix2& m, long p);

// Sublattices of Z^3 of index n that contain (1,1,1) and are closed under the
// componentwise product, enumerated through 3x3 Hermite normal forms.
long z3_subrings(int n);

// Coefficients of zeta(s)^3 zeta(3s-1) / zeta(2s)^2 up to n = bound.
std::map<int, long> z3_subring_series(int bound);

}  // namespace g2v::oracle
