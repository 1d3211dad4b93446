#pragma once

#include "g2v/cubicforms/padic.hpp"

#include <random>

namespace g2v {

using Rng = std::mt19937_64;

long uniform_int(Rng& rng, long lo, long hi);

// Integer matrix with entries in [-bound, bound] and determinant prime to p.
GL2Mat random_unit_matrix(Rng& rng, long p, long bound = 6);
// Integer matrix with entries in [-bound, bound] and nonzero determinant.
GL2Mat random_integral_matrix(Rng& rng, long bound);
// Integer coefficients in [-bound, bound].
BinaryCubic random_cubic(Rng& rng, long bound);

// Splitting of the unramified etale algebra Z_p^3, Z_p x Z_{p^2}, Z_{p^3}.
enum class Splitting { split, partial, inert };
std::string to_string(Splitting s);

// A maximal cubic for the splitting: wz(w+z); w*(irreducible quadratic); an irreducible cubic mod p.
// The last two have unit discriminant, hence are maximal.
BinaryCubic unramified_maximal_cubic(Splitting s, long p);

}  // namespace g2v
