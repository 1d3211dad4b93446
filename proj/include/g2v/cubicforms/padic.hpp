#pragma once

#include "g2v/cubicforms/binary_cubic.hpp"

#include <map>
#include <string>
#include <vector>

namespace g2v {

struct PAdicContext {
    long p;
    explicit PAdicContext(long prime);
};

bool is_integral(const BinaryCubic& f, long p);

// Largest c with p^-c f integral; throws on the zero cubic.
int content(const BinaryCubic& f, const PAdicContext& ctx);

// (b'; -c') = m (b; -c) mod 3 for f' = m.f; always true when p != 3.
bool dagger_holds(const BinaryCubic& f, const GL2Mat& m, const PAdicContext& ctx);

// Whether span{1, m(omega, theta)} is closed under multiplication: m.f integral and the
// mod-3 congruence. f and m must have Z_p entries; throws std::invalid_argument otherwise.
bool closure_test(const BinaryCubic& f, const GL2Mat& m, const PAdicContext& ctx);

// The mod-3 congruence alone; requires p = 3 and m.f with Z_3 coefficients.
bool dagger_implied_check(const BinaryCubic& f, const GL2Mat& m, const PAdicContext& ctx);

enum class CubicType { irreducible, line_times_irreducible_quadratic, three_lines, double_line_times_line, triple_line };
std::string to_string(CubicType t);

struct RootCount {
    int n;
    CubicType type;
};

// Zeros of f mod p on P^1(F_p) and the factorization shape; f must have content 0.
RootCount roots_in_P1(const BinaryCubic& f, const PAdicContext& ctx);

struct Sublattice {
    GL2Mat m;
    BinaryCubic cubic;  // m.f
    int content;
};

// The p+1 index-p sublattices: m.f for m in {diag(p,1)} and {(1,j;0,p) : 0 <= j < p}.
std::vector<Sublattice> index_p_sublattices(const BinaryCubic& f, const PAdicContext& ctx);

// Content multiset predicted for the p+1 sublattices of p^c f0 from the type of f0.
std::vector<int> expected_sublattice_contents(CubicType f0_type, int c, long p);

struct SubringCount {
    long count = 0;
    std::map<long, long> contents_histogram;  // gcd of the coefficients of m.f -> number of subrings
};

// Subrings of Z^3 of index n <= bound, through lattices span{1, m(omega,theta)} of the
// cubic wz(w+z) with m in row Hermite form.
std::map<int, SubringCount> subrings_of_index(int bound);
std::string subrings_csv(const std::map<int, SubringCount>& counts);

}  // namespace g2v
