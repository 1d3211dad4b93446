#pragma once

#include "g2v/cubicforms/padic.hpp"
#include "g2v/cubicforms/sampling.hpp"

#include <vector>

namespace g2v {

// A prime together with an unramified maximal cubic f_max (content 0, unit discriminant).
struct LocalContext {
    PAdicContext padic;
    BinaryCubic f_max;
    int n_max;  // zeros of f_max on P^1(F_p)

    LocalContext(long p, const BinaryCubic& f_max);
    static LocalContext split(long p) { return LocalContext(p, {0, 1, 1, 0}); }
    static LocalContext reference(long p, Splitting s) { return LocalContext(p, unramified_maximal_cubic(s, p)); }
    long p() const { return padic.p; }
};

// Largest n with p^-n h integral.
int matrix_valuation(const GL2Mat& h, long p);
bool in_M2_Zp(const GL2Mat& h, long p);
bool in_GL2_Zp(const GL2Mat& h, long p);

// Canonical representative (p^alpha, beta; 0, p^delta), 0 <= beta < p^alpha, of the coset h GL2(Z_p),
// with the invariants of f_max . h.
struct CosetRep {
    long p = 2;
    GL2Mat h;
    int alpha = 0, delta = 0;
    Rational beta;
    int v = 0;        // val(det h)
    int c = 0;        // content of f_max . h
    int val = 0;      // matrix valuation of h
    int epsilon = 1;  // 1 if p^-val h is in GL2(Z_p), else 2
    CubicType type = CubicType::three_lines;  // factorization of p^-c f_max . h mod p
    int n_roots = 0;  // zeros of f_max . h on P^1(F_p): p+1 when c >= 1, 0 when c < 0

    friend bool operator==(const CosetRep& a, const CosetRep& b) { return a.p == b.p && a.h == b.h; }
};

CosetRep make_coset(const LocalContext& ctx, const GL2Mat& h);
// Integral cosets with val(det) <= max_det_val, ordered by (v, alpha, beta).
std::vector<CosetRep> coset_reps(const LocalContext& ctx, int max_det_val);

enum class Hecke { T_p, T_p_inverse };
// h g_i for g_i in {diag(1,p)} u {(p,j;0,1)}, scaled by p^-1 for T(p^-1).
std::vector<CosetRep> hecke_translates(const LocalContext& ctx, const CosetRep& h, Hecke which);
// h p^k
CosetRep scalar_translate(const LocalContext& ctx, const CosetRep& h, int k);

// T(x) = span{1, x~(omega, theta)} is closed under multiplication.
bool lattice_is_ring(const LocalContext& ctx, const GL2Mat& x);

}  // namespace g2v
