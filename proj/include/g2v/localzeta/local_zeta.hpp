#pragma once

#include "g2v/localzeta/coset.hpp"
#include "g2v/localzeta/zpoly.hpp"

#include <string>
#include <vector>

namespace g2v {

// z^(v - c) (1 - z^(c+1)) if c >= 0, else 0
ZPoly p_poly(const CosetRep& h);
ZPoly p_poly(const std::vector<CosetRep>& translates);

// p^2 P_hp + P_hp^-1 + (N - 1) P_h + p P_{h*T(p)} + P_{h*T(p^-1)}
ZPoly m_poly_h(const LocalContext& ctx, const CosetRep& h);

// 1 + (p+1) z + p z^2 + (p^2+p) z^3 + p^2 z^4
ZPoly b0(long p);

// B0 P_h - z^2 M_h
ZPoly lemma_combination(const LocalContext& ctx, const CosetRep& h);

// p^2 z^(v-c+1)(1 - z^(c+2)) + z^(v-c-1)(1 - z^c) + p z^(v-c)(1 - z^(c+1))
ZPoly g_poly(int v, int c, long p);

// M_h assembled verbatim from g and the sublattice content table, without the c >= 0 cutoff.
ZPoly m_poly_generic(int v, int c, CubicType type, long p);

// Closed forms at c = 0.
ZPoly c0_combination_display(CubicType type, int v, long p);
// Closed forms of M_h at c = 0; the line times irreducible quadratic case uses N = 1.
ZPoly c0_m_display(CubicType type, int v, long p);

// Conditions on (lambda, h) for the unramified Fourier integral, with f0 = w^2 z + w z^2:
// lambda in Z_p, h' = lambda^-1 h~ integral, h'.f0 integral, and the mod-3 congruence.
bool a0_bullets(const Rational& lambda, const GL2Mat& h, long p);
// lambda in Z_p, lambda | p^c(T(h)), T(h) a ring (for f0).
bool a0_content(const Rational& lambda, const GL2Mat& h, long p);

// |det(lambda^-1 h)|^-1 char(h integral, val(lambda^-1 h) in {0,1}, T(x0(h)) a ring)
// times 1 or N(f_max) - epsilon(x0(h)).
Rational dchi_eval(const LocalContext& ctx, const Rational& lambda, const GL2Mat& h);

// p, alpha, beta, delta, v, c, type, N, epsilon, P_h, combination
std::string coset_csv(const LocalContext& ctx, const std::vector<CosetRep>& reps);

}  // namespace g2v
