#pragma once

#include "g2v/exactalg/series.hpp"
#include "g2v/gammaledger/gamma_expr.hpp"
#include "g2v/intertwiner/v_even.hpp"
#include "g2v/rootsys/roots.hpp"

#include <map>
#include <utility>
#include <vector>

namespace g2v {

// Factors of M_poly(s) in the order applied:
// [s-1;pm], [s-2;xy]^2, [s-3;pm], [2s-5;xy], [s-2;pm], [s-3;xy]^2, [s-4;pm].
std::vector<DiagonalOp> m_poly_factors();
// The same factors read off a reflection walk: pairing as shift, letter 4 as pm.
std::vector<DiagonalOp> factors_from_walk(const std::vector<WalkRow>& rows);

RatMatrix m_poly(int ell);
VEvenVector apply_chain(const std::vector<DiagonalOp>& ops, const VEvenVector& v);
// Eigenvalue of M_poly(s) on x^l y^l; throws std::logic_error if it is not an eigenvector.
RatFun eigencheck(int ell);

// (s-3)(s-4)^2 ... (s-l-2)^2 (s-l-3) / ((s+l-2)(s+l-3)^2 ... (s-1)^2 (s-2))
RatFun c_poly_product(int ell);
// Gamma(s-2)Gamma(s-3)Gamma(s-2)Gamma(s-1) / (Gamma(s-l-3)Gamma(s-l-2)Gamma(s+l-1)Gamma(s+l-2))
GammaExpr c_poly_gamma(int ell);

// (s-l)(s-l+2)...(s-2) / ((s+1)(s+3)...(s+l-1))
RatFun c_prime(int ell);
struct CPrimeCheck {
    bool xy_after_pm = false;  // [s-1;x,y][s;f+,f-] x^l y^l = c'(s)/2^l f+^l f-^l
    bool pm_after_xy = false;  // [s-1;f+,f-][s;x,y] f+^l f-^l = 2^l c'(s) x^l y^l
};
CPrimeCheck lemma_cs_check(int ell);

// Taylor coefficients p_{j,k}(w) of (1 - 2u - 2v + (u-v)^2)^-w times j! k!, for j + k <= max_order.
std::map<std::pair<int, int>, Poly> pjk_series(int max_order);
// (2w)_{j+k} (w+k+1/2)_j / (w+1/2)_j; throws std::logic_error if the quotient is not a polynomial.
Poly pjk_closed_form(int j, int k);
struct FuvCheck {
    bool series_equals_closed_form = false;
    bool recurrence_holds = false;
    bool symmetric = false;
    int pairs_checked = 0;
};
FuvCheck fuv_check(int max_order);

// Lambda ratio of the Heisenberg walk times c_poly as a Gamma ratio.
GammaExpr c_ell_assemble(int ell);
// Lambda(s-1)^2 Lambda(s) Lambda(2s-4) Gamma(s+l-1)Gamma(s+l-2) / (Gamma(s-1)Gamma(s-2))
GammaExpr eisenstein_normalizer(int ell);
// N(s) c_l(s) against N(5-s), constant included.
ConstantComparison eisenstein_fe_check(int ell);
// Gamma(s-2)Gamma(s-3)/(Gamma(s-l-2)Gamma(s-l-3)) against Gamma(4-s+l)Gamma(3-s+l)/(Gamma(4-s)Gamma(3-s)).
ConstantComparison reflected_gamma_identity(int ell);
// Gamma_R(s-1)^2 Gamma_R(s) Gamma_R(2s-4) Gamma(s+l-1)Gamma(s+l-2)/(Gamma(s-1)Gamma(s-2))
// against 2^s Gamma_R(s-1) Gamma_C(s+l-1) Gamma_C(s+l-2).
ConstantComparison archimedean_normalization_identity(int ell);

}  // namespace g2v
