#pragma once

#include "g2v/exactalg/ratfun.hpp"
#include "g2v/gammaledger/affine.hpp"

#include <Eigen/Core>
#include <vector>

namespace g2v {

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatMatrix = Eigen::Matrix<RatFun, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<RatFun, Eigen::Dynamic, 1>;

// monomial: x^(2l-2j) y^(2j) + x^(2j) y^(2l-2j); pm: the same in f+ = x+y, f- = x-y.
// The middle index j = l/2 is the single element x^l y^l (resp. f+^l f-^l).
enum class VBasis { monomial, pm };

struct VEvenVector {
    int ell = 2;
    VBasis basis = VBasis::monomial;
    RatVector coords;
};

// (0, ..., 0, 1): x^l y^l or f+^l f-^l
VEvenVector middle_vector(int ell, VBasis basis);
int v_even_dim(int ell);  // l/2 + 1; throws unless l is even and >= 2

// Column j holds the monomial coordinates of the j-th pm basis element.
QMatrix basis_change(int ell);
VEvenVector to_basis(const VEvenVector& v, VBasis basis);

// [sigma; x,y] (kind monomial) or [sigma; f+,f-] (kind pm)
struct DiagonalOp {
    VBasis kind;
    Affine sigma;
};

// ((1-sigma)/2)_m / ((1+sigma)/2)_m
RatFun pochhammer_ratio(const Affine& sigma, int m);
RatVector diag_entries(const DiagonalOp& op, int ell);
// Result is expressed in the operator's own basis.
VEvenVector apply_diag(const DiagonalOp& op, const VEvenVector& v);
// Matrix on monomial coordinates; pm operators are conjugated by basis_change.
RatMatrix operator_matrix(const DiagonalOp& op, int ell);

}  // namespace g2v
