#include "g2v/intertwiner/v_even.hpp"

#include "g2v/exactalg/linalg.hpp"

#include <cstdlib>
#include <stdexcept>

namespace g2v {

namespace {

mpz_class binomial(int n, int k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

// Coefficients of x^(2l-i) y^i in f+^a f-^b, a + b = 2l.
std::vector<mpz_class> expand_pm(int a, int b) {
    std::vector<mpz_class> out(a + b + 1, 0);
    for (int i = 0; i <= a; ++i)
        for (int k = 0; k <= b; ++k) {
            mpz_class term = binomial(a, i) * binomial(b, k);
            out[i + k] += (k % 2 ? -term : term);
        }
    return out;
}

}  // namespace

int v_even_dim(int ell) {
    if (ell < 2 || ell % 2) throw std::invalid_argument("V_even: weight must be even and >= 2");
    return ell / 2 + 1;
}

VEvenVector middle_vector(int ell, VBasis basis) {
    int n = v_even_dim(ell);
    VEvenVector v{ell, basis, RatVector::Constant(n, RatFun(0))};
    v.coords(n - 1) = RatFun(1);
    return v;
}

QMatrix basis_change(int ell) {
    int n = v_even_dim(ell);
    QMatrix c = QMatrix::Constant(n, n, Rational(0));
    for (int j = 0; j < n; ++j) {
        std::vector<mpz_class> poly = expand_pm(2 * ell - 2 * j, 2 * j);
        if (j < n - 1) {
            std::vector<mpz_class> mirror = expand_pm(2 * j, 2 * ell - 2 * j);
            for (size_t i = 0; i < poly.size(); ++i) poly[i] += mirror[i];
        }
        for (size_t i = 1; i < poly.size(); i += 2)
            if (poly[i] != 0) throw std::logic_error("basis_change: odd monomial in V_even");
        for (int i = 0; i < n; ++i) {
            if (i < n - 1 && poly[2 * i] != poly[2 * ell - 2 * i])
                throw std::logic_error("basis_change: element is not symmetric");
            c(i, j) = Rational(poly[2 * i]);
        }
    }
    return c;
}

VEvenVector to_basis(const VEvenVector& v, VBasis basis) {
    if (v.basis == basis) return v;
    QMatrix c = basis == VBasis::monomial ? basis_change(v.ell) : QMatrix(exact_inverse(basis_change(v.ell)));
    VEvenVector out{v.ell, basis, RatVector::Constant(v.coords.size(), RatFun(0))};
    for (Eigen::Index i = 0; i < c.rows(); ++i)
        for (Eigen::Index k = 0; k < c.cols(); ++k)
            if (!c(i, k).is_zero()) out.coords(i) += RatFun(c(i, k)) * v.coords(k);
    return out;
}

RatFun pochhammer_ratio(const Affine& sigma, int m) {
    Affine lo = Rational(-1, 2) * sigma + Rational(1, 2), hi = Rational(1, 2) * sigma + Rational(1, 2);
    RatFun num(1), den(1);
    for (int i = 0; i < m; ++i) {
        num *= (lo + Rational(i)).as_ratfun();
        den *= (hi + Rational(i)).as_ratfun();
    }
    return num / den;
}

RatVector diag_entries(const DiagonalOp& op, int ell) {
    int n = v_even_dim(ell);
    RatVector d(n);
    for (int j = 0; j < n; ++j) d(j) = pochhammer_ratio(op.sigma, std::abs(ell / 2 - j));
    return d;
}

VEvenVector apply_diag(const DiagonalOp& op, const VEvenVector& v) {
    VEvenVector out = to_basis(v, op.kind);
    RatVector d = diag_entries(op, v.ell);
    for (Eigen::Index j = 0; j < d.size(); ++j) out.coords(j) *= d(j);
    return out;
}

RatMatrix operator_matrix(const DiagonalOp& op, int ell) {
    int n = v_even_dim(ell);
    RatVector d = diag_entries(op, ell);
    RatMatrix m = RatMatrix::Constant(n, n, RatFun(0));
    if (op.kind == VBasis::monomial) {
        for (int j = 0; j < n; ++j) m(j, j) = d(j);
        return m;
    }
    QMatrix c = basis_change(ell), ci = exact_inverse(c);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j)
                if (!c(i, j).is_zero() && !ci(j, k).is_zero()) m(i, k) += RatFun(c(i, j) * ci(j, k)) * d(j);
    return m;
}

}  // namespace g2v
