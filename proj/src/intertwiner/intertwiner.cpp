#include "g2v/intertwiner/intertwiner.hpp"

#include <stdexcept>

namespace g2v {

namespace {

const Affine kS = Affine::s_plus(0);

RatFun lin(long c) { return Affine::s_plus(c).as_ratfun(); }

GammaExpr G(const Affine& a, int e = 1) { return GammaExpr::gamma(a, e); }
GammaExpr L(const Affine& a, int e = 1) { return GammaExpr::lambda(a, e); }

bool same_vector(const VEvenVector& a, const VEvenVector& b) {
    VEvenVector bb = to_basis(b, a.basis);
    return a.coords == bb.coords;
}

}  // namespace

std::vector<DiagonalOp> m_poly_factors() {
    auto xy = [](const Affine& a) { return DiagonalOp{VBasis::monomial, a}; };
    auto pm = [](const Affine& a) { return DiagonalOp{VBasis::pm, a}; };
    return {pm(kS - 1), xy(kS - 2), xy(kS - 2), pm(kS - 3), xy(Affine(2, -5)),
            pm(kS - 2), xy(kS - 3), xy(kS - 3), pm(kS - 4)};
}

std::vector<DiagonalOp> factors_from_walk(const std::vector<WalkRow>& rows) {
    std::vector<DiagonalOp> out;
    for (const WalkRow& r : rows) out.push_back({r.kind == OperatorKind::pm ? VBasis::pm : VBasis::monomial, r.pairing});
    return out;
}

RatMatrix m_poly(int ell) {
    int n = v_even_dim(ell);
    RatMatrix m = RatMatrix::Identity(n, n);
    for (const DiagonalOp& op : m_poly_factors()) m = RatMatrix(operator_matrix(op, ell) * m);
    return m;
}

VEvenVector apply_chain(const std::vector<DiagonalOp>& ops, const VEvenVector& v) {
    VEvenVector out = v;
    for (const DiagonalOp& op : ops) out = apply_diag(op, out);
    return out;
}

RatFun eigencheck(int ell) {
    VEvenVector v = to_basis(apply_chain(m_poly_factors(), middle_vector(ell, VBasis::monomial)), VBasis::monomial);
    const Eigen::Index mid = v.coords.size() - 1;
    for (Eigen::Index j = 0; j < mid; ++j)
        if (!v.coords(j).is_zero()) throw std::logic_error("eigencheck: x^l y^l is not an eigenvector");
    return v.coords(mid);
}

RatFun c_poly_product(int ell) {
    v_even_dim(ell);
    RatFun num = lin(-3) * lin(-ell - 3), den = lin(ell - 2) * lin(-2);
    for (int k = 4; k <= ell + 2; ++k) num *= lin(-k).pow(2);
    for (int k = ell - 3; k >= -1; --k) den *= lin(k).pow(2);
    return num / den;
}

GammaExpr c_poly_gamma(int ell) {
    return G(kS - 2, 2) * G(kS - 3) * G(kS - 1) / (G(kS - (ell + 3)) * G(kS - (ell + 2)) * G(kS + (ell - 1)) * G(kS + (ell - 2)));
}

RatFun c_prime(int ell) {
    v_even_dim(ell);
    RatFun out(1);
    for (int k = ell; k >= 2; k -= 2) out *= lin(-k);
    for (int k = 1; k <= ell - 1; k += 2) out /= lin(k);
    return out;
}

CPrimeCheck lemma_cs_check(int ell) {
    RatFun cp = c_prime(ell);
    Rational two_l = pow(Rational(2), ell);
    CPrimeCheck out;
    VEvenVector a = apply_chain({{VBasis::pm, kS}, {VBasis::monomial, kS - 1}}, middle_vector(ell, VBasis::monomial));
    VEvenVector target_a = middle_vector(ell, VBasis::pm);
    target_a.coords *= cp / RatFun(two_l);
    out.xy_after_pm = same_vector(a, target_a);
    VEvenVector b = apply_chain({{VBasis::monomial, kS}, {VBasis::pm, kS - 1}}, middle_vector(ell, VBasis::pm));
    VEvenVector target_b = middle_vector(ell, VBasis::monomial);
    target_b.coords *= cp * RatFun(two_l);
    out.pm_after_xy = same_vector(b, target_b);
    return out;
}

std::map<std::pair<int, int>, Poly> pjk_series(int max_order) {
    Poly u = Poly::var(Sym::u), v = Poly::var(Sym::v);
    Poly base = Poly(2) * u + Poly(2) * v - (u - v).pow(2);
    TruncSeries series = series_pow(base, Sym::w, max_order);
    std::map<std::pair<int, int>, Poly> out;
    for (int j = 0; j <= max_order; ++j)
        for (int k = 0; j + k <= max_order; ++k) {
            mpz_class f = 1;
            for (int i = 2; i <= j; ++i) f *= i;
            for (int i = 2; i <= k; ++i) f *= i;
            out[{j, k}] = Poly(Rational(f)) * series.coefficient(j, k);
        }
    return out;
}

Poly pjk_closed_form(int j, int k) {
    if (j < 0 || k < 0) throw std::invalid_argument("pjk_closed_form: negative index");
    Poly two_w = Poly::linear(Sym::w, 2, 0);
    Poly num = pochhammer(two_w, j + k) * pochhammer(Poly::linear(Sym::w, 1, Rational(2 * k + 1, 2)), j);
    Poly den = pochhammer(Poly::linear(Sym::w, 1, Rational(1, 2)), j);
    RatFun r = ratfun_reduce(num, den);
    if (!r.is_polynomial()) throw std::logic_error("pjk_closed_form: quotient is not a polynomial");
    return r.numerator();
}

FuvCheck fuv_check(int max_order) {
    if (max_order < 2) throw std::invalid_argument("fuv_check: max_order must be >= 2");
    auto series = pjk_series(max_order);
    FuvCheck out{true, true, true, 0};
    auto p = [&](int j, int k) { return j < 0 || k < 0 ? Poly() : series.at({j, k}); };
    for (const auto& [jk, poly] : series) {
        auto [j, k] = jk;
        ++out.pairs_checked;
        if (poly != pjk_closed_form(j, k)) out.series_equals_closed_form = false;
        if (poly != series.at({k, j})) out.symmetric = false;
        Poly shifted = poly.substitute(Sym::w, Poly::linear(Sym::w, 1, -1));
        Poly rhs = poly - Poly(2 * j) * p(j - 1, k) - Poly(2 * k) * p(j, k - 1) + Poly(j * (j - 1)) * p(j - 2, k) -
                   Poly(2 * j * k) * p(j - 1, k - 1) + Poly(k * (k - 1)) * p(j, k - 2);
        if (shifted != rhs) out.recurrence_holds = false;
    }
    return out;
}

GammaExpr c_ell_assemble(int ell) {
    v_even_dim(ell);
    return lambda_ratio_product(reflection_walk(lambda_s(), parse_word("[412434214]"))) * c_poly_gamma(ell);
}

GammaExpr eisenstein_normalizer(int ell) {
    v_even_dim(ell);
    return L(kS - 1, 2) * L(kS) * L(Affine(2, -4)) * G(kS + (ell - 1)) * G(kS + (ell - 2)) / (G(kS - 1) * G(kS - 2));
}

ConstantComparison eisenstein_fe_check(int ell) {
    GammaExpr n = eisenstein_normalizer(ell);
    return equal_up_to_constant(n * c_ell_assemble(ell), n.substitute(-1, 5));
}

ConstantComparison reflected_gamma_identity(int ell) {
    v_even_dim(ell);
    GammaExpr lhs = G(kS - 2) * G(kS - 3) / (G(kS - (ell + 2)) * G(kS - (ell + 3)));
    GammaExpr rhs = G(Affine(-1, 4 + ell)) * G(Affine(-1, 3 + ell)) / (G(Affine(-1, 4)) * G(Affine(-1, 3)));
    return equal_up_to_constant(lhs, rhs);
}

ConstantComparison archimedean_normalization_identity(int ell) {
    v_even_dim(ell);
    GammaExpr lhs = GammaExpr::gamma_R(kS - 1).pow(2) * GammaExpr::gamma_R(kS) * GammaExpr::gamma_R(Affine(2, -4)) *
                    G(kS + (ell - 1)) * G(kS + (ell - 2)) / (G(kS - 1) * G(kS - 2));
    GammaExpr rhs = GammaExpr::power_of_two(kS) * GammaExpr::gamma_R(kS - 1) * GammaExpr::gamma_C(kS + (ell - 1)) *
                    GammaExpr::gamma_C(kS + (ell - 2));
    // Gamma((s-1)/2) Gamma(s/2) -> Gamma(s-1)
    GammaExpr ratio = apply_duplication(lhs / rhs, Affine(Rational(1, 2), Rational(-1, 2)), Duplication::forward);
    return equal_up_to_constant(gamma_normalize(ratio), GammaExpr());
}

}  // namespace g2v
