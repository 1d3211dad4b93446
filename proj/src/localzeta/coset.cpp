#include "g2v/localzeta/coset.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2v {

namespace {

Rational p_pow(long p, int e) { return pow(Rational(p), e); }

// p^-val(x) x, a p-adic unit
Rational unit_part(const Rational& x, long p) { return x / p_pow(p, valuation(x, p)); }

// Representative of beta modulo p^alpha Z_p in [0, p^alpha) with the same valuation denominator.
Rational reduce_mod(const Rational& beta, int alpha, long p) {
    if (beta.is_zero()) return beta;
    int e = valuation(beta, p);
    if (e >= alpha) return Rational(0);
    Rational u = unit_part(beta, p);
    mpz_class modulus = p_pow(p, alpha - e).num();
    mpz_class inv;
    if (!mpz_invert(inv.get_mpz_t(), u.den().get_mpz_t(), modulus.get_mpz_t()))
        throw std::logic_error("reduce_mod: denominator not invertible");
    mpz_class r = (u.num() * inv) % modulus;
    if (r < 0) r += modulus;
    return p_pow(p, e) * Rational(r);
}

}  // namespace

LocalContext::LocalContext(long p, const BinaryCubic& f) : padic(p), f_max(f), n_max(0) {
    if (!is_integral(f, p) || content(f, padic) != 0)
        throw std::invalid_argument("LocalContext: f_max must be p-integral with content 0");
    if (valuation(discriminant(f), p) != 0)
        throw std::invalid_argument("LocalContext: f_max must have unit discriminant");
    n_max = roots_in_P1(f, padic).n;
}

int matrix_valuation(const GL2Mat& h, long p) {
    int out = kInfiniteValuation;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out = std::min(out, valuation(h(r, c), p));
    return out;
}

bool in_M2_Zp(const GL2Mat& h, long p) { return matrix_valuation(h, p) >= 0; }

bool in_GL2_Zp(const GL2Mat& h, long p) { return in_M2_Zp(h, p) && valuation(det(h), p) == 0; }

CosetRep make_coset(const LocalContext& ctx, const GL2Mat& h) {
    const long p = ctx.p();
    if (det(h).is_zero()) throw std::invalid_argument("make_coset: singular matrix");
    // column operations by GL2(Z_p)
    GL2Mat m = h;
    if (!m(1, 0).is_zero() && (m(1, 1).is_zero() || valuation(m(1, 0), p) < valuation(m(1, 1), p))) {
        m.col(0).swap(m.col(1));
    }
    if (!m(1, 0).is_zero()) {
        Rational k = m(1, 0) / m(1, 1);
        for (int r = 0; r < 2; ++r) m(r, 0) -= k * m(r, 1);
    }
    Rational u2 = unit_part(m(1, 1), p), u1 = unit_part(m(0, 0), p);
    for (int r = 0; r < 2; ++r) {
        m(r, 1) /= u2;
        m(r, 0) /= u1;
    }
    CosetRep out;
    out.p = p;
    out.alpha = valuation(m(0, 0), p);
    out.delta = valuation(m(1, 1), p);
    out.beta = reduce_mod(m(0, 1), out.alpha, p);
    out.h = gl2(p_pow(p, out.alpha), out.beta, 0, p_pow(p, out.delta));

    out.v = out.alpha + out.delta;
    out.val = matrix_valuation(out.h, p);
    out.epsilon = out.v - 2 * out.val == 0 ? 1 : 2;
    BinaryCubic f = act_right(ctx.f_max, out.h);
    out.c = content(f, ctx.padic);
    out.type = roots_in_P1(p_pow(p, -out.c) * f, ctx.padic).type;
    out.n_roots = out.c > 0 ? static_cast<int>(p + 1) : out.c == 0 ? roots_in_P1(f, ctx.padic).n : 0;
    return out;
}

std::vector<CosetRep> coset_reps(const LocalContext& ctx, int max_det_val) {
    if (max_det_val < 0) throw std::invalid_argument("coset_reps: max_det_val must be >= 0");
    const long p = ctx.p();
    std::vector<CosetRep> out;
    for (int v = 0; v <= max_det_val; ++v)
        for (int alpha = 0; alpha <= v; ++alpha) {
            long width = p_pow(p, alpha).num().get_si();
            for (long beta = 0; beta < width; ++beta)
                out.push_back(make_coset(ctx, gl2(p_pow(p, alpha), beta, 0, p_pow(p, v - alpha))));
        }
    return out;
}

std::vector<CosetRep> hecke_translates(const LocalContext& ctx, const CosetRep& h, Hecke which) {
    const long p = ctx.p();
    Rational scale = which == Hecke::T_p ? Rational(1) : Rational(1, p);
    std::vector<CosetRep> out;
    GL2Mat g = gl2(1, 0, 0, p);
    out.push_back(make_coset(ctx, scale * (h.h * g)));
    for (long j = 0; j < p; ++j) {
        g = gl2(p, j, 0, 1);
        out.push_back(make_coset(ctx, scale * (h.h * g)));
    }
    return out;
}

CosetRep scalar_translate(const LocalContext& ctx, const CosetRep& h, int k) {
    return make_coset(ctx, pow(Rational(ctx.p()), k) * h.h);
}

bool lattice_is_ring(const LocalContext& ctx, const GL2Mat& x) {
    return in_M2_Zp(x, ctx.p()) && closure_test(ctx.f_max, tilde(x), ctx.padic);
}

}  // namespace g2v
