#include "g2v/localzeta/local_zeta.hpp"

#include <sstream>

namespace g2v {

namespace {

ZPoly zt(int k, int n) { return z_times_one_minus(k, n); }

const BinaryCubic kF0{0, 1, 1, 0};

}  // namespace

ZPoly p_poly(const CosetRep& h) {
    if (h.c < 0) return ZPoly();
    return zt(h.v - h.c, h.c + 1);
}

ZPoly p_poly(const std::vector<CosetRep>& translates) {
    ZPoly out;
    for (const CosetRep& t : translates) out += p_poly(t);
    return out;
}

ZPoly m_poly_h(const LocalContext& ctx, const CosetRep& h) {
    const long p = ctx.p();
    ZPoly out = ZPoly(p * p) * p_poly(scalar_translate(ctx, h, 1));
    out += p_poly(scalar_translate(ctx, h, -1));
    out += ZPoly(h.n_roots - 1) * p_poly(h);
    out += ZPoly(p) * p_poly(hecke_translates(ctx, h, Hecke::T_p));
    out += p_poly(hecke_translates(ctx, h, Hecke::T_p_inverse));
    return out;
}

ZPoly b0(long p) {
    return ZPoly(1) + ZPoly(p + 1) * ZPoly::z(1) + ZPoly(p) * ZPoly::z(2) + ZPoly(p * p + p) * ZPoly::z(3) +
           ZPoly(p * p) * ZPoly::z(4);
}

ZPoly lemma_combination(const LocalContext& ctx, const CosetRep& h) {
    return b0(ctx.p()) * p_poly(h) - ZPoly::z(2) * m_poly_h(ctx, h);
}

ZPoly g_poly(int v, int c, long p) {
    return ZPoly(p * p) * zt(v - c + 1, c + 2) + zt(v - c - 1, c) + ZPoly(p) * zt(v - c, c + 1);
}

ZPoly m_poly_generic(int v, int c, CubicType type, long p) {
    ZPoly out = g_poly(v, c, p);
    for (int cc : expected_sublattice_contents(type, c, p)) {
        out += ZPoly(p) * zt(v + 1 - cc, cc + 1);  // h g_i: v + 1, content cc
        out += zt(v - cc, cc);                     // h p^-1 g_i: v - 1, content cc - 1
    }
    return out;
}

ZPoly c0_combination_display(CubicType type, int v, long p) {
    ZPoly lead = ZPoly::z(v) * (ZPoly(1) + ZPoly(p) * ZPoly::z(1));
    ZPoly one_minus_z = zt(0, 1);
    switch (type) {
        case CubicType::irreducible: return lead * zt(0, 3);
        case CubicType::line_times_irreducible_quadratic: return lead * zt(0, 2);
        case CubicType::three_lines: return lead * one_minus_z * one_minus_z * (ZPoly(1) + ZPoly(2) * ZPoly::z(1));
        case CubicType::double_line_times_line: return lead * one_minus_z * zt(0, 2);
        case CubicType::triple_line: return ZPoly();
    }
    return ZPoly();
}

ZPoly c0_m_display(CubicType type, int v, long p) {
    ZPoly head = ZPoly(p * p) * zt(v + 1, 2);
    switch (type) {
        case CubicType::irreducible: return head - zt(v, 1);
        case CubicType::line_times_irreducible_quadratic: return head + ZPoly(p) * zt(v + 1, 1);
        case CubicType::three_lines: return head + ZPoly(2) * zt(v, 1) + ZPoly(3 * p) * zt(v + 1, 1);
        case CubicType::double_line_times_line:
            return head + zt(v, 1) + ZPoly(p) * zt(v + 1, 1) + ZPoly(p) * zt(v, 2) + zt(v - 1, 1);
        case CubicType::triple_line: return head + ZPoly(p) * zt(v - 1, 3) + zt(v - 2, 2);
    }
    return ZPoly();
}

bool a0_bullets(const Rational& lambda, const GL2Mat& h, long p) {
    if (lambda.is_zero() || !in_Zp(lambda, p)) return false;
    GL2Mat hp = (Rational(1) / lambda) * tilde(h);
    if (!in_M2_Zp(hp, p)) return false;
    BinaryCubic g = act_left(hp, kF0);
    if (!in_Zp(g.a, p) || !in_Zp(g.d, p)) return false;
    // (beta1 - lambda^-1 (d + b)) / 3 and (gamma1 - lambda^-1 (c + a)) / 3 with h = (a, b; c, d)
    Rational li = Rational(1) / lambda;
    return in_Zp((g.b - li * (h(1, 1) + h(0, 1))) / 3, p) && in_Zp((g.c - li * (h(1, 0) + h(0, 0))) / 3, p);
}

bool a0_content(const Rational& lambda, const GL2Mat& h, long p) {
    LocalContext ctx(p, kF0);
    if (lambda.is_zero() || !lattice_is_ring(ctx, h)) return false;
    int k = valuation(lambda, p);
    return k >= 0 && k <= content(act_right(kF0, h), ctx.padic);
}

Rational dchi_eval(const LocalContext& ctx, const Rational& lambda, const GL2Mat& h) {
    const long p = ctx.p();
    if (lambda.is_zero()) throw std::invalid_argument("dchi_eval: lambda must be nonzero");
    if (!in_M2_Zp(h, p)) return Rational(0);
    GL2Mat scaled = (Rational(1) / lambda) * h;
    int k = matrix_valuation(scaled, p);
    if (k != 0 && k != 1) return Rational(0);
    GL2Mat x0 = pow(Rational(p), -matrix_valuation(h, p)) * h;
    if (!lattice_is_ring(ctx, x0)) return Rational(0);
    Rational weight = pow(Rational(p), valuation(det(scaled), p));
    if (k == 0) return weight;
    int epsilon = in_GL2_Zp(x0, p) ? 1 : 2;
    return weight * Rational(ctx.n_max - epsilon);
}

std::string coset_csv(const LocalContext& ctx, const std::vector<CosetRep>& reps) {
    std::ostringstream os;
    os << "p,alpha,beta,delta,v,c,type,N,epsilon,P_h,combination\n";
    for (const CosetRep& h : reps) {
        os << h.p << "," << h.alpha << "," << h.beta.str() << "," << h.delta << "," << h.v << "," << h.c << ","
           << to_string(h.type) << "," << h.n_roots << "," << h.epsilon << "," << p_poly(h).str() << ","
           << lemma_combination(ctx, h).str() << "\n";
    }
    return os.str();
}

}  // namespace g2v
