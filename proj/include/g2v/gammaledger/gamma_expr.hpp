#pragma once

#include "g2v/gammaledger/affine.hpp"

#include <map>
#include <optional>
#include <string>

namespace g2v {

// The one numeric Gamma function used by every closed-form comparison.
double gamma_fn(double x);

// prefactor(s) * 2^two_exp * pi^pi_exp * prod Gamma(arg)^e * prod Lambda(arg)^e,
// Lambda being the completed Riemann zeta function, kept as an opaque symbol.
class GammaExpr {
public:
    GammaExpr() = default;
    GammaExpr(const RatFun& prefactor) : prefactor_(prefactor) {}
    template <std::integral T>
    GammaExpr(T c) : prefactor_(Rational(c)) {}
    GammaExpr(const Rational& c) : prefactor_(c) {}

    static GammaExpr gamma(const Affine& arg, int exponent = 1);
    static GammaExpr lambda(const Affine& arg, int exponent = 1);
    static GammaExpr power_of_two(const Affine& exponent);
    static GammaExpr power_of_pi(const Affine& exponent);
    // Gamma_R(x) = pi^(-x/2) Gamma(x/2)
    static GammaExpr gamma_R(const Affine& arg);
    // Gamma_C(x) = 2 (2 pi)^(-x) Gamma(x)
    static GammaExpr gamma_C(const Affine& arg);

    const RatFun& prefactor() const { return prefactor_; }
    const Affine& two_exponent() const { return two_; }
    const Affine& pi_exponent() const { return pi_; }
    const std::map<Affine, int>& gamma_factors() const { return gammas_; }
    const std::map<Affine, int>& lambda_factors() const { return lambdas_; }
    int gamma_exponent(const Affine& arg) const;
    int lambda_exponent(const Affine& arg) const;

    GammaExpr& operator*=(const GammaExpr& o);
    GammaExpr& operator/=(const GammaExpr& o) { return *this *= o.inverse(); }
    friend GammaExpr operator*(GammaExpr a, const GammaExpr& b) { return a *= b; }
    friend GammaExpr operator/(GammaExpr a, const GammaExpr& b) { return a /= b; }
    friend bool operator==(const GammaExpr& a, const GammaExpr& b);
    GammaExpr inverse() const;
    GammaExpr pow(int k) const;

    // Replaces s by a * s + b everywhere.
    GammaExpr substitute(const Rational& a, const Rational& b) const;
    // Throws std::domain_error when Lambda factors are present.
    double evaluate(double s) const;
    std::string str() const;

    // Raw factor edits used by the rewrite rules.
    void add_gamma(const Affine& arg, int exponent);
    void add_lambda(const Affine& arg, int exponent);
    void scale(const RatFun& r) { prefactor_ *= r; }
    void add_two(const Affine& e) { two_ = two_ + e; }
    void add_pi(const Affine& e) { pi_ = pi_ + e; }

private:
    RatFun prefactor_{1};
    Affine two_, pi_;
    std::map<Affine, int> gammas_, lambdas_;
};

std::ostream& operator<<(std::ostream& os, const GammaExpr& e);

enum class GammaKind { R, C };
GammaExpr expand_RC(GammaKind kind, const Affine& arg);

// Shifts every Gamma argument with nonzero slope to the representative whose constant term
// lies in [0,1); constant arguments are evaluated where they are rational or half-integral
// multiples of sqrt(pi), and otherwise moved to (0,1]. The integer part of the constant
// term of the 2-exponent moves into the prefactor.
GammaExpr gamma_normalize(const GammaExpr& e);

// Exact rewrite Gamma(arg)^e -> Gamma(arg+k)^e times the compensating linear factors.
GammaExpr shift_gamma(const GammaExpr& e, const Affine& arg, int k);

enum class Duplication { forward, backward };
// forward: Gamma(z)Gamma(z+1/2) -> 2^(1-2z) sqrt(pi) Gamma(2z); backward is the inverse.
// The forward rule rewrites min(|e1|,|e2|) copies of the pair; exponents must share a sign.
GammaExpr apply_duplication(const GammaExpr& e, const Affine& z, Duplication direction);

// Lambda(u) = Lambda(1-u): keep the member with positive slope (larger constant if constant).
GammaExpr lambda_canonicalize(const GammaExpr& e);
GammaExpr canonical_form(const GammaExpr& e);

// rational * 2^two * pi^pi
struct ConstantFactor {
    Rational rational{1};
    Rational two_exponent;
    Rational pi_exponent;
    bool is_one() const { return rational == Rational(1) && two_exponent.is_zero() && pi_exponent.is_zero(); }
    double value() const;
    std::string str() const;
};

struct ConstantComparison {
    bool equal = false;
    std::optional<ConstantFactor> constant;  // e1 / e2 when it reduces to rational * 2^a * pi^b
};

ConstantComparison equal_up_to_constant(const GammaExpr& e1, const GammaExpr& e2);

// Pole order at s0 (negative for zeros): Gamma poles at non-positive integers,
// Lambda poles at 0 and 1, plus the prefactor's order.
int pole_order_at(const GammaExpr& e, const Rational& s0);

// Gamma_C(s+l-1) Gamma_C(s+l) Gamma_C(s+2l-1) Gamma_R(s+1)
GammaExpr arch_L_factor(int ell);

// Orders of the archimedean factor's poles at s = -n for n in [n_lo, n_hi]; requires n_lo >= 2l-1.
std::map<long, int> trivial_zero_orders(int ell, long n_lo, long n_hi);

}  // namespace g2v
