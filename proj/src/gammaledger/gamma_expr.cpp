#include "g2v/gammaledger/gamma_expr.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace g2v {

std::string Affine::str() const {
    std::ostringstream os;
    if (slope.is_zero()) return offset.str();
    if (slope == Rational(-1))
        os << "-";
    else if (slope != Rational(1))
        os << slope << "*";
    os << "s";
    if (offset.sign() > 0) os << "+" << offset;
    if (offset.sign() < 0) os << offset;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Affine& a) { return os << a.str(); }

double gamma_fn(double x) { return std::tgamma(x); }

namespace {

void bump(std::map<Affine, int>& m, const Affine& arg, int e) {
    if (e == 0) return;
    int& slot = m[arg];
    slot += e;
    if (slot == 0) m.erase(arg);
}

// (x)(x+1)...(x+n-1) as a rational function of s, n >= 0
RatFun rising(const Affine& x, long n) {
    RatFun out(1);
    for (long i = 0; i < n; ++i) out *= (x + Rational(i)).as_ratfun();
    return out;
}

// Gamma(x + n) / Gamma(x) for any integer n
RatFun shift_ratio(const Affine& x, long n) {
    if (n >= 0) return rising(x, n);
    return rising(x + Rational(n), -n).inverse();
}

}  // namespace

GammaExpr GammaExpr::gamma(const Affine& arg, int exponent) {
    GammaExpr e;
    e.add_gamma(arg, exponent);
    return e;
}

GammaExpr GammaExpr::lambda(const Affine& arg, int exponent) {
    GammaExpr e;
    e.add_lambda(arg, exponent);
    return e;
}

GammaExpr GammaExpr::power_of_two(const Affine& exponent) {
    GammaExpr e;
    e.two_ = exponent;
    return e;
}

GammaExpr GammaExpr::power_of_pi(const Affine& exponent) {
    GammaExpr e;
    e.pi_ = exponent;
    return e;
}

GammaExpr GammaExpr::gamma_R(const Affine& arg) {
    GammaExpr e = gamma(Rational(1, 2) * arg);
    e.pi_ = Rational(-1, 2) * arg;
    return e;
}

GammaExpr GammaExpr::gamma_C(const Affine& arg) {
    GammaExpr e = gamma(arg);
    e.prefactor_ = RatFun(2);
    e.two_ = -arg;
    e.pi_ = -arg;
    return e;
}

int GammaExpr::gamma_exponent(const Affine& arg) const {
    auto it = gammas_.find(arg);
    return it == gammas_.end() ? 0 : it->second;
}

int GammaExpr::lambda_exponent(const Affine& arg) const {
    auto it = lambdas_.find(arg);
    return it == lambdas_.end() ? 0 : it->second;
}

void GammaExpr::add_gamma(const Affine& arg, int exponent) { bump(gammas_, arg, exponent); }
void GammaExpr::add_lambda(const Affine& arg, int exponent) { bump(lambdas_, arg, exponent); }

GammaExpr& GammaExpr::operator*=(const GammaExpr& o) {
    prefactor_ *= o.prefactor_;
    two_ = two_ + o.two_;
    pi_ = pi_ + o.pi_;
    for (const auto& [a, e] : o.gammas_) bump(gammas_, a, e);
    for (const auto& [a, e] : o.lambdas_) bump(lambdas_, a, e);
    return *this;
}

bool operator==(const GammaExpr& a, const GammaExpr& b) {
    return a.prefactor_ == b.prefactor_ && a.two_ == b.two_ && a.pi_ == b.pi_ && a.gammas_ == b.gammas_ &&
           a.lambdas_ == b.lambdas_;
}

GammaExpr GammaExpr::inverse() const {
    GammaExpr out;
    out.prefactor_ = prefactor_.inverse();
    out.two_ = -two_;
    out.pi_ = -pi_;
    for (const auto& [a, e] : gammas_) out.gammas_[a] = -e;
    for (const auto& [a, e] : lambdas_) out.lambdas_[a] = -e;
    return out;
}

GammaExpr GammaExpr::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    GammaExpr out;
    for (int i = 0; i < k; ++i) out *= *this;
    return out;
}

GammaExpr GammaExpr::substitute(const Rational& a, const Rational& b) const {
    GammaExpr out;
    out.prefactor_ = prefactor_.compose_linear(a, b);
    out.two_ = two_.compose(a, b);
    out.pi_ = pi_.compose(a, b);
    for (const auto& [arg, e] : gammas_) bump(out.gammas_, arg.compose(a, b), e);
    for (const auto& [arg, e] : lambdas_) bump(out.lambdas_, arg.compose(a, b), e);
    return out;
}

double GammaExpr::evaluate(double s) const {
    if (!lambdas_.empty()) throw std::domain_error("GammaExpr: Lambda factors have no numeric evaluation");
    double value = prefactor_.evaluate(s) * std::exp2(two_.at(s)) * std::pow(std::numbers::pi, pi_.at(s));
    for (const auto& [arg, e] : gammas_) value *= std::pow(gamma_fn(arg.at(s)), e);
    return value;
}

std::string GammaExpr::str() const {
    std::ostringstream os;
    os << prefactor_.str();
    if (two_ != Affine()) os << " * 2^(" << two_ << ")";
    if (pi_ != Affine()) os << " * pi^(" << pi_ << ")";
    for (const auto& [arg, e] : gammas_) {
        os << " * Gamma(" << arg << ")";
        if (e != 1) os << "^" << e;
    }
    for (const auto& [arg, e] : lambdas_) {
        os << " * Lambda(" << arg << ")";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GammaExpr& e) { return os << e.str(); }

GammaExpr expand_RC(GammaKind kind, const Affine& arg) {
    return kind == GammaKind::R ? GammaExpr::gamma_R(arg) : GammaExpr::gamma_C(arg);
}

GammaExpr shift_gamma(const GammaExpr& e, const Affine& arg, int k) {
    int exponent = e.gamma_exponent(arg);
    if (exponent == 0) throw std::invalid_argument("shift_gamma: no factor Gamma(" + arg.str() + ")");
    GammaExpr out = e;
    out.add_gamma(arg, -exponent);
    out.add_gamma(arg + Rational(k), exponent);
    // Gamma(arg) = Gamma(arg+k) / [Gamma(arg+k)/Gamma(arg)]
    out.scale(shift_ratio(arg, k).pow(-exponent));
    return out;
}

GammaExpr gamma_normalize(const GammaExpr& e) {
    GammaExpr out(e.prefactor());
    Rational whole(floor(e.two_exponent().offset));
    out.add_two(e.two_exponent() - whole);
    out.scale(RatFun(pow(Rational(2), whole.num().get_si())));
    out.add_pi(e.pi_exponent());
    for (const auto& [arg, exp] : e.lambda_factors()) out.add_lambda(arg, exp);
    for (const auto& [arg, exp] : e.gamma_factors()) {
        if (!arg.is_constant()) {
            Rational n(floor(arg.offset));
            Affine rep = arg - n;
            out.add_gamma(rep, exp);
            out.scale(shift_ratio(rep, n.num().get_si()).pow(exp));
            continue;
        }
        const Rational& r = arg.offset;
        if (r.is_integer() && r.sign() <= 0) {
            out.add_gamma(arg, exp);  // pole, left alone
            continue;
        }
        Rational rep = r.is_integer() ? Rational(1) : (r.den() == 2 ? Rational(1, 2) : r - Rational(ceil(r)) + 1);
        long n = (r - rep).num().get_si();
        out.scale(shift_ratio(Affine::constant(rep), n).pow(exp));
        if (rep == Rational(1)) continue;
        if (rep == Rational(1, 2)) {
            out.add_pi(Affine::constant(Rational(exp, 2)));
            continue;
        }
        out.add_gamma(Affine::constant(rep), exp);
    }
    return out;
}

GammaExpr apply_duplication(const GammaExpr& e, const Affine& z, Duplication direction) {
    GammaExpr out = e;
    const Affine z_half = z + Rational(1, 2);
    const Affine two_z = Rational(2) * z;
    // Gamma(z) Gamma(z+1/2) = 2^(1-2z) sqrt(pi) Gamma(2z)
    GammaExpr pair_rule = GammaExpr::power_of_two(Affine::constant(1) - two_z) *
                          GammaExpr::power_of_pi(Affine::constant(Rational(1, 2))) * GammaExpr::gamma(two_z);
    if (direction == Duplication::forward) {
        int e1 = e.gamma_exponent(z), e2 = e.gamma_exponent(z_half);
        if (e1 == 0 || e2 == 0 || (e1 > 0) != (e2 > 0))
            throw std::invalid_argument("apply_duplication: no pair Gamma(" + z.str() + ")Gamma(" + z_half.str() + ")");
        int k = (e1 > 0 ? 1 : -1) * std::min(std::abs(e1), std::abs(e2));
        out.add_gamma(z, -k);
        out.add_gamma(z_half, -k);
        return out * pair_rule.pow(k);
    }
    int k = e.gamma_exponent(two_z);
    if (k == 0) throw std::invalid_argument("apply_duplication: no factor Gamma(" + two_z.str() + ")");
    out.add_gamma(two_z, -k);
    GammaExpr split = GammaExpr::gamma(z) * GammaExpr::gamma(z_half) / pair_rule * GammaExpr::gamma(two_z);
    return out * split.pow(k);
}

GammaExpr lambda_canonicalize(const GammaExpr& e) {
    GammaExpr out(e.prefactor());
    out.add_two(e.two_exponent());
    out.add_pi(e.pi_exponent());
    for (const auto& [arg, exp] : e.gamma_factors()) out.add_gamma(arg, exp);
    for (const auto& [arg, exp] : e.lambda_factors()) {
        Affine refl = Affine::constant(1) - arg;
        bool keep = arg.slope.sign() > 0 || (arg.slope.is_zero() && arg.offset >= refl.offset);
        out.add_lambda(keep ? arg : refl, exp);
    }
    return out;
}

GammaExpr canonical_form(const GammaExpr& e) { return lambda_canonicalize(gamma_normalize(e)); }

double ConstantFactor::value() const {
    return rational.to_double() * std::exp2(two_exponent.to_double()) *
           std::pow(std::numbers::pi, pi_exponent.to_double());
}

std::string ConstantFactor::str() const {
    std::ostringstream os;
    os << rational;
    if (!two_exponent.is_zero()) os << " * 2^(" << two_exponent << ")";
    if (!pi_exponent.is_zero()) os << " * pi^(" << pi_exponent << ")";
    return os.str();
}

ConstantComparison equal_up_to_constant(const GammaExpr& e1, const GammaExpr& e2) {
    GammaExpr ratio = canonical_form(canonical_form(e1) / canonical_form(e2));
    ConstantComparison out;
    if (!ratio.lambda_factors().empty()) return out;
    // Leftover constant factors such as Gamma(1/3) leave the constant undetermined.
    bool determinable = true;
    for (const auto& [arg, exp] : ratio.gamma_factors()) {
        if (!arg.is_constant()) return out;
        determinable = false;
    }
    if (!ratio.prefactor().is_constant()) return out;
    if (!ratio.two_exponent().is_constant() || !ratio.pi_exponent().is_constant()) return out;
    out.equal = true;
    if (determinable)
        out.constant = ConstantFactor{ratio.prefactor().constant_value(), ratio.two_exponent().offset,
                                      ratio.pi_exponent().offset};
    return out;
}

int pole_order_at(const GammaExpr& e, const Rational& s0) {
    int order = e.prefactor().pole_order_at(s0);
    for (const auto& [arg, exp] : e.gamma_factors()) {
        Rational x = arg.at(s0);
        if (x.is_integer() && x.sign() <= 0) order += exp;
    }
    for (const auto& [arg, exp] : e.lambda_factors()) {
        Rational x = arg.at(s0);
        if (x == Rational(0) || x == Rational(1)) order += exp;
    }
    return order;
}

GammaExpr arch_L_factor(int ell) {
    if (ell < 2 || ell % 2 != 0) throw std::invalid_argument("arch_L_factor: weight must be even and >= 2");
    return GammaExpr::gamma_C(Affine::s_plus(ell - 1)) * GammaExpr::gamma_C(Affine::s_plus(ell)) *
           GammaExpr::gamma_C(Affine::s_plus(2 * ell - 1)) * GammaExpr::gamma_R(Affine::s_plus(1));
}

std::map<long, int> trivial_zero_orders(int ell, long n_lo, long n_hi) {
    GammaExpr factor = arch_L_factor(ell);
    if (n_lo < 2L * ell - 1)
        throw std::invalid_argument("trivial_zero_orders: range starts below n = 2l-1 where not all Gamma_C factors have poles");
    std::map<long, int> out;
    for (long n = n_lo; n <= n_hi; ++n) out[-n] = pole_order_at(factor, Rational(-n));
    return out;
}

}  // namespace g2v
