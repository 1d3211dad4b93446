#include "g2v/archnum/archnum.hpp"

#include "g2v/cubicforms/binary_cubic.hpp"
#include "g2v/cubicforms/sampling.hpp"
#include "g2v/exactalg/poly.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <array>
#include <map>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace g2v {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
const Affine kS = Affine::s_plus(0);

GammaExpr G(const Affine& a, int e = 1) { return GammaExpr::gamma(a, e); }

struct Tally {
    std::size_t evaluations = 0;
    bool failed = false;
    std::string message;
};

struct Pass {
    double value = 0;
    double error = 0;
};

// Convergence is judged once, on the propagated error of the whole nest.
Pass tanh_sinh_pass(const std::function<double(double)>& f, double a, double b, const QuadSpec& spec, Tally& tally) {
    // Abscissa tables are costly to build; nested passes share one per depth.
    thread_local std::map<int, boost::math::quadrature::tanh_sinh<double>> cache;
    auto& integrator = cache.try_emplace(spec.max_refinements, spec.max_refinements).first->second;
    Pass out;
    try {
        out.value = integrator.integrate(
            [&](double x) {
                ++tally.evaluations;
                return f(x);
            },
            a, b, spec.rel_tol, &out.error);
    } catch (const std::exception& e) {
        tally.failed = true;
        tally.message = e.what();
        return {};
    }
    if (!std::isfinite(out.value)) {
        tally.failed = true;
        tally.message = "non-finite integrand";
    }
    return out;
}

// r = tan(theta); the Jacobian 1 + r^2 is skipped where the integrand already vanishes.
double tangent_weight(double value, double r) { return value == 0 ? 0 : value * (1 + r * r); }

// The error of a level is its own estimate plus the largest weighted inner error times the range.
Pass nested(const Integrand& f, int d, int k, std::array<double, 3>& r, double lo, const QuadSpec& spec, Tally& tally) {
    double inner_error = 0;
    auto slice = [&](double theta) {
        r[k] = std::tan(theta);
        if (k + 1 == d) return tangent_weight(f(std::span<const double>(r.data(), d)), r[k]);
        Pass inner = nested(f, d, k + 1, r, spec.region == Region::ordered ? theta : -kHalfPi, spec, tally);
        inner_error = std::max(inner_error, tangent_weight(inner.error, r[k]));
        return tangent_weight(inner.value, r[k]);
    };
    Pass out = tanh_sinh_pass(slice, lo, kHalfPi, spec, tally);
    out.error += inner_error * (kHalfPi - lo);
    return out;
}

NumericResult finish(const Pass& pass, const Tally& tally, const QuadSpec& spec) {
    NumericResult out;
    out.value = pass.value;
    out.error_estimate = pass.error;
    out.evaluations = tally.evaluations;
    out.converged = !tally.failed && pass.error <= 10 * std::max(spec.rel_tol * std::abs(pass.value), spec.abs_tol);
    out.message = tally.failed ? tally.message
                               : (out.converged ? "" : "error estimate above tolerance at maximum refinement");
    return out;
}

double relative_error(double numeric, double expected, double scale) {
    return std::abs(numeric - expected) / std::max(std::abs(expected), std::abs(scale));
}

RatioReport ratio_report(const std::vector<double>& grid, std::vector<double> ratios, bool converged, double tol) {
    RatioReport out;
    out.grid = grid;
    out.ratios = std::move(ratios);
    out.all_converged = converged;
    const double n = static_cast<double>(out.ratios.size());
    out.mean = std::accumulate(out.ratios.begin(), out.ratios.end(), 0.0) / n;
    double var = 0;
    for (double x : out.ratios) var += (x - out.mean) * (x - out.mean);
    out.relative_spread = std::sqrt(var / n) / std::abs(out.mean);
    out.pass = converged && std::isfinite(out.relative_spread) && out.relative_spread <= tol;
    return out;
}

// Rewrites every Gamma(z)Gamma(z+1/2) pair with z of slope 1/2 into Gamma(2z).
GammaExpr duplicate_half_slopes(GammaExpr e) {
    e = gamma_normalize(e);
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& [arg, exponent] : e.gamma_factors()) {
            if (arg.slope != Rational(1, 2)) continue;
            int partner = e.gamma_exponent(arg + Rational(1, 2));
            if (partner == 0 || (partner > 0) != (exponent > 0)) continue;
            e = gamma_normalize(apply_duplication(e, arg, Duplication::forward));
            changed = true;
            break;
        }
    }
    return e;
}

Poly derivative(const Poly& p, Sym sym) {
    return p.substitute(sym, Poly::var(sym) + Poly::var(Sym::z)).coefficient_of(Sym::z, 1);
}

Poly determinant(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly out;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Poly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        Poly term = m[0][c] * determinant(minor);
        if (c % 2) out -= term;
        else out += term;
    }
    return out;
}

}  // namespace

void QuadSpec::validate() const {
    if (!(rel_tol > 0) || !(abs_tol > 0)) throw std::invalid_argument("QuadSpec: tolerances must be positive");
    if (max_refinements < 1) throw std::invalid_argument("QuadSpec: max_refinements must be >= 1");
}

NumericResult integrate_interval(const std::function<double(double)>& f, double a, double b, const QuadSpec& spec) {
    spec.validate();
    if (!std::isfinite(a) || !std::isfinite(b)) throw std::invalid_argument("integrate_interval: endpoints must be finite");
    Tally tally;
    Pass pass = tanh_sinh_pass(f, a, b, spec, tally);
    return finish(pass, tally, spec);
}

NumericResult integrate(const Integrand& f, int d, const QuadSpec& spec) {
    spec.validate();
    if (d < 1 || d > 3) throw std::invalid_argument("integrate: dimension must be 1, 2 or 3");
    Tally tally;
    std::array<double, 3> r{};
    Pass pass = nested(f, d, 0, r, -kHalfPi, spec, tally);
    return finish(pass, tally, spec);
}

GammaExpr sl2_closed_form(int j) {
    if (j % 2 != 0) throw std::invalid_argument("sl2_closed_form: j must be even");
    int sign = (j / 2) % 2 == 0 ? 1 : -1;
    return GammaExpr(sign) * GammaExpr::gamma_C(kS) /
           (GammaExpr::gamma_R(kS + Rational(1 - j)) * GammaExpr::gamma_R(kS + Rational(1 + j)));
}

GammaExpr sl2_pochhammer_form(int j) {
    if (j % 2 != 0) throw std::invalid_argument("sl2_pochhammer_form: j must be even");
    RatFun ratio(1);
    Affine lo(Rational(-1, 2), Rational(1, 2)), hi(Rational(1, 2), Rational(1, 2));
    for (int i = 0; i < std::abs(j / 2); ++i) ratio *= (lo + Rational(i)).as_ratfun() / (hi + Rational(i)).as_ratfun();
    return GammaExpr(ratio) * GammaExpr::gamma_R(kS) / GammaExpr::gamma_R(kS + 1);
}

Sl2Report sl2_check(double s, int j, double tol, const QuadSpec& spec) {
    if (!(s > 1)) throw std::invalid_argument("sl2_check: s must exceed 1");
    Sl2Report out;
    out.s = s;
    out.j = j;
    auto part = [&](bool real) {
        return [=](std::span<const double> x) {
            double phi = std::atan2(1.0, x[0]);
            double w = std::pow(x[0] * x[0] + 1, -(s + 1) / 2);
            return w * (real ? std::cos(j * phi) : std::sin(j * phi));
        };
    };
    out.real_part = integrate(part(true), 1, spec);
    out.imag_part = integrate(part(false), 1, spec);
    out.closed_form = sl2_closed_form(j).evaluate(s);
    out.pochhammer_form = sl2_pochhammer_form(j).evaluate(s);
    ConstantComparison c = equal_up_to_constant(duplicate_half_slopes(sl2_closed_form(j) / sl2_pochhammer_form(j)), GammaExpr());
    out.symbolic_match = c.equal && c.constant && c.constant->is_one();
    // The j = 0 value sets the scale where the closed form vanishes.
    double scale = sl2_pochhammer_form(0).evaluate(s);
    out.error = std::max({relative_error(out.real_part.value, out.closed_form, scale),
                          std::abs(out.imag_part.value) / std::abs(scale),
                          relative_error(out.pochhammer_form, out.closed_form, scale)});
    out.pass = out.real_part.converged && out.imag_part.converged && out.symbolic_match && out.error <= tol;
    return out;
}

GammaExpr jprime_closed_form() {
    return GammaExpr::power_of_two(Affine(-6, 0)) * G(Affine(2, 0)) * G(Affine(3, Rational(-1, 2))) /
           G(kS + Rational(1, 2), 3);
}

NumericResult jprime_numeric(double s, const QuadSpec& spec) {
    if (!(s >= 1)) throw std::invalid_argument("jprime_numeric: s must be >= 1");
    QuadSpec ordered = spec;
    ordered.region = Region::ordered;
    auto f = [s](std::span<const double> r) {
        double log_value = 0;
        for (int i = 0; i < 3; ++i) log_value -= 2 * s * std::log1p(r[i] * r[i]);
        for (int i = 0; i < 3; ++i)
            for (int k = i + 1; k < 3; ++k) log_value += (2 * s - 1) * std::log(std::abs(r[i] - r[k]));
        return std::exp(log_value);
    };
    NumericResult out = integrate(f, 3, ordered);
    double factor = 6 * gamma_fn(2 * s) / 2;
    out.value *= factor;
    out.error_estimate *= factor;
    return out;
}

RatioReport jprime_check(const std::vector<double>& s_grid, double tol, const QuadSpec& spec) {
    if (s_grid.empty()) throw std::invalid_argument("jprime_check: empty grid");
    std::vector<double> ratios;
    bool converged = true;
    GammaExpr closed = jprime_closed_form();
    for (double s : s_grid) {
        NumericResult r = jprime_numeric(s, spec);
        converged = converged && r.converged;
        ratios.push_back(r.value / closed.evaluate(s));
    }
    return ratio_report(s_grid, std::move(ratios), converged, tol);
}

bool jacobian_check() {
    // t -> s, r1 -> u, r2 -> v, r3 -> w
    const Poly t = Poly::var(Sym::s), r1 = Poly::var(Sym::u), r2 = Poly::var(Sym::v), r3 = Poly::var(Sym::w);
    const std::array<Poly, 4> coords{t, -(t * (r1 + r2 + r3)), t * (r1 * r2 + r2 * r3 + r3 * r1), -(t * r1 * r2 * r3)};
    const std::array<Sym, 4> vars{Sym::s, Sym::u, Sym::v, Sym::w};
    std::vector<std::vector<Poly>> jac(4, std::vector<Poly>(4));
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) jac[i][k] = derivative(coords[i], vars[k]);
    Poly det = determinant(jac);
    Poly expected = t.pow(3) * (r1 - r2) * (r2 - r3) * (r3 - r1);
    return det == expected || det == -expected;
}

bool quartic_ratio_check(int samples, std::uint64_t seed) {
    Rng rng(seed);
    auto random_rational = [&] {
        long den = uniform_int(rng, 1, 9);
        return Rational(uniform_int(rng, -20, 20), den);
    };
    const Rational base = quartic_q(BinaryCubic{0, 1, 1, 0});
    for (int i = 0; i < samples; ++i) {
        Rational t = random_rational(), a = random_rational(), b = random_rational(), c = random_rational();
        if (t.is_zero()) t = Rational(1);
        BinaryCubic f{t, -t * (a + b + c), t * (a * b + b * c + c * a), -t * a * b * c};
        Rational expected = pow(t, 4) * pow(a - b, 2) * pow(b - c, 2) * pow(c - a, 2);
        if (quartic_q(f) / base != expected) return false;
    }
    return true;
}

GammaExpr istar_assembled(int ell) {
    if (ell < 2 || ell % 2 != 0) throw std::invalid_argument("istar_assembled: weight must be even and >= 2");
    const Rational l(ell);
    const Rational half(1, 2);
    GammaExpr i_over_j = GammaExpr::power_of_pi(Affine(-1, 0)) * G(kS + (2 * l - 3)) * G(kS + (l - 2)) *
                         G(Affine(half, (l - 3) / 2), 2) /
                         (G(Affine(half, l / 2)) * G(kS + (l - 3)) * G(Affine(Rational(3, 2), (3 * l - 7) / 2)));
    GammaExpr jprime = jprime_closed_form().substitute(half, (l - 2) / 2);
    GammaExpr normalization =
        GammaExpr::power_of_two(kS) * GammaExpr::gamma_R(kS - 1) * GammaExpr::gamma_C(kS + (l - 1)) * GammaExpr::gamma_C(kS + (l - 2));
    return normalization * i_over_j * jprime;
}

GammaExpr istar_target(int ell) {
    if (ell < 2 || ell % 2 != 0) throw std::invalid_argument("istar_target: weight must be even and >= 2");
    return GammaExpr::gamma_R(kS - 1) * GammaExpr::gamma_C(kS + (ell - 3)) * GammaExpr::gamma_C(kS + (ell - 2)) *
           GammaExpr::gamma_C(kS + (2 * ell - 3));
}

ChainReport istar_chain_check(int ell, const std::vector<double>& s_grid, double tol) {
    if (s_grid.empty()) throw std::invalid_argument("istar_chain_check: empty grid");
    ChainReport out;
    out.ell = ell;
    GammaExpr assembled = istar_assembled(ell), target = istar_target(ell);
    std::vector<double> ratios;
    bool finite = true;
    for (double s : s_grid) {
        double r = assembled.evaluate(s) / target.evaluate(s);
        finite = finite && std::isfinite(r);
        ratios.push_back(r);
    }
    out.numeric = ratio_report(s_grid, std::move(ratios), finite, tol);
    out.symbolic = equal_up_to_constant(duplicate_half_slopes(assembled / target), GammaExpr());
    out.pass = out.numeric.pass && out.symbolic.equal;
    return out;
}

}  // namespace g2v
