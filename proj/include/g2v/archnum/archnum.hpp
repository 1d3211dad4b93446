#pragma once

#include "g2v/gammaledger/gamma_expr.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace g2v {

// Whole space, or the chamber r1 < r2 < ... < rd.
enum class Region { full, ordered };

struct QuadSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_refinements = 15;
    Region region = Region::full;
    void validate() const;  // throws std::invalid_argument unless tolerances are positive
};

struct NumericResult {
    bool converged = false;
    double value = 0;
    double error_estimate = 0;
    std::size_t evaluations = 0;
    std::string message;  // reason when not converged
};

using Integrand = std::function<double(std::span<const double>)>;

// Tanh-sinh quadrature on (a, b); a and b finite.
NumericResult integrate_interval(const std::function<double(double)>& f, double a, double b, const QuadSpec& spec);
// Integral over R^d (d in 1..3) after r = tan(theta) in every coordinate; nested for d > 1.
NumericResult integrate(const Integrand& f, int d, const QuadSpec& spec);

struct Comparison {
    std::string label;
    double numeric = 0;
    double expected = 0;
    double error = 0;  // relative, against max(|expected|, scale)
    bool pass = false;
};

// i^j Gamma_C(s) / (Gamma_R(s-j+1) Gamma_R(s+j+1)), j even
GammaExpr sl2_closed_form(int j);
// Gamma_R(s)/Gamma_R(s+1) ((1-s)/2)_{|j/2|} / ((1+s)/2)_{|j/2|}
GammaExpr sl2_pochhammer_form(int j);
// Real part of the integral of (x^2+1)^(-(s+1)/2) ((x+i)/sqrt(x^2+1))^j over R; the
// imaginary part is reported separately and must vanish.
struct Sl2Report {
    double s = 0;
    int j = 0;
    NumericResult real_part, imag_part;
    double closed_form = 0, pochhammer_form = 0;
    double error = 0;
    bool symbolic_match = false;
    bool pass = false;
};
Sl2Report sl2_check(double s, int j, double tol = 1e-8, const QuadSpec& spec = {});

// Nested 3-D passes: each level to 1e-6, which leaves the ratio far inside 1e-4.
inline const QuadSpec kJprimeSpec{1e-6, 1e-14, 15, Region::ordered};

// 2^(-6s) Gamma(2s) Gamma(3s-1/2) / Gamma(s+1/2)^3
GammaExpr jprime_closed_form();
// Gamma(2s)/2 times the Selberg-type integral of prod (1+r_i^2)^(-2s) prod |r_i-r_j|^(2s-1) over R^3.
NumericResult jprime_numeric(double s, const QuadSpec& spec = kJprimeSpec);
struct RatioReport {
    std::vector<double> grid;
    std::vector<double> ratios;
    double mean = 0;
    double relative_spread = 0;  // standard deviation / |mean|
    bool all_converged = false;
    bool pass = false;
};
RatioReport jprime_check(const std::vector<double>& s_grid, double tol = 1e-4, const QuadSpec& spec = kJprimeSpec);
// t^3 (r1-r2)(r2-r3)(r3-r1) up to sign, as a polynomial identity.
bool jacobian_check();
// q(t prod (w - r_i z)) / q(w^2 z + w z^2) = t^4 prod (r_i - r_j)^2 at random rational points.
bool quartic_ratio_check(int samples, std::uint64_t seed);

// pi^-s Gamma(s+2l-3)Gamma(s+l-2)Gamma((s+l-3)/2)^2 / (Gamma((s+l)/2)Gamma(s+l-3)Gamma((3s+3l-7)/2)) J'((s+l-2)/2)
// with J' in closed form, times 2^s Gamma_R(s-1) Gamma_C(s+l-1) Gamma_C(s+l-2).
GammaExpr istar_assembled(int ell);
// Gamma_R(s-1) Gamma_C(s+l-3) Gamma_C(s+l-2) Gamma_C(s+2l-3)
GammaExpr istar_target(int ell);
struct ChainReport {
    int ell = 0;
    RatioReport numeric;
    ConstantComparison symbolic;
    bool pass = false;
};
ChainReport istar_chain_check(int ell, const std::vector<double>& s_grid, double tol = 1e-6);

}  // namespace g2v
