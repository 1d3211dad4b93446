#include "g2v/cubicforms/sampling.hpp"

namespace g2v {

long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

GL2Mat random_unit_matrix(Rng& rng, long p, long bound) {
    while (true) {
        GL2Mat g = gl2(uniform_int(rng, -bound, bound), uniform_int(rng, -bound, bound),
                       uniform_int(rng, -bound, bound), uniform_int(rng, -bound, bound));
        Rational d = det(g);
        if (!d.is_zero() && valuation(d, p) == 0) return g;
    }
}

GL2Mat random_integral_matrix(Rng& rng, long bound) {
    while (true) {
        GL2Mat g = gl2(uniform_int(rng, -bound, bound), uniform_int(rng, -bound, bound),
                       uniform_int(rng, -bound, bound), uniform_int(rng, -bound, bound));
        if (!det(g).is_zero()) return g;
    }
}

BinaryCubic random_cubic(Rng& rng, long bound) {
    return {uniform_int(rng, -bound, bound), uniform_int(rng, -bound, bound), uniform_int(rng, -bound, bound),
            uniform_int(rng, -bound, bound)};
}

std::string to_string(Splitting s) {
    switch (s) {
        case Splitting::split: return "split";
        case Splitting::partial: return "partial";
        case Splitting::inert: return "inert";
    }
    return "?";
}

namespace {

bool has_root_mod(long p, long c2, long c1, long c0, int degree) {
    for (long x = 0; x < p; ++x) {
        long v = degree == 3 ? ((x * x % p) * x + c2 * x % p * x + c1 * x + c0) % p : (x * x + c1 * x + c0) % p;
        if (v % p == 0) return true;
    }
    return false;
}

}  // namespace

BinaryCubic unramified_maximal_cubic(Splitting s, long p) {
    PAdicContext ctx(p);
    if (s == Splitting::split) return {0, 1, 1, 0};
    for (long c0 = 1; c0 < p; ++c0)
        for (long c1 = 0; c1 < p; ++c1) {
            if (s == Splitting::partial && !has_root_mod(p, 0, c1, c0, 2)) return {1, c1, c0, 0};  // w (w^2 + c1 wz + c0 z^2)
            if (s == Splitting::inert && !has_root_mod(p, 0, c1, c0, 3)) return {1, 0, c1, c0};    // w^3 + c1 wz^2 + c0 z^3
        }
    throw std::logic_error("unramified_maximal_cubic: no reference cubic found");
}

}  // namespace g2v
