#include "g2v/cubicforms/padic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace g2v {

PAdicContext::PAdicContext(long prime) : p(prime) {
    if (!is_prime(prime)) throw std::invalid_argument("PAdicContext: " + std::to_string(prime) + " is not prime");
}

bool is_integral(const BinaryCubic& f, long p) {
    for (const Rational& x : f.coeffs())
        if (!in_Zp(x, p)) return false;
    return true;
}

int content(const BinaryCubic& f, const PAdicContext& ctx) {
    if (f.is_zero()) throw std::invalid_argument("content: zero cubic");
    int c = kInfiniteValuation;
    for (const Rational& x : f.coeffs()) c = std::min(c, valuation(x, ctx.p));
    return c;
}

bool dagger_holds(const BinaryCubic& f, const GL2Mat& m, const PAdicContext& ctx) {
    if (ctx.p != 3) return true;
    BinaryCubic g = act_left(m, f);
    Rational d1 = g.b - (m(0, 0) * f.b - m(0, 1) * f.c);
    Rational d2 = -g.c - (m(1, 0) * f.b - m(1, 1) * f.c);
    return valuation(d1, 3) >= 1 && valuation(d2, 3) >= 1;
}

bool closure_test(const BinaryCubic& f, const GL2Mat& m, const PAdicContext& ctx) {
    if (!is_integral(f, ctx.p)) throw std::invalid_argument("closure_test: f is not p-integral");
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            if (!in_Zp(m(r, c), ctx.p)) throw std::invalid_argument("closure_test: m is not in M_2(Z_p)");
    return is_integral(act_left(m, f), ctx.p) && dagger_holds(f, m, ctx);
}

bool dagger_implied_check(const BinaryCubic& f, const GL2Mat& m, const PAdicContext& ctx) {
    if (ctx.p != 3) throw std::invalid_argument("dagger_implied_check: requires p = 3");
    if (!is_integral(act_left(m, f), 3)) throw std::invalid_argument("dagger_implied_check: m.f is not 3-integral");
    return dagger_holds(f, m, ctx);
}

std::string to_string(CubicType t) {
    switch (t) {
        case CubicType::irreducible: return "irreducible";
        case CubicType::line_times_irreducible_quadratic: return "line*irreducible-quadratic";
        case CubicType::three_lines: return "three-distinct-lines";
        case CubicType::double_line_times_line: return "double-line*line";
        case CubicType::triple_line: return "triple-line";
    }
    return "?";
}

namespace {

long mod_p(const Rational& x, long p) {
    mpz_class pz(p), n = x.num() % pz, d = x.den() % pz, inv;
    if (n < 0) n += pz;
    if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw std::invalid_argument("mod_p: value is not p-integral");
    mpz_class r = (n * inv) % pz;
    return r.get_si();
}

// Multiplicity of t as a root of the polynomial (coefficients low degree first) over F_p.
int multiplicity_mod_p(std::vector<long> poly, long t, long p) {
    int m = 0;
    while (true) {
        while (!poly.empty() && poly.back() == 0) poly.pop_back();
        if (poly.size() <= 1) return m;
        std::vector<long> q(poly.size() - 1);
        long carry = 0;
        for (size_t k = poly.size(); k-- > 1;) {
            carry = (poly[k] + carry * t) % p;
            q[k - 1] = carry;
        }
        if ((poly[0] + carry * t) % p != 0) return m;
        poly = std::move(q);
        ++m;
    }
}

}  // namespace

RootCount roots_in_P1(const BinaryCubic& f, const PAdicContext& ctx) {
    if (content(f, ctx) != 0) throw std::invalid_argument("roots_in_P1: cubic must have content 0");
    const long p = ctx.p;
    long a = mod_p(f.a, p), b = mod_p(f.b, p), c = mod_p(f.c, p), d = mod_p(f.d, p);
    std::vector<int> mults;
    // [1:0]: order of vanishing of f(1,t) at t = 0
    int at_infinity = a != 0 ? 0 : (b != 0 ? 1 : (c != 0 ? 2 : 3));
    if (at_infinity) mults.push_back(at_infinity);
    for (long t = 0; t < p; ++t) {
        int m = multiplicity_mod_p({d, c, b, a}, t, p);
        if (m) mults.push_back(m);
    }
    RootCount out{static_cast<int>(mults.size()), CubicType::irreducible};
    switch (mults.size()) {
        case 0: out.type = CubicType::irreducible; break;
        case 1: out.type = mults[0] == 3 ? CubicType::triple_line : CubicType::line_times_irreducible_quadratic; break;
        case 2: out.type = CubicType::double_line_times_line; break;
        default: out.type = CubicType::three_lines; break;
    }
    return out;
}

std::vector<Sublattice> index_p_sublattices(const BinaryCubic& f, const PAdicContext& ctx) {
    std::vector<Sublattice> out;
    auto push = [&](const GL2Mat& m) {
        BinaryCubic g = act_left(m, f);
        out.push_back({m, g, content(g, ctx)});
    };
    push(gl2(ctx.p, 0, 0, 1));
    for (long j = 0; j < ctx.p; ++j) push(gl2(1, j, 0, ctx.p));
    return out;
}

std::vector<int> expected_sublattice_contents(CubicType t, int c, long p) {
    std::vector<int> out;
    auto add = [&](int content, long times) { out.insert(out.end(), times, content); };
    switch (t) {
        case CubicType::irreducible: add(c - 1, p + 1); break;
        case CubicType::line_times_irreducible_quadratic: add(c, 1); add(c - 1, p); break;
        case CubicType::three_lines: add(c, 3); add(c - 1, p - 2); break;
        case CubicType::double_line_times_line: add(c + 1, 1); add(c, 1); add(c - 1, p - 1); break;
        case CubicType::triple_line: add(c + 2, 1); add(c - 1, p); break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<int, SubringCount> subrings_of_index(int bound) {
    if (bound < 1) throw std::invalid_argument("subrings_of_index: bound must be >= 1");
    const BinaryCubic split{0, 1, 1, 0};
    std::map<int, SubringCount> out;
    for (int n = 1; n <= bound; ++n) {
        std::vector<long> primes;
        for (long q = 2; q <= n; ++q)
            if (n % q == 0 && is_prime(q)) primes.push_back(q);
        SubringCount& entry = out[n];
        for (int a = 1; a <= n; ++a) {
            if (n % a) continue;
            int d = n / a;
            for (int b = 0; b < d; ++b) {
                GL2Mat m = gl2(a, b, 0, d);
                bool ring = std::all_of(primes.begin(), primes.end(),
                                        [&](long q) { return closure_test(split, m, PAdicContext(q)); });
                if (!ring) continue;
                BinaryCubic g = act_left(m, split);
                mpz_class gc = 0;
                for (const Rational& x : g.coeffs()) gc = gcd(gc, x.num());
                ++entry.count;
                ++entry.contents_histogram[gc.get_si()];
            }
        }
    }
    return out;
}

std::string subrings_csv(const std::map<int, SubringCount>& counts) {
    std::ostringstream os;
    os << "index,count,contents_histogram\n";
    for (const auto& [n, entry] : counts) {
        os << n << "," << entry.count << ",";
        bool first = true;
        for (const auto& [c, k] : entry.contents_histogram) {
            os << (first ? "" : ";") << c << ":" << k;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace g2v
