#include "oracles.hpp"

#include <vector>

namespace g2v::oracle {

namespace {

using Elem = std::array<Rational, 3>;  // coordinates on 1, omega, theta

Elem mul(const Coeffs& f, const Elem& x, const Elem& y) {
    const Rational &a = f[0], &b = f[1], &c = f[2], &d = f[3];
    // omega*omega, omega*theta, theta*theta written out from the defining table
    Elem ww{-a * c, -b, a}, wt{-a * d, 0, 0}, tt{-b * d, -d, c};
    Elem out{x[0] * y[0], x[0] * y[1] + x[1] * y[0], x[0] * y[2] + x[2] * y[0]};
    Rational k_ww = x[1] * y[1], k_wt = x[1] * y[2] + x[2] * y[1], k_tt = x[2] * y[2];
    for (int i = 0; i < 3; ++i) out[i] += k_ww * ww[i] + k_wt * wt[i] + k_tt * tt[i];
    return out;
}

}  // namespace

bool lattice_closed(const Coeffs& f, const Matrix2& m, long p) {
    Rational det = m[0] * m[3] - m[1] * m[2];
    Elem w2{0, m[0], m[1]}, t2{0, m[2], m[3]};
    for (const auto& [x, y] : {std::pair{w2, w2}, std::pair{w2, t2}, std::pair{t2, t2}}) {
        Elem prod = mul(f, x, y);
        // prod = k0 + k1 omega'' + k2 theta''  <=>  (prod_omega, prod_theta) = (k1, k2) m
        Rational k1 = (prod[1] * m[3] - prod[2] * m[2]) / det;
        Rational k2 = (prod[2] * m[0] - prod[1] * m[1]) / det;
        if (!in_Zp(prod[0], p) || !in_Zp(k1, p) || !in_Zp(k2, p)) return false;
    }
    return true;
}

long z3_subrings(int n) {
    long count = 0;
    for (long a = 1; a <= n; ++a) {
        if (n % a) continue;
        for (long b = 1; b <= n / a; ++b) {
            if ((n / a) % b) continue;
            long d = n / a / b;
            for (long a12 = 0; a12 < b; ++a12)
                for (long a13 = 0; a13 < d; ++a13)
                    for (long a23 = 0; a23 < d; ++a23) {
                        auto member = [&](long x0, long x1, long x2) {
                            if (x0 % a) return false;
                            long k1 = x0 / a;
                            long y = x1 - k1 * a12;
                            if (y % b) return false;
                            long k2 = y / b;
                            return (x2 - k1 * a13 - k2 * a23) % d == 0;
                        };
                        if (!member(1, 1, 1)) continue;
                        const long rows[3][3] = {{a, a12, a13}, {0, b, a23}, {0, 0, d}};
                        bool closed = true;
                        for (int i = 0; i < 3 && closed; ++i)
                            for (int j = i; j < 3 && closed; ++j)
                                closed = member(rows[i][0] * rows[j][0], rows[i][1] * rows[j][1], rows[i][2] * rows[j][2]);
                        count += closed;
                    }
        }
    }
    return count;
}

std::map<int, long> z3_subring_series(int bound) {
    auto convolve = [bound](const std::vector<long>& x, const std::vector<long>& y) {
        std::vector<long> out(bound + 1, 0);
        for (int i = 1; i <= bound; ++i)
            for (int j = 1; i * j <= bound; ++j) out[i * j] += x[i] * y[j];
        return out;
    };
    auto mobius = [](int k) {
        int result = 1;
        for (int q = 2; q * q <= k; ++q) {
            if (k % q) continue;
            k /= q;
            if (k % q == 0) return 0;
            result = -result;
        }
        return k > 1 ? -result : result;
    };
    std::vector<long> zeta(bound + 1, 1), cube(bound + 1, 0), inv_square(bound + 1, 0);
    zeta[0] = 0;
    for (int k = 1; k * k * k <= bound; ++k) cube[k * k * k] = k;   // zeta(3s-1)
    for (int k = 1; k * k <= bound; ++k) inv_square[k * k] = mobius(k);  // 1/zeta(2s)
    std::vector<long> acc = convolve(convolve(convolve(zeta, zeta), zeta), cube);
    acc = convolve(convolve(acc, inv_square), inv_square);
    std::map<int, long> out;
    for (int n = 1; n <= bound; ++n) out[n] = acc[n];
    return out;
}

}  // namespace g2v::oracle
