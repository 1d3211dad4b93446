#pragma once

#include "g2v/exactalg/rational.hpp"

#include <Eigen/Core>

#include <array>
#include <stdexcept>
#include <string>

namespace g2v {

// a w^3 + b w^2 z + c w z^2 + d z^3
template <class Scalar>
struct BasicCubic {
    Scalar a{}, b{}, c{}, d{};

    std::array<Scalar, 4> coeffs() const { return {a, b, c, d}; }
    bool is_zero() const { return a == Scalar(0) && b == Scalar(0) && c == Scalar(0) && d == Scalar(0); }
    friend bool operator==(const BasicCubic&, const BasicCubic&) = default;
    friend BasicCubic operator*(const Scalar& k, const BasicCubic& f) { return {k * f.a, k * f.b, k * f.c, k * f.d}; }
    friend BasicCubic operator+(const BasicCubic& f, const BasicCubic& g) {
        return {f.a + g.a, f.b + g.b, f.c + g.c, f.d + g.d};
    }
};

using BinaryCubic = BasicCubic<Rational>;

template <class Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;
using GL2Mat = Mat2<Rational>;

inline GL2Mat gl2(const Rational& m11, const Rational& m12, const Rational& m21, const Rational& m22) {
    GL2Mat g;
    g << m11, m12, m21, m22;
    return g;
}

template <class Scalar>
Scalar det(const Mat2<Scalar>& g) {
    return g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
}

// g g~ = det(g)
template <class Scalar>
Mat2<Scalar> tilde(const Mat2<Scalar>& g) {
    Mat2<Scalar> t;
    t << g(1, 1), -g(0, 1), -g(1, 0), g(0, 0);
    return t;
}

template <class Scalar>
Mat2<Scalar> inverse(const Mat2<Scalar>& g) {
    Scalar dt = det(g);
    if (dt == Scalar(0)) throw std::invalid_argument("inverse: singular 2x2 matrix");
    Mat2<Scalar> t = tilde(g);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) t(i, j) = t(i, j) / dt;
    return t;
}

// f((w,z) g)
template <class Scalar>
BasicCubic<Scalar> substitute(const BasicCubic<Scalar>& f, const Mat2<Scalar>& g) {
    // binary forms as coefficient arrays indexed by the power of z
    using Lin = std::array<Scalar, 2>;
    auto times = [](const auto& p, const Lin& l) {
        std::array<Scalar, std::tuple_size_v<std::decay_t<decltype(p)>> + 1> out{};
        for (size_t i = 0; i < p.size(); ++i) {
            out[i] = out[i] + p[i] * l[0];
            out[i + 1] = out[i + 1] + p[i] * l[1];
        }
        return out;
    };
    const Lin W{g(0, 0), g(1, 0)}, Z{g(0, 1), g(1, 1)};
    const std::array<Scalar, 1> one{Scalar(1)};
    auto www = times(times(times(one, W), W), W);
    auto wwz = times(times(times(one, W), W), Z);
    auto wzz = times(times(times(one, W), Z), Z);
    auto zzz = times(times(times(one, Z), Z), Z);
    std::array<Scalar, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = f.a * www[i] + f.b * wwz[i] + f.c * wzz[i] + f.d * zzz[i];
    return {out[0], out[1], out[2], out[3]};
}

// det(g)^-1 f((w,z) g)
template <class Scalar>
BasicCubic<Scalar> act_left(const Mat2<Scalar>& g, const BasicCubic<Scalar>& f) {
    Scalar dt = det(g);
    if (dt == Scalar(0)) throw std::invalid_argument("act_left: singular matrix");
    return (Scalar(1) / dt) * substitute(f, g);
}

// f . g = det(g)^2 f((w,z) g^-1)
template <class Scalar>
BasicCubic<Scalar> act_right(const BasicCubic<Scalar>& f, const Mat2<Scalar>& g) {
    Scalar dt = det(g);
    if (dt == Scalar(0)) throw std::invalid_argument("act_right: singular matrix");
    return (dt * dt) * substitute(f, inverse(g));
}

// a d' - b c'/3 + c b'/3 - d a'
template <class Scalar>
Scalar pairing(const BasicCubic<Scalar>& f, const BasicCubic<Scalar>& g) {
    return f.a * g.d - f.b * g.c / Scalar(3) + f.c * g.b / Scalar(3) - f.d * g.a;
}

// (ad - bc/3)^2 + 4/27 ac^3 + 4/27 db^3 - 4/27 b^2c^2
template <class Scalar>
Scalar quartic_q_squares(const BasicCubic<Scalar>& f) {
    const Scalar& a = f.a; const Scalar& b = f.b; const Scalar& c = f.c; const Scalar& d = f.d;
    Scalar t = a * d - b * c / Scalar(3);
    Scalar k = Scalar(4) / Scalar(27);
    return t * t + k * a * c * c * c + k * d * b * b * b - k * b * b * c * c;
}

template <class Scalar>
Scalar discriminant(const BasicCubic<Scalar>& f) {
    const Scalar& a = f.a; const Scalar& b = f.b; const Scalar& c = f.c; const Scalar& d = f.d;
    return b * b * c * c - Scalar(4) * a * c * c * c - Scalar(4) * b * b * b * d - Scalar(27) * a * a * d * d +
           Scalar(18) * a * b * c * d;
}

// -(1/27) disc
template <class Scalar>
Scalar quartic_q_discriminant(const BasicCubic<Scalar>& f) {
    return -discriminant(f) / Scalar(27);
}

// Evaluates both forms of the quartic invariant; throws std::logic_error if they differ.
Rational quartic_q(const BinaryCubic& f);

// (u1, u2, u3, u4) = (a, b/3, c/3, d)
struct WCoords {
    Rational u1, u2, u3, u4;
    friend bool operator==(const WCoords&, const WCoords&) = default;
};
WCoords to_wcoords(const BinaryCubic& f);
BinaryCubic from_wcoords(const WCoords& u);

std::string to_string(const BinaryCubic& f);
std::string to_string(const GL2Mat& g);

}  // namespace g2v
