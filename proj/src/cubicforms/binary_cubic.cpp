#include "g2v/cubicforms/binary_cubic.hpp"

#include <sstream>

namespace g2v {

Rational quartic_q(const BinaryCubic& f) {
    Rational q1 = quartic_q_squares(f), q2 = quartic_q_discriminant(f);
    if (q1 != q2) throw std::logic_error("quartic_q: the two formulas disagree on " + to_string(f));
    return q1;
}

WCoords to_wcoords(const BinaryCubic& f) { return {f.a, f.b / Rational(3), f.c / Rational(3), f.d}; }

BinaryCubic from_wcoords(const WCoords& u) { return {u.u1, Rational(3) * u.u2, Rational(3) * u.u3, u.u4}; }

std::string to_string(const BinaryCubic& f) {
    std::ostringstream os;
    os << "(" << f.a << "," << f.b << "," << f.c << "," << f.d << ")";
    return os.str();
}

std::string to_string(const GL2Mat& g) {
    std::ostringstream os;
    os << "(" << g(0, 0) << "," << g(0, 1) << ";" << g(1, 0) << "," << g(1, 1) << ")";
    return os.str();
}

}  // namespace g2v
