#include "g2v/cubicforms/cubic_ring.hpp"

namespace g2v {

CubicRingTable::CubicRingTable(const BinaryCubic& f) : f_(f) {
    const Rational &a = f.a, &b = f.b, &c = f.c, &d = f.d;
    RingElem e[3] = {one(), omega(), theta()};
    for (int i = 0; i < 3; ++i) {
        table_[0][i] = e[i];
        table_[i][0] = e[i];
    }
    table_[1][2] = table_[2][1] = RingElem(-a * d, 0, 0);
    table_[1][1] = RingElem(-a * c, -b, a);
    table_[2][2] = RingElem(-b * d, -d, c);
}

RingElem CubicRingTable::multiply(const RingElem& x, const RingElem& y) const {
    RingElem out = RingElem::Zero();
    for (int i = 0; i < 3; ++i) {
        if (x(i).is_zero()) continue;
        for (int j = 0; j < 3; ++j) {
            if (y(j).is_zero()) continue;
            out += (x(i) * y(j)) * table_[i][j];
        }
    }
    return out;
}

bool CubicRingTable::is_commutative() const {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (table_[i][j] != table_[j][i]) return false;
    return true;
}

bool CubicRingTable::is_associative() const {
    RingElem e[3] = {one(), omega(), theta()};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                if (multiply(multiply(e[i], e[j]), e[k]) != multiply(e[i], multiply(e[j], e[k]))) return false;
    return true;
}

bool CubicRingTable::is_unital() const {
    RingElem e[3] = {one(), omega(), theta()};
    for (int i = 0; i < 3; ++i)
        if (multiply(one(), e[i]) != e[i] || multiply(e[i], one()) != e[i]) return false;
    return true;
}

bool CubicRingTable::trace_zero_table_holds() const {
    const Rational &a = f_.a, &b = f_.b, &c = f_.c, &d = f_.d;
    const Rational third(1, 3);
    RingElem w0 = omega() + (b * third) * one();
    RingElem t0 = theta() - (c * third) * one();
    RingElem wt = (b * third) * t0 - (c * third) * w0 + (b * c / Rational(9) - a * d) * one();
    RingElem ww = a * t0 - (b * third) * w0 + (Rational(2, 9) * (b * b - Rational(3) * a * c)) * one();
    RingElem tt = (c * third) * t0 - d * w0 + (Rational(2, 9) * (c * c - Rational(3) * b * d)) * one();
    return multiply(w0, t0) == wt && multiply(w0, w0) == ww && multiply(t0, t0) == tt;
}

CubicRingTable ring_from_cubic(const BinaryCubic& f) { return CubicRingTable(f); }

}  // namespace g2v
