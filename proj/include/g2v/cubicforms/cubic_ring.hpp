#pragma once

#include "g2v/cubicforms/binary_cubic.hpp"

#include <array>

namespace g2v {

// Coordinates in the basis {1, omega, theta}.
using RingElem = Eigen::Matrix<Rational, 3, 1>;

// Cubic algebra of a binary cubic in its good basis:
// omega theta = -ad, omega^2 = -ac + a theta - b omega, theta^2 = -bd + c theta - d omega.
class CubicRingTable {
public:
    explicit CubicRingTable(const BinaryCubic& f);

    const BinaryCubic& cubic() const { return f_; }
    const RingElem& product(int i, int j) const { return table_[i][j]; }
    RingElem multiply(const RingElem& x, const RingElem& y) const;

    bool is_commutative() const;
    bool is_associative() const;
    bool is_unital() const;
    // Products of omega0 = omega + b/3 and theta0 = theta - c/3 against the trace-zero table.
    bool trace_zero_table_holds() const;

    static RingElem one() { return RingElem(1, 0, 0); }
    static RingElem omega() { return RingElem(0, 1, 0); }
    static RingElem theta() { return RingElem(0, 0, 1); }

private:
    BinaryCubic f_;
    std::array<std::array<RingElem, 3>, 3> table_;
};

CubicRingTable ring_from_cubic(const BinaryCubic& f);

}  // namespace g2v
