#pragma once

#include <Eigen/Core>

#include <stdexcept>

namespace g2v {

// Gauss-Jordan inverse over an exact field: pivots on the first nonzero entry,
// since magnitude pivoting means nothing for exact scalars.
template <class Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> exact_inverse(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Eigen::Index n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("exact_inverse: matrix is not square");
    Mat a = m;
    Mat inv = Mat::Identity(n, n);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = col;
        while (pivot < n && a(pivot, col) == Scalar(0)) ++pivot;
        if (pivot == n) throw std::domain_error("exact_inverse: singular matrix");
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            inv.row(pivot).swap(inv.row(col));
        }
        Scalar scale = Scalar(1) / a(col, col);
        a.row(col) *= scale;
        inv.row(col) *= scale;
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col || a(r, col) == Scalar(0)) continue;
            Scalar factor = a(r, col);
            a.row(r) -= factor * a.row(col);
            inv.row(r) -= factor * inv.row(col);
        }
    }
    return inv;
}

}  // namespace g2v
