#ifndef COGRAPHIC_LINALG_HPP
#define COGRAPHIC_LINALG_HPP

#include <optional>
#include <vector>

#include "cographic/rational.hpp"

// Exact dense linear algebra on Eigen matrices: Gaussian elimination over a
// field scalar, and Hermite/Smith normal forms over the integers. Eigen has
// no exact normal forms, so these are provided as free functions.

namespace cographic {

// In-place reduced row echelon form; returns the pivot columns.
template <class Scalar>
std::vector<Eigen::Index> row_reduce(Mat<Scalar>& m) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index p = -1;
        for (Eigen::Index i = row; i < m.rows(); ++i)
            if (m(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row) m.row(p).swap(m.row(row));
        const Scalar inv = Scalar(1) / m(row, col);
        for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Scalar f = m(i, col);
            for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class Scalar>
Eigen::Index rank(Mat<Scalar> m) {
    return static_cast<Eigen::Index>(row_reduce(m).size());
}

// Basis of the kernel of m, returned as matrix columns.
template <class Scalar>
Mat<Scalar> kernel_basis(Mat<Scalar> m) {
    const Eigen::Index n = m.cols();
    const auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (auto p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    Mat<Scalar> ker = Mat<Scalar>::Zero(n, n - static_cast<Eigen::Index>(pivots.size()));
    Eigen::Index k = 0;
    for (Eigen::Index free = 0; free < n; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        ker(free, k) = Scalar(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            ker(pivots[r], k) = -m(static_cast<Eigen::Index>(r), free);
        ++k;
    }
    return ker;
}

// One solution of a x = b, if any.
template <class Scalar>
std::optional<Vec<Scalar>> solve_linear(const Mat<Scalar>& a, const Vec<Scalar>& b) {
    Mat<Scalar> aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    const auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    Vec<Scalar> x = Vec<Scalar>::Zero(a.cols());
    for (size_t r = 0; r < pivots.size(); ++r) x(pivots[r]) = aug(static_cast<Eigen::Index>(r), a.cols());
    return x;
}

template <class Scalar>
Scalar determinant(Mat<Scalar> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
    Scalar det(1);
    const Eigen::Index n = m.rows();
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index p = -1;
        for (Eigen::Index i = col; i < n; ++i)
            if (m(i, col) != 0) { p = i; break; }
        if (p < 0) return Scalar(0);
        if (p != col) {
            m.row(p).swap(m.row(col));
            det = -det;
        }
        det *= m(col, col);
        const Scalar inv = Scalar(1) / m(col, col);
        for (Eigen::Index i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            const Scalar f = m(i, col) * inv;
            for (Eigen::Index j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

template <class Scalar>
Mat<Scalar> inverse(const Mat<Scalar>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square matrix");
    const Eigen::Index n = m.rows();
    Mat<Scalar> aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = Mat<Scalar>::Identity(n, n);
    const auto pivots = row_reduce(aug);
    if (static_cast<Eigen::Index>(pivots.size()) != n) throw std::invalid_argument("inverse: singular matrix");
    return aug.rightCols(n);
}

// ---------------------------------------------------------------------------
// Integer normal forms.

// Column-style Hermite normal form: returns h = m * u with u unimodular.
// Nonzero columns of h are in echelon form with positive pivots, and entries
// left of each pivot are reduced into [0, pivot).
IntMat hnf_columns(const IntMat& m);

struct SmithResult {
    IntMat s;  // diagonal, s(i,i) | s(i+1,i+1)
    IntMat u;  // unimodular, u * m * v = s
    IntMat v;  // unimodular
};
SmithResult smith_normal_form(const IntMat& m);

// Basis of {x integral : m x = 0}, as matrix columns.
IntMat integer_kernel(const IntMat& m);

// One integral solution of a x = b, if any.
std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b);

}  // namespace cographic

#endif
