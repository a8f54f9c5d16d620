#include "cographic/linalg.hpp"

namespace cographic {

namespace {

void swap_cols(IntMat& m, Eigen::Index a, Eigen::Index b) {
    if (a != b) m.col(a).swap(m.col(b));
}

}  // namespace

IntMat hnf_columns(const IntMat& m) {
    IntMat h = m;
    const Eigen::Index rows = h.rows(), cols = h.cols();
    Eigen::Index col = 0;
    for (Eigen::Index row = 0; row < rows && col < cols; ++row) {
        bool any = false;
        for (Eigen::Index j = col; j < cols; ++j)
            if (h(row, j) != 0) { any = true; break; }
        if (!any) continue;
        // Clear the row right of `col` by gcd column operations.
        for (;;) {
            Eigen::Index p = -1;
            for (Eigen::Index j = col; j < cols; ++j) {
                if (h(row, j) == 0) continue;
                if (p < 0 || abs(h(row, j)) < abs(h(row, p))) p = j;
            }
            swap_cols(h, col, p);
            bool done = true;
            for (Eigen::Index j = col + 1; j < cols; ++j) {
                if (h(row, j) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), h(row, j).get_mpz_t(), h(row, col).get_mpz_t());
                h.col(j) -= q * h.col(col);
                if (h(row, j) != 0) done = false;
            }
            if (done) break;
        }
        if (h(row, col) < 0) h.col(col) = -h.col(col);
        for (Eigen::Index j = 0; j < col; ++j) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h(row, j).get_mpz_t(), h(row, col).get_mpz_t());
            if (q != 0) h.col(j) -= q * h.col(col);
        }
        ++col;
    }
    return h;
}

SmithResult smith_normal_form(const IntMat& m) {
    SmithResult res;
    res.s = m;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    res.u = IntMat::Identity(rows, rows);
    res.v = IntMat::Identity(cols, cols);
    IntMat& s = res.s;
    const Eigen::Index t = std::min(rows, cols);

    // Diagonalize the trailing block starting at (k, k); returns false if the
    // block is already all zero.
    auto diagonalize = [&](Eigen::Index k) -> bool {
        Eigen::Index pi = -1, pj = -1;
        for (Eigen::Index i = k; i < rows && pi < 0; ++i)
            for (Eigen::Index j = k; j < cols; ++j)
                if (s(i, j) != 0) { pi = i; pj = j; break; }
        if (pi < 0) return false;
        if (pi != k) { s.row(pi).swap(s.row(k)); res.u.row(pi).swap(res.u.row(k)); }
        if (pj != k) { s.col(pj).swap(s.col(k)); res.v.col(pj).swap(res.v.col(k)); }
        for (;;) {
            for (Eigen::Index i = k + 1; i < rows; ++i) {
                if (s(i, k) == 0) continue;
                if (s(i, k) % s(k, k) == 0) {
                    const Int q = s(i, k) / s(k, k);
                    s.row(i) -= q * s.row(k);
                    res.u.row(i) -= q * res.u.row(k);
                } else {
                    Int g, x, y;
                    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
                               s(k, k).get_mpz_t(), s(i, k).get_mpz_t());
                    const Int a = s(k, k) / g, b = s(i, k) / g;
                    const Int nb = -b;
                    const IntMat rk = s.row(k), ri = s.row(i);
                    const IntMat uk = res.u.row(k), ui = res.u.row(i);
                    s.row(k) = x * rk + y * ri;
                    s.row(i) = nb * rk + a * ri;
                    res.u.row(k) = x * uk + y * ui;
                    res.u.row(i) = nb * uk + a * ui;
                }
            }
            for (Eigen::Index j = k + 1; j < cols; ++j) {
                if (s(k, j) == 0) continue;
                if (s(k, j) % s(k, k) == 0) {
                    const Int q = s(k, j) / s(k, k);
                    s.col(j) -= q * s.col(k);
                    res.v.col(j) -= q * res.v.col(k);
                } else {
                    Int g, x, y;
                    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
                               s(k, k).get_mpz_t(), s(k, j).get_mpz_t());
                    const Int a = s(k, k) / g, b = s(k, j) / g;
                    const Int nb = -b;
                    const IntMat ck = s.col(k), cj = s.col(j);
                    const IntMat vk = res.v.col(k), vj = res.v.col(j);
                    s.col(k) = x * ck + y * cj;
                    s.col(j) = nb * ck + a * cj;
                    res.v.col(k) = x * vk + y * vj;
                    res.v.col(j) = nb * vk + a * vj;
                }
            }
            bool zero = true;
            for (Eigen::Index i = k + 1; i < rows && zero; ++i)
                if (s(i, k) != 0) zero = false;
            for (Eigen::Index j = k + 1; j < cols && zero; ++j)
                if (s(k, j) != 0) zero = false;
            if (zero) break;
        }
        if (s(k, k) < 0) { s.row(k) = -s.row(k); res.u.row(k) = -res.u.row(k); }
        return true;
    };

    for (Eigen::Index k = 0; k < t; ++k)
        if (!diagonalize(k)) break;

    // Enforce the divisibility chain s(k,k) | s(k+1,k+1).
    for (bool changed = true; changed;) {
        changed = false;
        for (Eigen::Index k = 0; k + 1 < t; ++k) {
            const Int a = s(k, k), b = s(k + 1, k + 1);
            if (a == 0 || b == 0 || b % a == 0) continue;
            s.col(k) += s.col(k + 1);
            res.v.col(k) += res.v.col(k + 1);
            diagonalize(k);
            diagonalize(k + 1);
            changed = true;
        }
    }
    return res;
}

IntMat integer_kernel(const IntMat& m) {
    // Column HNF of [m; I]: columns whose m-part vanished carry a kernel basis
    // in the I-part.
    const Eigen::Index rows = m.rows(), cols = m.cols();
    IntMat stacked(rows + cols, cols);
    stacked.topRows(rows) = m;
    stacked.bottomRows(cols) = IntMat::Identity(cols, cols);
    IntMat h = hnf_columns(stacked);
    std::vector<Eigen::Index> zero_cols;
    for (Eigen::Index j = 0; j < cols; ++j) {
        bool zero = true;
        for (Eigen::Index i = 0; i < rows; ++i)
            if (h(i, j) != 0) { zero = false; break; }
        if (zero) zero_cols.push_back(j);
    }
    IntMat ker(cols, static_cast<Eigen::Index>(zero_cols.size()));
    for (size_t k = 0; k < zero_cols.size(); ++k)
        ker.col(static_cast<Eigen::Index>(k)) = h.col(zero_cols[k]).tail(cols);
    return ker;
}

std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b) {
    const SmithResult snf = smith_normal_form(a);
    const IntVec c = snf.u * b;
    const Eigen::Index t = std::min(a.rows(), a.cols());
    IntVec y = IntVec::Zero(a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        const Int d = i < t ? snf.s(i, i) : Int(0);
        if (d == 0) {
            if (c(i) != 0) return std::nullopt;
        } else {
            if (c(i) % d != 0) return std::nullopt;
            y(i) = c(i) / d;
        }
    }
    return IntVec(snf.v * y);
}

}  // namespace cographic
