#include "toricoh/lattice.hpp"

#include "toricoh/errors.hpp"

#include <algorithm>

namespace toricoh {

IMat IMat::identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IMat IMat::operator*(const IMat& o) const {
    IMat out(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
        }
    return out;
}

IMat IMat::transpose() const {
    IMat out(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
    return out;
}

QMatrix IMat::to_q() const {
    QMatrix out(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != 0) out.set(i, j, Rat(at(i, j)));
    return out;
}

IMat row_slice(const IMat& m, int r0, int r1) {
    IMat out(r1 - r0, m.cols);
    for (int i = r0; i < r1; ++i)
        for (int j = 0; j < m.cols; ++j) out.at(i - r0, j) = m.at(i, j);
    return out;
}

void smith(const IMat& m, IMat& s, IMat& u, IMat& v) {
    s = m;
    u = IMat::identity(m.rows);
    v = IMat::identity(m.cols);
    int t = 0;
    auto swap_rows = [&](int i, int j) {
        for (int c = 0; c < s.cols; ++c) std::swap(s.at(i, c), s.at(j, c));
        for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    };
    auto swap_cols = [&](int i, int j) {
        for (int r = 0; r < s.rows; ++r) std::swap(s.at(r, i), s.at(r, j));
        for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    };
    auto addmul_row = [&](int dst, int src, const Int& f) {
        for (int c = 0; c < s.cols; ++c) s.at(dst, c) += f * s.at(src, c);
        for (int c = 0; c < u.cols; ++c) u.at(dst, c) += f * u.at(src, c);
    };
    auto addmul_col = [&](int dst, int src, const Int& f) {
        for (int r = 0; r < s.rows; ++r) s.at(r, dst) += f * s.at(r, src);
        for (int r = 0; r < v.rows; ++r) v.at(r, dst) += f * v.at(r, src);
    };
    for (;;) {
        while (t < s.rows && t < s.cols) {
            // locate the entry of least absolute value in the active block
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = t; i < s.rows; ++i)
                for (int j = t; j < s.cols; ++j) {
                    if (s.at(i, j) == 0) continue;
                    Int v2 = abs(s.at(i, j));
                    if (pi < 0 || v2 < best) {
                        best = v2;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool dirty = false;
            for (int i = t + 1; i < s.rows; ++i) {
                if (s.at(i, t) == 0) continue;
                Int q = s.at(i, t) / s.at(t, t);
                addmul_row(i, t, -q);
                if (s.at(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < s.cols; ++j) {
                if (s.at(t, j) == 0) continue;
                Int q = s.at(t, j) / s.at(t, t);
                addmul_col(j, t, -q);
                if (s.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue; // remainders left; repeat with a smaller pivot
            ++t;
        }
        // enforce the divisibility chain: folding a violating successor into
        // the earlier column re-opens the block with a smaller gcd pivot
        int bad = -1;
        for (int i = 0; i + 1 < t; ++i)
            if (s.at(i + 1, i + 1) != 0 && s.at(i + 1, i + 1) % s.at(i, i) != 0) {
                bad = i;
                break;
            }
        if (bad < 0) break;
        addmul_col(bad, bad + 1, 1);
        t = bad;
    }
}

int irank(const IMat& m) {
    IMat s, u, v;
    smith(m, s, u, v);
    int r = 0;
    for (int t = 0; t < std::min(s.rows, s.cols); ++t)
        if (s.at(t, t) != 0) ++r;
    return r;
}

IMat integer_kernel(const IMat& m) {
    IMat s, u, v;
    smith(m, s, u, v);
    int r = 0;
    for (int t = 0; t < std::min(s.rows, s.cols); ++t)
        if (s.at(t, t) != 0) ++r;
    // m * v has its last cols-r columns zero; those columns of v are a basis
    IMat out(m.cols, m.cols - r);
    for (int i = 0; i < m.cols; ++i)
        for (int j = r; j < m.cols; ++j) out.at(i, j - r) = v.at(i, j);
    return out;
}

IMat inverse_unimodular(const IMat& m) {
    if (m.rows != m.cols) throw Error("inverse of non-square matrix");
    auto x = solve(m.to_q(), QMatrix::identity(m.rows));
    if (!x) throw Error("matrix is singular");
    IMat out(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            Rat v = x->get(i, j);
            if (denominator(v) != 1) throw Error("matrix is not unimodular");
            out.at(i, j) = numerator(v);
        }
    return out;
}

bool is_saturated_basis(const IMat& m) {
    IMat s, u, v;
    smith(m, s, u, v);
    int r = 0;
    for (int t = 0; t < std::min(s.rows, s.cols); ++t)
        if (s.at(t, t) != 0) {
            if (abs(s.at(t, t)) != 1) return false;
            ++r;
        }
    return r == m.cols;
}

IMat saturation_quotient(const IMat& m) {
    IMat s, u, v;
    smith(m, s, u, v);
    int r = 0;
    for (int t = 0; t < std::min(s.rows, s.cols); ++t)
        if (s.at(t, t) != 0) ++r;
    // rows r.. of u kill the column span (u*m = s*v^{-1})
    return row_slice(u, r, m.rows);
}

IMat to_integer(const QMatrix& m) {
    IMat out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (auto& [j, val] : m.row(i)) {
            if (denominator(val) != 1) throw Error("matrix entry is not an integer");
            out.at(i, j) = numerator(val);
        }
    return out;
}

} // namespace toricoh
