#include "toricoh/qmatrix.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace toricoh {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void QMatrix::set(int i, int j, const Rat& v) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    if (v == 0)
        data_[i].erase(j);
    else
        data_[i][j] = v;
}

void QMatrix::add(int i, int j, const Rat& v) {
    if (v == 0) return;
    auto it = data_[i].find(j);
    if (it == data_[i].end()) {
        data_[i][j] = v;
    } else {
        it->second += v;
        if (it->second == 0) data_[i].erase(it);
    }
}

Rat QMatrix::get(int i, int j) const {
    auto it = data_[i].find(j);
    return it == data_[i].end() ? Rat(0) : it->second;
}

std::size_t QMatrix::nnz() const {
    std::size_t n = 0;
    for (auto& r : data_) n += r.size();
    return n;
}

bool QMatrix::is_zero() const {
    for (auto& r : data_)
        if (!r.empty()) return false;
    return true;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
    assert(cols_ == other.rows_);
    QMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
        std::map<int, Rat> acc;
        for (auto& [k, a] : data_[i]) {
            for (auto& [j, b] : other.data_[k]) {
                Rat& slot = acc[j];
                slot += a * b;
            }
        }
        for (auto& [j, v] : acc)
            if (v != 0) out.data_[i][j] = v;
    }
    return out;
}

QMatrix QMatrix::operator+(const QMatrix& other) const {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    QMatrix out = *this;
    for (int i = 0; i < rows_; ++i)
        for (auto& [j, v] : other.data_[i]) out.add(i, j, v);
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& other) const {
    return *this + other.scaled(-1);
}

QMatrix QMatrix::scaled(const Rat& s) const {
    QMatrix out(rows_, cols_);
    if (s == 0) return out;
    for (int i = 0; i < rows_; ++i)
        for (auto& [j, v] : data_[i]) out.data_[i][j] = v * s;
    return out;
}

QMatrix QMatrix::transpose() const {
    QMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (auto& [j, v] : data_[i]) out.data_[j][i] = v;
    return out;
}

QMatrix QMatrix::select_columns(const std::vector<int>& cols) const {
    QMatrix out(rows_, (int)cols.size());
    for (int i = 0; i < rows_; ++i)
        for (int jj = 0; jj < (int)cols.size(); ++jj) {
            auto it = data_[i].find(cols[jj]);
            if (it != data_[i].end()) out.data_[i][jj] = it->second;
        }
    return out;
}

bool QMatrix::operator==(const QMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

QMatrix hstack(const QMatrix& a, const QMatrix& b) {
    assert(a.rows() == b.rows());
    QMatrix out(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (auto& [j, v] : a.row(i)) out.set(i, j, v);
        for (auto& [j, v] : b.row(i)) out.set(i, a.cols() + j, v);
    }
    return out;
}

QMatrix vstack(const QMatrix& a, const QMatrix& b) {
    assert(a.cols() == b.cols());
    QMatrix out(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (auto& [j, v] : a.row(i)) out.set(i, j, v);
    for (int i = 0; i < b.rows(); ++i)
        for (auto& [j, v] : b.row(i)) out.set(a.rows() + i, j, v);
    return out;
}

/*
 * Rank by sparse elimination.  Pivot choice: among the still-active rows take
 * one of minimal fill (fewest entries), inside it the column with the fewest
 * occurrences among active rows.  Only the dimension is reported, so the
 * heuristic is free to reorder however it likes.
 */
int rank(const QMatrix& m) {
    std::vector<std::map<int, Rat>> rows;
    rows.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        if (!m.row(i).empty()) rows.push_back(m.row(i));

    std::vector<int> colcount(m.cols(), 0);
    for (auto& r : rows)
        for (auto& [j, v] : r) ++colcount[j];

    int rk = 0;
    std::vector<char> done(rows.size(), 0);
    for (;;) {
        int best = -1;
        std::size_t best_nnz = std::numeric_limits<std::size_t>::max();
        for (int i = 0; i < (int)rows.size(); ++i) {
            if (done[i] || rows[i].empty()) continue;
            if (rows[i].size() < best_nnz) {
                best_nnz = rows[i].size();
                best = i;
            }
        }
        if (best < 0) break;

        int pc = -1, pc_count = std::numeric_limits<int>::max();
        for (auto& [j, v] : rows[best]) {
            if (colcount[j] < pc_count) {
                pc_count = colcount[j];
                pc = j;
            }
        }
        Rat pv = rows[best][pc];
        done[best] = 1;
        ++rk;
        for (auto& [j, v] : rows[best]) --colcount[j];

        for (int i = 0; i < (int)rows.size(); ++i) {
            if (done[i] || rows[i].empty()) continue;
            auto it = rows[i].find(pc);
            if (it == rows[i].end()) continue;
            Rat f = it->second / pv;
            // rows[i] -= f * pivot row
            for (auto& [j, v] : rows[best]) {
                auto jt = rows[i].find(j);
                if (jt == rows[i].end()) {
                    rows[i][j] = -f * v;
                    ++colcount[j];
                } else {
                    jt->second -= f * v;
                    if (jt->second == 0) {
                        rows[i].erase(jt);
                        --colcount[j];
                    }
                }
            }
        }
    }
    return rk;
}

namespace {

struct EchelonForm {
    // pivot rows in increasing pivot-column order, fully reduced
    std::vector<std::map<int, Rat>> rows;
    std::vector<int> pivot_cols;
};

EchelonForm echelon(const QMatrix& m) {
    std::vector<std::map<int, Rat>> work;
    work.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        if (!m.row(i).empty()) work.push_back(m.row(i));

    EchelonForm ef;
    // forward sweep: for each column in order grab the sparsest eligible row
    for (int j = 0; j < m.cols(); ++j) {
        int best = -1;
        std::size_t best_nnz = std::numeric_limits<std::size_t>::max();
        for (int i = 0; i < (int)work.size(); ++i) {
            if (work[i].empty()) continue;
            if (work[i].begin()->first != j) continue;
            if (work[i].size() < best_nnz) {
                best_nnz = work[i].size();
                best = i;
            }
        }
        if (best < 0) continue;
        std::map<int, Rat> piv = std::move(work[best]);
        work[best].clear();
        Rat pv = piv.begin()->second;
        if (pv != 1)
            for (auto& [c, v] : piv) v /= pv;
        for (auto& r : work) {
            if (r.empty()) continue;
            auto it = r.find(j);
            if (it == r.end()) continue;
            Rat f = it->second;
            for (auto& [c, v] : piv) {
                auto jt = r.find(c);
                if (jt == r.end()) {
                    r[c] = -f * v;
                } else {
                    jt->second -= f * v;
                    if (jt->second == 0) r.erase(jt);
                }
            }
        }
        ef.rows.push_back(std::move(piv));
        ef.pivot_cols.push_back(j);
    }
    // backward sweep to reach the reduced form
    for (int r = (int)ef.rows.size() - 1; r >= 0; --r) {
        int pc = ef.pivot_cols[r];
        for (int s = 0; s < r; ++s) {
            auto it = ef.rows[s].find(pc);
            if (it == ef.rows[s].end()) continue;
            Rat f = it->second;
            for (auto& [c, v] : ef.rows[r]) {
                auto jt = ef.rows[s].find(c);
                if (jt == ef.rows[s].end()) {
                    ef.rows[s][c] = -f * v;
                } else {
                    jt->second -= f * v;
                    if (jt->second == 0) ef.rows[s].erase(jt);
                }
            }
        }
    }
    return ef;
}

} // namespace

QMatrix rref(const QMatrix& m, std::vector<int>* pivot_cols) {
    EchelonForm ef = echelon(m);
    if (pivot_cols) *pivot_cols = ef.pivot_cols;
    QMatrix out((int)ef.rows.size(), m.cols());
    for (int i = 0; i < (int)ef.rows.size(); ++i)
        for (auto& [j, v] : ef.rows[i]) out.set(i, j, v);
    return out;
}

QMatrix kernel_basis(const QMatrix& m) {
    std::vector<int> piv;
    QMatrix r = rref(m, &piv);
    std::vector<char> is_piv(m.cols(), 0);
    std::vector<int> piv_row(m.cols(), -1);
    for (int i = 0; i < (int)piv.size(); ++i) {
        is_piv[piv[i]] = 1;
        piv_row[piv[i]] = i;
    }
    std::vector<int> free_cols;
    for (int j = 0; j < m.cols(); ++j)
        if (!is_piv[j]) free_cols.push_back(j);

    QMatrix out(m.cols(), (int)free_cols.size());
    for (int k = 0; k < (int)free_cols.size(); ++k) {
        int f = free_cols[k];
        out.set(f, k, 1);
        for (int i = 0; i < (int)piv.size(); ++i) {
            Rat v = r.get(i, f);
            if (v != 0) out.set(piv[i], k, -v);
        }
    }
    return out;
}

std::optional<QMatrix> solve(const QMatrix& m, const QMatrix& rhs) {
    assert(m.rows() == rhs.rows());
    QMatrix aug = hstack(m, rhs);
    std::vector<int> piv;
    QMatrix r = rref(aug, &piv);
    for (int p : piv)
        if (p >= m.cols()) return std::nullopt; // a pivot fell in the rhs block
    QMatrix x(m.cols(), rhs.cols());
    for (int i = 0; i < (int)piv.size(); ++i)
        for (auto& [j, v] : r.row(i))
            if (j >= m.cols()) x.set(piv[i], j - m.cols(), v);
    return x;
}

std::vector<int> independent_columns(const QMatrix& m) {
    std::vector<int> piv;
    rref(m, &piv);
    return piv;
}

} // namespace toricoh
