#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <vector>

namespace toricoh {

typedef boost::multiprecision::cpp_int Int;
typedef boost::multiprecision::cpp_rational Rat;

/*
 * Sparse matrix over Q with arbitrary-precision entries.  Rows are kept as
 * ordered column->value maps with no explicit zeros.  All mutating helpers
 * are construction-time conveniences; every algorithm below works on a copy,
 * so a QMatrix can be shared freely between threads once built.
 */
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols);

    static QMatrix identity(int n);
    static QMatrix zero(int rows, int cols) { return QMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int i, int j, const Rat& v);
    void add(int i, int j, const Rat& v);
    Rat get(int i, int j) const;
    const std::map<int, Rat>& row(int i) const { return data_[i]; }

    std::size_t nnz() const;
    bool is_zero() const;

    QMatrix operator*(const QMatrix& other) const;
    QMatrix operator+(const QMatrix& other) const;
    QMatrix operator-(const QMatrix& other) const;
    QMatrix scaled(const Rat& s) const;
    QMatrix transpose() const;

    // matrix whose columns are the listed columns of *this, in order
    QMatrix select_columns(const std::vector<int>& cols) const;

    bool operator==(const QMatrix& other) const;
    bool operator!=(const QMatrix& other) const { return !(*this == other); }

private:
    int rows_, cols_;
    std::vector<std::map<int, Rat>> data_;
};

// Exact rank.  Sparsity-guided pivoting; result is pivot-order independent.
int rank(const QMatrix& m);

// Reduced row echelon form with leftmost-column pivoting (deterministic).
// Optionally reports the pivot columns in increasing order.
QMatrix rref(const QMatrix& m, std::vector<int>* pivot_cols = nullptr);

// Columns form a basis of the null space {x : m x = 0}; the basis is the
// standard one read off the RREF, so it is deterministic.
QMatrix kernel_basis(const QMatrix& m);

// Solve m X = rhs column-by-column; nullopt if any column is inconsistent.
std::optional<QMatrix> solve(const QMatrix& m, const QMatrix& rhs);

// Indices of a maximal independent subset of columns, chosen greedily from
// the left (deterministic); the complement of the span can be read off too.
std::vector<int> independent_columns(const QMatrix& m);

QMatrix hstack(const QMatrix& a, const QMatrix& b);
QMatrix vstack(const QMatrix& a, const QMatrix& b);

} // namespace toricoh
