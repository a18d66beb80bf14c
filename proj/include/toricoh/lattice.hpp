#pragma once

#include "toricoh/qmatrix.hpp"

#include <vector>

namespace toricoh {

// dense integer matrix (lattice maps are tiny; no sparsity needed)
struct IMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), a((std::size_t)r * c, 0) {}
    static IMat identity(int n);

    Int& at(int i, int j) { return a[(std::size_t)i * cols + j]; }
    const Int& at(int i, int j) const { return a[(std::size_t)i * cols + j]; }

    IMat operator*(const IMat& o) const;
    bool operator==(const IMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    IMat transpose() const;
    QMatrix to_q() const;
};

// row selection [r0, r1)
IMat row_slice(const IMat& m, int r0, int r1);

// Smith normal form: u * m * v = s with u, v unimodular; s diagonal
void smith(const IMat& m, IMat& s, IMat& u, IMat& v);

int irank(const IMat& m);

// saturated basis (columns) of {x : m x = 0}
IMat integer_kernel(const IMat& m);

// exact inverse of a unimodular matrix
IMat inverse_unimodular(const IMat& m);

// true iff the columns generate a saturated sublattice of full column rank
bool is_saturated_basis(const IMat& m);

// projection Z^rows -> Z^(rows - rank) whose kernel is the saturation of the
// column span of m; deterministic (via Smith form)
IMat saturation_quotient(const IMat& m);

// convert a rational matrix known to be integral
IMat to_integer(const QMatrix& m);

} // namespace toricoh
