#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toricoh/qmatrix.hpp"

#include <random>

using namespace toricoh;

namespace {

QMatrix random_matrix(std::mt19937& rng, int rows, int cols, int density_pct = 40) {
    std::uniform_int_distribution<int> val(-5, 5), pct(0, 99);
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (pct(rng) < density_pct) m.set(i, j, Rat(val(rng)));
    return m;
}

} // namespace

TEST_CASE("basic accessors and arithmetic") {
    QMatrix m(2, 3);
    m.set(0, 1, Rat(2));
    m.add(0, 1, Rat(-2));
    CHECK(m.is_zero());
    m.set(1, 2, Rat(1, 3));
    CHECK(m.get(1, 2) == Rat(1, 3));
    CHECK(m.nnz() == 1);

    QMatrix id = QMatrix::identity(3);
    CHECK((m * id) == m);
    CHECK((m + m.scaled(Rat(-1))).is_zero());
    CHECK(m.transpose().transpose() == m);
}

TEST_CASE("rank, rref, kernel on fixed examples") {
    QMatrix m(2, 3);
    m.set(0, 0, Rat(1));
    m.set(0, 1, Rat(2));
    m.set(1, 0, Rat(2));
    m.set(1, 1, Rat(4)); // rows proportional
    CHECK(rank(m) == 1);

    QMatrix k = kernel_basis(m);
    CHECK(k.cols() == 2);
    CHECK((m * k).is_zero());

    std::vector<int> piv;
    QMatrix r = rref(m, &piv);
    CHECK(piv == std::vector<int>{0});
    CHECK(r.get(0, 0) == Rat(1));
    CHECK(r.get(0, 1) == Rat(2));
    CHECK(rank(QMatrix::identity(5)) == 5);
}

TEST_CASE("rank-nullity and solve on random matrices") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 1 + trial % 7, cols = 1 + (trial * 3) % 8;
        QMatrix m = random_matrix(rng, rows, cols);
        int r = rank(m);
        QMatrix k = kernel_basis(m);
        CHECK(r + k.cols() == cols);
        CHECK((m * k).is_zero());
        CHECK(rank(m.transpose()) == r);

        // anything in the column span must be solvable
        QMatrix x = random_matrix(rng, cols, 2);
        QMatrix rhs = m * x;
        auto sol = solve(m, rhs);
        REQUIRE(sol.has_value());
        CHECK(m * *sol == rhs);

        auto idx = independent_columns(m);
        CHECK((int)idx.size() == r);
        CHECK(rank(m.select_columns(idx)) == r);
    }
}

TEST_CASE("solve detects inconsistency") {
    QMatrix m(2, 1);
    m.set(0, 0, Rat(1));
    m.set(1, 0, Rat(1));
    QMatrix rhs(2, 1);
    rhs.set(0, 0, Rat(1));
    rhs.set(1, 0, Rat(2));
    CHECK_FALSE(solve(m, rhs).has_value());
}

TEST_CASE("rref is canonical under row shuffles") {
    std::mt19937 rng(7);
    QMatrix m = random_matrix(rng, 5, 5, 70);
    // permute rows
    QMatrix perm(5, 5);
    std::vector<int> p{3, 0, 4, 1, 2};
    for (int i = 0; i < 5; ++i) perm.set(i, p[i], Rat(1));
    CHECK(rref(m) == rref(perm * m));
}

TEST_CASE("stacking") {
    std::mt19937 rng(11);
    QMatrix a = random_matrix(rng, 2, 3), b = random_matrix(rng, 2, 2), c = random_matrix(rng, 1, 3);
    QMatrix h = hstack(a, b);
    CHECK(h.rows() == 2);
    CHECK(h.cols() == 5);
    CHECK(h.get(1, 3) == b.get(1, 0));
    QMatrix v = vstack(a, c);
    CHECK(v.rows() == 3);
    CHECK(v.get(2, 0) == c.get(0, 0));
}
