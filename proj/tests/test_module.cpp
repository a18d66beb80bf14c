#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toricoh/errors.hpp"
#include "toricoh/module.hpp"

#include <random>

using namespace toricoh;

namespace {

long long binom(long long n, long long r) {
    if (r < 0 || r > n || n < 0) return 0;
    long long out = 1;
    for (long long i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
    return out;
}

// a random saturated sublattice of Z^k of the requested rank
IMat random_saturated(std::mt19937& rng, int k, int r) {
    std::uniform_int_distribution<int> val(-3, 3);
    for (;;) {
        IMat m(k, r);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < r; ++j) m.at(i, j) = val(rng);
        if (irank(m) != r) continue;
        // saturate the column span: vectors annihilated by its annihilator
        IMat ann = integer_kernel(m.transpose());
        IMat sat = integer_kernel(ann.transpose());
        if (sat.cols == r) return sat;
    }
}

} // namespace

TEST_CASE("free module has trivial Tor away from the origin") {
    GradedModulePresentation f = free_module(3, 4);
    CHECK(koszul_tor(f, 0, 0) == 1);
    for (int i = 0; i <= 3; ++i)
        for (int t = 0; t <= 3; ++t)
            if (i + t > 0) CHECK(koszul_tor(f, i, t) == 0);
}

TEST_CASE("Tor of the residue field is the exterior algebra") {
    for (int k : {1, 2, 3}) {
        GradedModulePresentation q = trivial_module(k, 4);
        for (int i = 0; i <= k; ++i)
            for (int t = 0; t <= 4; ++t)
                CHECK(koszul_tor(q, i, t) == (i == t ? binom(k, i) : 0));
    }
}

TEST_CASE("Tor of polynomial subrings sees only the codimension") {
    std::mt19937 rng(314159);
    int done = 0;
    while (done < 50) {
        int k = 1 + (int)(rng() % 4);
        int r = (int)(rng() % (k + 1));
        IMat basis = random_saturated(rng, k, r);
        GradedModulePresentation m = stalk_module(basis, k, 4);
        for (int p = 0; p <= k; ++p)
            for (int t = 0; t <= 3; ++t)
                CHECK(koszul_tor(m, p, t) == (p == t ? binom(k - r, p) : 0));
        ++done;
    }
}

TEST_CASE("truncation is reported, not silently wrong") {
    GradedModulePresentation q = trivial_module(2, 2);
    CHECK_THROWS_AS(koszul_tor(q, 0, 3), TruncationExceeded);
    CHECK_THROWS_AS(koszul_tor(q, 5, 1), OutOfRange);
}

TEST_CASE("stalk module matches the classifying cosheaf stalks") {
    IMat diag(3, 2);
    diag.at(0, 0) = 1;
    diag.at(2, 1) = 1;
    GradedModulePresentation m = stalk_module(diag, 3, 5);
    for (int t = 0; t <= 5; ++t) CHECK(m.piece[t] == t + 1); // Sym of two variables
    // the action of the generator outside the sublattice is zero
    for (int t = 0; t < 5; ++t) CHECK(m.action[1][t].is_zero());
    m.check_commuting();
}
