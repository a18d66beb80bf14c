#pragma once

#include "toricoh/qmatrix.hpp"

#include <vector>

namespace toricoh {

/*
 * A finite complex of Q-vector spaces.  Differentials run upward:
 * maps[i] : dims[i] -> dims[i+1].  Chain complexes (differentials downward)
 * are handled by callers reversing the indexing; homology() is agnostic.
 */
struct RationalComplex {
    std::vector<int> dims;
    std::vector<QMatrix> maps; // maps.size() == dims.size()-1 (empty if <=1 term)

    // throws NotAComplex on shape mismatch or d∘d != 0
    void validate() const;

    // dim H^i = dims[i] - rank(maps[i]) - rank(maps[i-1]); calls validate()
    std::vector<int> homology() const;

    long long euler() const;
};

} // namespace toricoh
