#pragma once

#include "toricoh/lattice.hpp"
#include "toricoh/qmatrix.hpp"
#include "toricoh/toric.hpp"

#include <vector>

namespace toricoh {

/*
 * Finitely graded module over Q[t_1..t_k], deg t_a = 2, presented by its even
 * pieces up to degree 2*t_max with explicit generator-action matrices.
 */
struct GradedModulePresentation {
    int k = 0;
    int t_max = 0;
    std::vector<int> piece;                       // dim of degree-2t piece, t = 0..t_max
    std::vector<std::vector<QMatrix>> action;     // action[g][t] : piece t -> piece t+1

    void check_commuting() const; // throws on non-commuting generator actions
};

// dim Tor^{-i,2t}(M, Q) from the Koszul complex Λ^p(Q^k) ⊗ M_{2(t-p)}
int koszul_tor(const GradedModulePresentation& m, int i, int t);

GradedModulePresentation trivial_module(int k, int t_max);  // Q in degree 0
GradedModulePresentation free_module(int k, int t_max);     // Q[t_1..t_k]
// H^*(BS) for the subtorus with the given saturated basis (k x r)
GradedModulePresentation stalk_module(const IMat& stab_basis, int k, int t_max);
// lim of H^*(BS) over the diagram, with its H^*(BT)-action (the equivariant
// cohomology module when the sheaf is acyclic)
GradedModulePresentation limit_presentation(const ClassifyingCosheaf& cc);

} // namespace toricoh
