#pragma once

#include "toricoh/spectra.hpp"
#include "toricoh/toric.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace toricoh {

// pullback of the diagram to the rank-<=q part of the base poset
TDiagram restrict_diagram(const TDiagram& td, int q);

// cokernel cosheaf of H^*(D(c)) -> H^*(T), graded by exterior degree 0..k
GradedCosheaf j_cosheaf(const TDiagram& td);

/*
 * Resolution of the cokernel cosheaf by pushforwards of principal-ideal
 * cosheaves: terms[i](x) = ⊕ P*(c) over c <= x of poset rank i+1, where P*(c)
 * is the principal ideal of the stabilizer top form inside Λ(Q^k).  eta and xi
 * are the augmentation and the signed dual-inclusion differentials; stalk
 * exactness is verified at every element and degree during construction.
 */
struct TaylorResolution {
    std::shared_ptr<const FinitePoset> base;
    int k = 0;
    GradedCosheaf j;                  // the resolved cosheaf
    std::vector<GradedCosheaf> terms; // indices 0 .. dim(C)-1
    // eta[e][t] : j(e) -> terms[0](e)
    std::vector<std::vector<QMatrix>> eta;
    // xi[i][e][t] : terms[i](e) -> terms[i+1](e)
    std::vector<std::vector<std::vector<QMatrix>>> xi;
};
TaylorResolution taylor_resolution(const TDiagram& td);

struct SkeletonCohomologyReport {
    int q = 0;
    GradedTable restricted; // [j][i] = dim lim^i H^j of the restricted diagram
    GradedTable full;       // same for the unrestricted diagram
    bool agree_below_q = false; // restricted == full for i < q
    bool vanish = false;        // restricted[j][i] = 0 for i > q and for i > j
    bool euler_ok = false;      // boundary row i = q matches the Euler identity
    std::vector<long long> boundary_formula; // predicted dim lim^q per j
};
SkeletonCohomologyReport skeleton_cohomology(const TDiagram& td, int q);

// Koszul-computed bigraded Betti numbers of the restricted diagram, checked
// cell-by-cell against the closed-form values (throws Error on any mismatch)
BigradedBettiTable skeleton_bigraded(const TDiagram& td, int q, int t_max);

// the two closed-form sums for dim lim^{q+1} H^j over the restricted
// projective-space diagram, evaluated exactly
std::pair<long long, long long> cp_closed_forms(int m, int q, int j);

} // namespace toricoh
