#pragma once

#include "toricoh/cosheaf.hpp"
#include "toricoh/module.hpp"
#include "toricoh/toric.hpp"

#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace toricoh {

int default_t_max(const TDiagram& td); // k + dim C + 2

struct BettiTable {
    std::vector<int> b; // indexed by total degree n
    // degree -> list of (i, j, dim lim^i H^j) summands
    std::map<int, std::vector<std::tuple<int, int, int>>> provenance;
};
BettiTable betti_numbers(const TDiagram& td);

struct EquivariantBetti {
    int t_max = 0;
    GradedTable lims;         // [t][i] = dim lim^i H^{2t}(BS)
    std::vector<int> lim0;    // convenience: lims[t][0]
};
EquivariantBetti equivariant_betti(const TDiagram& td, int t_max);

struct BigradedBettiTable {
    int k = 0, t_max = 0;
    std::map<std::pair<int, int>, int> beta; // (i, t) -> dim Tor^{-i,2t}
    std::set<std::pair<int, int>> truncated;
};
BigradedBettiTable bigraded_betti(const TDiagram& td, int t_max);

struct OrbitSSPage {
    int d = 0;
    bool manifold = false;
    GradedTable cw;                  // [t][hom degree]; C²_{s,t} = cw[t][d-s]
    std::vector<int> antidiagonal_b; // Σ_{s+t=n} C²_{s,t}
    bool matches_betti = false;      // asserted when manifold
};
OrbitSSPage orbit_ss_page2(const TDiagram& td);

struct ComparisonReport {
    int t_max = 0;
    bool acyclic = false; // lim^i H^*(BS) = 0 for i >= 1, up to t_max
    bool ok = false;      // β^{-i,2t} = dim lim^{t-i} H^t(D) on all cells
    bool barid_ok = false; // lim^i H^j(D) = 0 for i > j
    std::vector<std::tuple<int, int, int, int>> cells; // (i, t, beta, lim)
};
ComparisonReport comparison_check(const TDiagram& td, int t_max);

struct CMReport {
    bool hypotheses_met = false;
    bool strongly_reduced = false;
    bool manifold = false;
    int t_max = 0;
    bool lim_acyclic = false; // lim^{>=1} H^*(BS) = 0
    bool cw_vanish = false;   // H^cw_{d-i}(C; H^*(BS)) = 0 for i >= 1
    std::vector<int> lim0_dims;
};
CMReport cm_check(const TDiagram& td, int t_max);

bool ef_check(const TDiagram& td);

struct EulerHReport {
    bool skipped = false;
    bool ok = false;
    std::vector<long long> h; // h_0..h_d of the base poset
    std::vector<int> b2i;     // b_0, b_2, ..., b_{2d}
};
EulerHReport euler_h_check(const TDiagram& td);

} // namespace toricoh
