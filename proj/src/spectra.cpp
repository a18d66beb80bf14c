#include "toricoh/spectra.hpp"

#include "toricoh/errors.hpp"

#include <algorithm>

namespace toricoh {

int default_t_max(const TDiagram& td) {
    return td.k + td.poset().dim + 2;
}

BettiTable betti_numbers(const TDiagram& td) {
    GradedCosheaf hc = cohomology_cosheaf(td.d);
    GradedTable lim = limit_dims(hc);
    int d = td.poset().dim;

    BettiTable out;
    out.b.assign(hc.max_degree + d + 1, 0);
    for (int j = 0; j <= hc.max_degree; ++j)
        for (int i = 0; i < (int)lim[j].size(); ++i)
            if (lim[j][i] > 0) {
                out.b[i + j] += lim[j][i];
                out.provenance[i + j].emplace_back(i, j, lim[j][i]);
            }
    return out;
}

EquivariantBetti equivariant_betti(const TDiagram& td, int t_max) {
    ClassifyingCosheaf cc = classifying_cosheaf(stabilizer_diagram(td), t_max);
    EquivariantBetti out;
    out.t_max = t_max;
    out.lims = limit_dims(cc.sheaf);
    for (int t = 0; t <= t_max; ++t) out.lim0.push_back(out.lims[t][0]);
    return out;
}

BigradedBettiTable bigraded_betti(const TDiagram& td, int t_max) {
    ClassifyingCosheaf cc = classifying_cosheaf(stabilizer_diagram(td), t_max);
    GradedModulePresentation m = limit_presentation(cc);
    BigradedBettiTable out;
    out.k = td.k;
    out.t_max = t_max;
    for (int i = 0; i <= td.k; ++i)
        for (int t = 0; t <= t_max; ++t) {
            // the Koszul complex at (i, t) only touches pieces of degree <= t,
            // so every cell in this window is exact despite the truncation
            out.beta[{i, t}] = koszul_tor(m, i, t);
        }
    return out;
}

OrbitSSPage orbit_ss_page2(const TDiagram& td) {
    const FinitePoset& c = td.poset();
    OrbitSSPage out;
    out.d = c.dim;
    out.manifold = is_homology_manifold(c).ok;

    IncidenceAssignment inc = incidence_assignment(c);
    GradedCosheaf hc = cohomology_cosheaf(td.d);
    out.cw = cellular_homology(c, inc, hc);

    out.antidiagonal_b.assign(hc.max_degree + c.dim + 1, 0);
    for (int t = 0; t <= hc.max_degree; ++t)
        for (int s = 0; s <= c.dim; ++s)
            out.antidiagonal_b[s + t] += out.cw[t][c.dim - s];

    if (out.manifold) {
        BettiTable bt = betti_numbers(td);
        out.matches_betti = (out.antidiagonal_b == bt.b);
    }
    return out;
}

ComparisonReport comparison_check(const TDiagram& td, int t_max) {
    ComparisonReport out;
    out.t_max = t_max;

    ClassifyingCosheaf cc = classifying_cosheaf(stabilizer_diagram(td), t_max);
    GradedTable bslims = limit_dims(cc.sheaf);
    out.acyclic = true;
    for (int t = 0; t <= t_max; ++t)
        for (int i = 1; i < (int)bslims[t].size(); ++i)
            if (bslims[t][i] != 0) out.acyclic = false;

    GradedCosheaf hc = cohomology_cosheaf(td.d);
    GradedTable lim = limit_dims(hc);
    out.barid_ok = true;
    for (int j = 0; j <= hc.max_degree; ++j)
        for (int i = j + 1; i < (int)lim[j].size(); ++i)
            if (lim[j][i] != 0) out.barid_ok = false;

    GradedModulePresentation m = limit_presentation(cc);
    out.ok = true;
    for (int i = 0; i <= td.k; ++i)
        for (int t = i; t <= t_max; ++t) {
            int beta = koszul_tor(m, i, t);
            int l = 0;
            if (t <= hc.max_degree && t - i < (int)lim[t].size()) l = lim[t][t - i];
            out.cells.emplace_back(i, t, beta, l);
            if (beta != l) out.ok = false;
        }
    return out;
}

CMReport cm_check(const TDiagram& td, int t_max) {
    CMReport out;
    out.t_max = t_max;
    out.strongly_reduced = is_strongly_reduced(td);
    out.manifold = is_homology_manifold(td.poset()).ok;
    out.hypotheses_met = out.strongly_reduced && out.manifold;

    ClassifyingCosheaf cc = classifying_cosheaf(stabilizer_diagram(td), t_max);
    GradedTable lims = limit_dims(cc.sheaf);
    out.lim_acyclic = true;
    for (int t = 0; t <= t_max; ++t) {
        out.lim0_dims.push_back(lims[t][0]);
        for (int i = 1; i < (int)lims[t].size(); ++i)
            if (lims[t][i] != 0) out.lim_acyclic = false;
    }

    int d = td.poset().dim;
    IncidenceAssignment inc = incidence_assignment(td.poset());
    GradedTable cw = cellular_homology(td.poset(), inc, cc.sheaf);
    out.cw_vanish = true;
    for (int t = 0; t <= t_max; ++t)
        for (int i = 0; i < d; ++i)
            if (cw[t][i] != 0) out.cw_vanish = false;
    return out;
}

bool ef_check(const TDiagram& td) {
    BettiTable bt = betti_numbers(td);
    for (int n = 1; n < (int)bt.b.size(); n += 2)
        if (bt.b[n] != 0) return false;
    return true;
}

EulerHReport euler_h_check(const TDiagram& td) {
    EulerHReport out;
    if (!ef_check(td) || !is_homology_manifold(td.poset()).ok) {
        out.skipped = true;
        return out;
    }
    const FinitePoset& c = td.poset();
    int d = c.dim;
    out.h = f_h_vectors(c).h;
    BettiTable bt = betti_numbers(td);
    for (int i = 0; i <= d; ++i)
        out.b2i.push_back(2 * i < (int)bt.b.size() ? bt.b[2 * i] : 0);
    out.ok = true;
    for (int i = 0; i <= d; ++i)
        if ((long long)out.b2i[i] != out.h[d - i]) out.ok = false;
    return out;
}

} // namespace toricoh
