#include "toricoh/complex.hpp"
#include "toricoh/cosheaf.hpp"
#include "toricoh/errors.hpp"

#include <algorithm>
#include <numeric>

namespace toricoh {

namespace {

// number of ascending chains starting at each element (all lengths >= 1)
std::vector<long long> chains_from(const FinitePoset& p) {
    std::vector<int> order(p.n());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return p.rank[a] > p.rank[b]; });
    std::vector<long long> f(p.n(), 0);
    for (int v : order) {
        long long s = 1;
        for (int w = 0; w < p.n(); ++w)
            if (p.less(v, w)) s += f[w];
        f[v] = s;
    }
    return f;
}

} // namespace

PosetResolution build_resolution(const FinitePoset& c) {
    PosetResolution res;
    if (c.n() == 0) return res;

    // elements in decreasing rank (increasing order on C^op), ties by index
    std::vector<int> order(c.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return c.rank[a] > c.rank[b]; });

    // level 0: one representable generator per maximal element of C
    res.levels.emplace_back();
    for (int v : order)
        if (c.up[v].empty()) res.levels[0].push_back({v, {}});

    for (int level = 0;; ++level) {
        const auto& gens = res.levels[level];
        // kernel spanning vectors per element, in global gen coordinates
        std::vector<std::vector<std::map<int, Rat>>> span(c.n());
        std::vector<PosetResolution::Gen> next;

        for (int e : order) {
            // local column space: generators visible at e
            std::vector<int> colgens;
            for (int g = 0; g < (int)gens.size(); ++g)
                if (c.leq(e, gens[g].elem)) colgens.push_back(g);
            if (colgens.empty()) continue;
            std::vector<int> colpos(gens.size(), -1);
            for (int i = 0; i < (int)colgens.size(); ++i) colpos[colgens[i]] = i;

            QMatrix m;
            if (level == 0) {
                m = QMatrix(1, (int)colgens.size());
                for (int i = 0; i < (int)colgens.size(); ++i) m.set(0, i, 1);
            } else {
                const auto& prev = res.levels[level - 1];
                std::vector<int> rowpos(prev.size(), -1);
                int nrows = 0;
                for (int g = 0; g < (int)prev.size(); ++g)
                    if (c.leq(e, prev[g].elem)) rowpos[g] = nrows++;
                m = QMatrix(nrows, (int)colgens.size());
                for (int i = 0; i < (int)colgens.size(); ++i)
                    for (auto& [b, v] : gens[colgens[i]].val) m.set(rowpos[b], i, v);
            }
            QMatrix k = kernel_basis(m);
            // record the kernel basis at e (used by elements further down)
            for (int j = 0; j < k.cols(); ++j) {
                std::map<int, Rat> vec;
                for (int i = 0; i < k.rows(); ++i) {
                    Rat v = k.get(i, j);
                    if (v != 0) vec[colgens[i]] = v;
                }
                span[e].push_back(std::move(vec));
            }
            if (k.cols() == 0) continue;

            // columns inherited from the elements covering e already span part
            // of the kernel; new generators extend that span to all of it
            std::vector<std::map<int, Rat>> inherited;
            for (int x : c.up[e])
                for (auto& vec : span[x]) inherited.push_back(vec);
            QMatrix probe((int)colgens.size(), (int)inherited.size() + k.cols());
            for (int j = 0; j < (int)inherited.size(); ++j)
                for (auto& [g, v] : inherited[j]) probe.set(colpos[g], j, v);
            for (int j = 0; j < k.cols(); ++j)
                for (int i = 0; i < k.rows(); ++i) probe.set(i, (int)inherited.size() + j, k.get(i, j));
            for (int sel : independent_columns(probe)) {
                if (sel < (int)inherited.size()) continue;
                next.push_back({e, span[e][sel - (int)inherited.size()]});
            }
        }
        if (next.empty()) break;
        res.levels.push_back(std::move(next));
        if ((int)res.levels.size() > c.n() + 2)
            throw Error("resolution failed to terminate");
    }
    return res;
}

namespace {

std::vector<int> hom_complex_cohomology(const PosetResolution& res, const GradedCosheaf& a,
                                        int t) {
    int L = (int)res.levels.size();
    RationalComplex cx;
    std::vector<std::vector<int>> offset(L);
    for (int i = 0; i < L; ++i) {
        int total = 0;
        offset[i].resize(res.levels[i].size());
        for (int g = 0; g < (int)res.levels[i].size(); ++g) {
            offset[i][g] = total;
            total += a.stalk_dim(res.levels[i][g].elem, t);
        }
        cx.dims.push_back(total);
    }
    for (int i = 0; i + 1 < L; ++i) {
        QMatrix d(cx.dims[i + 1], cx.dims[i]);
        for (int b = 0; b < (int)res.levels[i + 1].size(); ++b) {
            const auto& gen = res.levels[i + 1][b];
            for (auto& [g, lambda] : gen.val) {
                int src = res.levels[i][g].elem; // gen.elem <= src in C
                QMatrix blk = a.map_between(gen.elem, src, t);
                int r0 = offset[i + 1][b], c0 = offset[i][g];
                for (int r = 0; r < blk.rows(); ++r)
                    for (auto& [cc, v] : blk.row(r)) d.add(r0 + r, c0 + cc, lambda * v);
            }
        }
        cx.maps.push_back(std::move(d));
    }
    return cx.homology();
}

} // namespace

GradedTable limit_dims(const GradedCosheaf& a, LimitEngine engine) {
    const FinitePoset& p = a.poset();
    GradedTable out(a.max_degree + 1);
    int d = std::max(p.dim, 0);
    for (auto& row : out) row.assign(d + 1, 0);
    if (p.n() == 0) return out;

    if (engine == LimitEngine::Auto) {
        auto f = chains_from(p);
        long long weighted = 0;
        for (int v = 0; v < p.n(); ++v) weighted += f[v] * std::max(a.stalk_total(v), 1);
        engine = weighted <= 150000 ? LimitEngine::Refinement : LimitEngine::Resolution;
    }

    if (engine == LimitEngine::Refinement) {
        for (int t = 0; t <= a.max_degree; ++t) {
            auto h = refinement_complex(a, t).homology();
            for (int i = 0; i < (int)h.size() && i <= d; ++i) out[t][i] = h[i];
            for (int i = d + 1; i < (int)h.size(); ++i)
                if (h[i] != 0) throw Error("derived limit beyond poset dimension");
        }
    } else {
        PosetResolution res = build_resolution(p);
        for (int t = 0; t <= a.max_degree; ++t) {
            auto h = hom_complex_cohomology(res, a, t);
            for (int i = 0; i < (int)h.size(); ++i) {
                if (i <= d)
                    out[t][i] = h[i];
                else if (h[i] != 0)
                    throw Error("derived limit beyond poset dimension");
            }
        }
    }
    return out;
}

QMatrix limit_sections(const GradedCosheaf& a, int t, std::vector<int>* elems) {
    const FinitePoset& p = a.poset();
    PosetResolution res = build_resolution(p);
    if (res.levels.empty()) {
        if (elems) elems->clear();
        return QMatrix(0, 0);
    }
    std::vector<int> maxelems;
    for (auto& g : res.levels[0]) maxelems.push_back(g.elem);
    if (elems) *elems = maxelems;
    if (res.levels.size() == 1) {
        int total = 0;
        for (int e : maxelems) total += a.stalk_dim(e, t);
        return QMatrix::identity(total);
    }
    // kernel of the first Hom-complex differential
    std::vector<int> off0(res.levels[0].size());
    int total = 0;
    for (int g = 0; g < (int)res.levels[0].size(); ++g) {
        off0[g] = total;
        total += a.stalk_dim(res.levels[0][g].elem, t);
    }
    int rows = 0;
    std::vector<int> off1(res.levels[1].size());
    for (int b = 0; b < (int)res.levels[1].size(); ++b) {
        off1[b] = rows;
        rows += a.stalk_dim(res.levels[1][b].elem, t);
    }
    QMatrix d(rows, total);
    for (int b = 0; b < (int)res.levels[1].size(); ++b) {
        const auto& gen = res.levels[1][b];
        for (auto& [g, lambda] : gen.val) {
            QMatrix blk = a.map_between(gen.elem, res.levels[0][g].elem, t);
            for (int r = 0; r < blk.rows(); ++r)
                for (auto& [cc, v] : blk.row(r)) d.add(off1[b] + r, off0[g] + cc, lambda * v);
        }
    }
    return kernel_basis(d);
}

} // namespace toricoh
