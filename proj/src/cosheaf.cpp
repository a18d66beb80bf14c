#include "toricoh/cosheaf.hpp"

#include "toricoh/complex.hpp"
#include "toricoh/errors.hpp"

#include <algorithm>

namespace toricoh {

int GradedCosheaf::stalk_total(int e) const {
    int s = 0;
    for (int d : stalk[e]) s += d;
    return s;
}

QMatrix GradedCosheaf::map_between(int a, int b, int t) const {
    const FinitePoset& p = poset();
    if (a == b) return QMatrix::identity(stalk_dim(a, t));
    if (!p.less(a, b)) throw Error("map_between: elements not comparable");
    auto key = std::make_tuple(a, b, t);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    // factor through the smallest-index lower cover of b that still dominates a;
    // functoriality (checked) makes the choice immaterial
    QMatrix m;
    int k = p.cover_index(a, b);
    if (k >= 0) {
        m = cmap[k][t];
    } else {
        int via = -1;
        for (int x : p.down[b])
            if (p.leq(a, x)) {
                via = x;
                break;
            }
        if (via < 0) throw Error("map_between: broken cover chain");
        m = map_between(a, via, t) * cmap[p.cover_index(via, b)][t];
    }
    cache_.emplace(key, m);
    return m;
}

void GradedCosheaf::check_functorial() const {
    const FinitePoset& p = poset();
    for (int a = 0; a < p.n(); ++a)
        for (int b = 0; b < p.n(); ++b) {
            if (!p.less(a, b) || p.rank[b] != p.rank[a] + 2) continue;
            for (int t = 0; t <= max_degree; ++t) {
                QMatrix ref;
                bool first = true;
                for (int x : p.up[a]) {
                    if (!p.less(x, b)) continue;
                    QMatrix via = cmap[p.cover_index(a, x)][t] * cmap[p.cover_index(x, b)][t];
                    if (first) {
                        ref = via;
                        first = false;
                    } else if (via != ref) {
                        throw Error("cosheaf not functorial between " + p.elements[a] +
                                    " and " + p.elements[b]);
                    }
                }
            }
        }
}

GradedCosheaf constant_cosheaf(std::shared_ptr<const FinitePoset> p,
                               const std::vector<int>& graded_dims) {
    GradedCosheaf a;
    a.base = std::move(p);
    a.max_degree = (int)graded_dims.size() - 1;
    a.stalk.assign(a.base->n(), graded_dims);
    a.cmap.resize(a.base->covers.size());
    for (auto& per_cover : a.cmap) {
        per_cover.reserve(graded_dims.size());
        for (int d : graded_dims) per_cover.push_back(QMatrix::identity(d));
    }
    return a;
}

GradedTable cellular_homology(const FinitePoset& c, const IncidenceAssignment& inc,
                              const GradedCosheaf& b) {
    int d = c.dim;
    GradedTable out(b.max_degree + 1);
    if (d < 0) return out;

    // block offsets per homological degree
    std::vector<std::vector<int>> by_rank(d + 1);
    for (int i = 0; i <= d; ++i) by_rank[i] = c.elements_of_rank(i);

    for (int t = 0; t <= b.max_degree; ++t) {
        std::vector<std::map<int, int>> offset(d + 1);
        std::vector<int> dim_i(d + 1, 0);
        for (int i = 0; i <= d; ++i)
            for (int e : by_rank[i]) {
                offset[i][e] = dim_i[i];
                dim_i[i] += b.stalk_dim(e, t);
            }
        // assemble with reversed indexing so differentials run upward
        RationalComplex cx;
        for (int j = 0; j <= d; ++j) cx.dims.push_back(dim_i[d - j]);
        for (int j = 0; j + 1 <= d; ++j) {
            int i = d - j; // boundary C_i -> C_{i-1}
            QMatrix m(dim_i[i - 1], dim_i[i]);
            for (std::size_t k = 0; k < c.covers.size(); ++k) {
                auto [lo, hi] = c.covers[k];
                if (c.rank[hi] != i) continue;
                const QMatrix& blk = b.cmap[k][t];
                int r0 = offset[i - 1][lo], c0 = offset[i][hi];
                for (int r = 0; r < blk.rows(); ++r)
                    for (auto& [cc, v] : blk.row(r))
                        m.add(r0 + r, c0 + cc, inc.sign[k] > 0 ? v : -v);
            }
            cx.maps.push_back(std::move(m));
        }
        auto h = cx.homology(); // h[j] = H_{d-j}
        std::vector<int> res(d + 1, 0);
        for (int j = 0; j <= d; ++j) res[d - j] = h[j];
        out[t] = std::move(res);
    }
    return out;
}

RationalComplex refinement_complex(const GradedCosheaf& a, int t) {
    const FinitePoset& p = a.poset();
    OrderComplex oc = order_complex(p);
    RationalComplex cx;
    int sdim = oc.dim();
    std::vector<std::vector<int>> offset(sdim + 1);
    for (int s = 0; s <= sdim; ++s) {
        auto& level = oc.simplices[s];
        offset[s].resize(level.size());
        int total = 0;
        for (int i = 0; i < (int)level.size(); ++i) {
            offset[s][i] = total;
            total += a.stalk_dim(level[i].front(), t);
        }
        cx.dims.push_back(total);
    }
    for (int s = 0; s + 1 <= sdim; ++s) {
        QMatrix d(cx.dims[s + 1], cx.dims[s]);
        auto& big = oc.simplices[s + 1];
        auto& small_idx = oc.index[s];
        for (int ti = 0; ti < (int)big.size(); ++ti) {
            const auto& tau = big[ti];
            for (int i = 0; i < (int)tau.size(); ++i) {
                std::vector<int> face = tau;
                face.erase(face.begin() + i);
                int fi = small_idx.at(face);
                int sign = i % 2 ? -1 : 1;
                int r0 = offset[s + 1][ti], c0 = offset[s][fi];
                if (i == 0) {
                    QMatrix blk = a.map_between(tau[0], tau[1], t);
                    for (int r = 0; r < blk.rows(); ++r)
                        for (auto& [cc, v] : blk.row(r))
                            d.add(r0 + r, c0 + cc, sign > 0 ? v : -v);
                } else {
                    for (int r = 0; r < a.stalk_dim(tau[0], t); ++r)
                        d.add(r0 + r, c0 + r, sign);
                }
            }
        }
        cx.maps.push_back(std::move(d));
    }
    return cx;
}

DualityReport zmss_duality_check(const FinitePoset& c, const GradedCosheaf& a) {
    DualityReport rep;
    auto mf = is_homology_manifold(c);
    if (!mf.ok) {
        rep.skipped = true;
        return rep;
    }
    rep.lim = limit_dims(a);
    rep.cellular = cellular_homology(c, incidence_assignment(c), a);
    rep.ok = true;
    int d = c.dim;
    for (int t = 0; t <= a.max_degree; ++t)
        for (int i = 0; i <= d; ++i)
            if (rep.lim[t][i] != rep.cellular[t][d - i]) rep.ok = false;
    return rep;
}

} // namespace toricoh
