#include "toricoh/poset.hpp"

#include "toricoh/complex.hpp"
#include "toricoh/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace toricoh {

int FinitePoset::index_of(const std::string& id) const {
    for (int i = 0; i < n(); ++i)
        if (elements[i] == id) return i;
    throw SchemaError("unknown element id: " + id);
}

int FinitePoset::cover_index(int lower, int upper) const {
    auto it = cover_index_.find({lower, upper});
    return it == cover_index_.end() ? -1 : it->second;
}

std::vector<int> FinitePoset::elements_of_rank(int r) const {
    std::vector<int> out;
    for (int i = 0; i < n(); ++i)
        if (rank[i] == r) out.push_back(i);
    return out;
}

std::vector<int> FinitePoset::minimal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < n(); ++i)
        if (down[i].empty()) out.push_back(i);
    return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < n(); ++i)
        if (up[i].empty()) out.push_back(i);
    return out;
}

FinitePoset from_cover_indices(std::vector<std::string> elements,
                               std::vector<std::pair<int, int>> covers) {
    FinitePoset p;
    p.elements = std::move(elements);
    p.covers = std::move(covers);

    {
        std::set<std::string> seen(p.elements.begin(), p.elements.end());
        if ((int)seen.size() != p.n()) throw SchemaError("duplicate element ids");
        std::set<std::pair<int, int>> cseen;
        for (auto& [a, b] : p.covers) {
            if (a < 0 || b < 0 || a >= p.n() || b >= p.n())
                throw SchemaError("cover index out of range");
            if (a == b) throw CycleDetected("self-cover at " + p.elements[a]);
            if (!cseen.insert({a, b}).second) throw SchemaError("duplicate cover");
        }
    }

    p.up.assign(p.n(), {});
    p.down.assign(p.n(), {});
    for (int k = 0; k < (int)p.covers.size(); ++k) {
        auto [a, b] = p.covers[k];
        p.up[a].push_back(b);
        p.down[b].push_back(a);
        p.cover_index_[{a, b}] = k;
    }
    for (auto& v : p.up) std::sort(v.begin(), v.end());
    for (auto& v : p.down) std::sort(v.begin(), v.end());

    // Kahn topological sort; rank = longest chain from a minimal element
    std::vector<int> indeg(p.n());
    for (int i = 0; i < p.n(); ++i) indeg[i] = (int)p.down[i].size();
    std::vector<int> order, queue;
    for (int i = 0; i < p.n(); ++i)
        if (indeg[i] == 0) queue.push_back(i);
    p.rank.assign(p.n(), 0);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        order.push_back(v);
        for (int w : p.up[v]) {
            p.rank[w] = std::max(p.rank[w], p.rank[v] + 1);
            if (--indeg[w] == 0) queue.push_back(w);
        }
    }
    if ((int)order.size() != p.n()) throw CycleDetected("cover relation has a cycle");
    for (auto& [a, b] : p.covers)
        if (p.rank[b] != p.rank[a] + 1)
            throw NotGraded("cover " + p.elements[a] + " < " + p.elements[b] +
                            " skips a rank");
    p.dim = -1;
    for (int r : p.rank) p.dim = std::max(p.dim, r);

    p.leq_.assign(p.n(), std::vector<char>(p.n(), 0));
    for (int i = p.n() - 1; i >= 0; --i) {
        int v = order[i]; // reverse topological order: all of up[v] done
        p.leq_[v][v] = 1;
        for (int w : p.up[v])
            for (int x = 0; x < p.n(); ++x)
                if (p.leq_[w][x]) p.leq_[v][x] = 1;
    }
    return p;
}

FinitePoset from_cover_relations(const std::vector<std::string>& elements,
                                 const std::vector<std::pair<std::string, std::string>>& covers) {
    std::map<std::string, int> idx;
    for (int i = 0; i < (int)elements.size(); ++i) {
        if (!idx.emplace(elements[i], i).second)
            throw SchemaError("duplicate element id: " + elements[i]);
    }
    std::vector<std::pair<int, int>> c;
    c.reserve(covers.size());
    for (auto& [a, b] : covers) {
        auto ia = idx.find(a), ib = idx.find(b);
        if (ia == idx.end()) throw SchemaError("cover references unknown element: " + a);
        if (ib == idx.end()) throw SchemaError("cover references unknown element: " + b);
        c.emplace_back(ia->second, ib->second);
    }
    return from_cover_indices(elements, std::move(c));
}

FinitePoset opposite(const FinitePoset& p) {
    std::vector<std::pair<int, int>> c;
    c.reserve(p.covers.size());
    for (auto& [a, b] : p.covers) c.emplace_back(b, a);
    return from_cover_indices(p.elements, std::move(c));
}

FinitePoset induced_subposet(const FinitePoset& p, const std::vector<int>& keep) {
    std::vector<int> newidx(p.n(), -1);
    std::vector<std::string> elems;
    for (int v : keep) {
        newidx[v] = (int)elems.size();
        elems.push_back(p.elements[v]);
    }
    std::vector<std::pair<int, int>> covers;
    for (auto& [a, b] : p.covers)
        if (newidx[a] >= 0 && newidx[b] >= 0) covers.emplace_back(newidx[a], newidx[b]);
    return from_cover_indices(std::move(elems), std::move(covers));
}

FinitePoset skeleton(const FinitePoset& p, int q) {
    if (q < 0) throw OutOfRange("skeleton: q must be >= 0");
    std::vector<int> keep;
    for (int i = 0; i < p.n(); ++i)
        if (p.rank[i] <= q) keep.push_back(i);
    return induced_subposet(p, keep);
}

FinitePoset coskeleton(const FinitePoset& p, int q) {
    std::vector<int> keep;
    for (int i = 0; i < p.n(); ++i)
        if (p.rank[i] >= q) keep.push_back(i);
    return induced_subposet(p, keep);
}

std::size_t OrderComplex::total() const {
    std::size_t t = 0;
    for (auto& level : simplices) t += level.size();
    return t;
}

OrderComplex order_complex(const FinitePoset& p) {
    OrderComplex oc;
    if (p.n() == 0) return oc;
    // grow chains one element at a time; extensions keep the chain strictly
    // increasing, so every stored vector is ascending in the poset order
    std::vector<std::vector<int>> cur;
    for (int i = 0; i < p.n(); ++i) cur.push_back({i});
    while (!cur.empty()) {
        std::sort(cur.begin(), cur.end());
        oc.index.emplace_back();
        auto& idx = oc.index.back();
        for (int i = 0; i < (int)cur.size(); ++i) idx[cur[i]] = i;
        std::vector<std::vector<int>> next;
        for (auto& ch : cur) {
            int top = ch.back();
            for (int x = 0; x < p.n(); ++x) {
                if (p.less(top, x)) {
                    auto ext = ch;
                    ext.push_back(x);
                    next.push_back(std::move(ext));
                }
            }
        }
        oc.simplices.push_back(std::move(cur));
        cur = std::move(next);
    }
    return oc;
}

IncidenceAssignment incidence_assignment(const FinitePoset& p) {
    int nc = (int)p.covers.size();
    // each diamond a < x,y < b forces the four sign exponents to sum to 1 (mod 2)
    std::vector<std::vector<uint64_t>> rows;
    int words = (nc + 1 + 63) / 64;
    auto bit = [&](std::vector<uint64_t>& r, int j) { r[j / 64] ^= (uint64_t)1 << (j % 64); };
    for (int a = 0; a < p.n(); ++a)
        for (int b = 0; b < p.n(); ++b) {
            if (!p.less(a, b) || p.rank[b] != p.rank[a] + 2) continue;
            std::vector<int> mid;
            for (int x : p.up[a])
                if (p.less(x, b)) mid.push_back(x);
            if (mid.size() != 2)
                throw DiamondViolation("interval (" + p.elements[a] + ", " + p.elements[b] +
                                       ") has " + std::to_string(mid.size()) +
                                       " intermediate elements");
            std::vector<uint64_t> row(words, 0);
            for (int x : mid) {
                bit(row, p.cover_index(a, x));
                bit(row, p.cover_index(x, b));
            }
            bit(row, nc); // rhs 1
            rows.push_back(std::move(row));
        }

    // without a least element the empty face acts as a virtual bottom: each
    // 1-cell must carry opposite signs at its two vertices, or the chain
    // complex would not compute the homology of the underlying complex
    if (p.minimal_elements().size() > 1) {
        for (int z = 0; z < p.n(); ++z) {
            if (p.rank[z] != 1) continue;
            std::vector<int> verts;
            for (int ci = 0; ci < nc; ++ci)
                if (p.covers[ci].second == z && p.rank[p.covers[ci].first] == 0)
                    verts.push_back(ci);
            if (verts.size() != 2)
                throw DiamondViolation("1-cell " + p.elements[z] + " has " +
                                       std::to_string(verts.size()) + " vertices");
            std::vector<uint64_t> row(words, 0);
            for (int ci : verts) bit(row, ci);
            bit(row, nc); // rhs 1
            rows.push_back(std::move(row));
        }
    }

    // GF(2) elimination
    std::vector<int> pivot_of_row;
    int rcount = 0;
    for (int col = 0; col < nc && rcount < (int)rows.size(); ++col) {
        int sel = -1;
        for (int i = rcount; i < (int)rows.size(); ++i)
            if ((rows[i][col / 64] >> (col % 64)) & 1) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[rcount], rows[sel]);
        for (int i = 0; i < (int)rows.size(); ++i) {
            if (i == rcount) continue;
            if ((rows[i][col / 64] >> (col % 64)) & 1)
                for (int w = 0; w < words; ++w) rows[i][w] ^= rows[rcount][w];
        }
        pivot_of_row.push_back(col);
        ++rcount;
    }
    for (int i = rcount; i < (int)rows.size(); ++i)
        if ((rows[i][nc / 64] >> (nc % 64)) & 1)
            throw Infeasible("incidence sign system has no solution");

    IncidenceAssignment ia;
    ia.sign.assign(nc, 1);
    for (int i = 0; i < rcount; ++i)
        if ((rows[i][nc / 64] >> (nc % 64)) & 1) ia.sign[pivot_of_row[i]] = -1;
    return ia;
}

static long long binom_ll(long long n, long long r) {
    if (r < 0 || r > n || n < 0) return 0;
    long long out = 1;
    for (long long i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
    return out;
}

FHVector f_h_vectors(const FinitePoset& p) {
    int d = p.dim;
    FHVector fh;
    if (d < 0) return fh;
    fh.f.assign(d + 1, 0);
    for (int r : p.rank) ++fh.f[r]; // fh.f[j] = f_{j-1}
    fh.h.assign(d + 1, 0);
    for (int i = 0; i <= d; ++i) {
        long long s = 0;
        for (int j = 0; j <= d; ++j) {
            long long sgn = ((d - 1 - j) % 2 + 2) % 2 ? -1 : 1;
            s += sgn * fh.f[j] * binom_ll(d - j, i);
        }
        long long outer = (i + 1) % 2 ? -1 : 1; // (-1)^{i+1}
        fh.h[d - i] = outer * s;
    }
    return fh;
}

std::vector<int> reduced_cohomology(const OrderComplex& oc) {
    // augmented cochain complex; slot s of the result is degree s-1
    RationalComplex cx;
    cx.dims.push_back(1); // the empty simplex
    for (auto& level : oc.simplices) cx.dims.push_back((int)level.size());
    for (std::size_t s = 0; s + 1 < cx.dims.size(); ++s) {
        QMatrix d(cx.dims[s + 1], cx.dims[s]);
        if (s == 0) {
            for (int v = 0; v < cx.dims[1]; ++v) d.set(v, 0, 1);
        } else {
            auto& big = oc.simplices[s];
            auto& small_idx = oc.index[s - 1];
            for (int t = 0; t < (int)big.size(); ++t) {
                for (int i = 0; i < (int)big[t].size(); ++i) {
                    std::vector<int> face = big[t];
                    face.erase(face.begin() + i);
                    d.add(t, small_idx.at(face), i % 2 ? -1 : 1);
                }
            }
        }
        cx.maps.push_back(std::move(d));
    }
    return cx.homology();
}

std::vector<int> local_cohomology_stalk(const FinitePoset& p, int c) {
    std::vector<int> above;
    for (int x = 0; x < p.n(); ++x)
        if (p.less(c, x)) above.push_back(x);
    auto h = reduced_cohomology(order_complex(induced_subposet(p, above)));
    // stalk degree q corresponds to reduced degree q - rank(c) - 1
    std::vector<int> out(p.dim + 1, 0);
    for (int q = 0; q <= p.dim; ++q) {
        int rd = q - p.rank[c] - 1; // reduced degree
        int slot = rd + 1;          // slot 0 of h is degree -1
        if (slot >= 0 && slot < (int)h.size()) out[q] = h[slot];
    }
    return out;
}

ManifoldReport is_homology_manifold(const FinitePoset& p) {
    ManifoldReport rep;
    rep.ok = true;
    for (int c = 0; c < p.n(); ++c) {
        auto u = local_cohomology_stalk(p, c);
        for (int q = 0; q <= p.dim; ++q) {
            int expect = q == p.dim ? 1 : 0;
            if (u[q] != expect) {
                rep.ok = false;
                rep.failures.emplace_back(c, q);
            }
        }
    }
    return rep;
}

bool is_simplicial_poset(const FinitePoset& p) {
    if (p.n() == 0) return false;
    if (p.minimal_elements().size() != 1) return false;
    std::set<std::vector<int>> atom_sets;
    for (int c = 0; c < p.n(); ++c) {
        std::vector<int> atoms, ideal;
        for (int x = 0; x < p.n(); ++x) {
            if (p.leq(x, c)) {
                ideal.push_back(x);
                if (p.rank[x] == 1) atoms.push_back(x);
            }
        }
        if ((std::size_t)ideal.size() != ((std::size_t)1 << atoms.size())) return false;
        if (!atom_sets.insert(atoms).second) return false;
    }
    return true;
}

long long reduced_euler(const FinitePoset& p, const std::vector<int>& keep) {
    // chain count by size via DP over the induced subposet; χ̃ includes the
    // empty chain with sign -1
    FinitePoset s = induced_subposet(p, keep);
    // ends[v] = signed count of nonempty chains ending at v: chains of size
    // m contribute (-1)^{m-1}
    std::vector<long long> ends(s.n(), 0);
    std::vector<int> order(s.n());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return s.rank[a] < s.rank[b]; });
    long long chi = -1;
    for (int v : order) {
        long long e = 1;
        for (int u = 0; u < s.n(); ++u)
            if (s.less(u, v)) e -= ends[u];
        ends[v] = e;
        chi += e;
    }
    return chi;
}

} // namespace toricoh
