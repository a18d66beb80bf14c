#include "toricoh/skeleton.hpp"

#include "toricoh/complex.hpp"
#include "toricoh/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace toricoh {

namespace {

long long binom_ll(long long n, long long r) {
    if (r < 0 || r > n || n < 0) return 0;
    long long out = 1;
    for (long long i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
    return out;
}

// binom(n, r) for possibly negative n via the falling-factorial formula
long long binom_gen(long long n, long long r) {
    if (r < 0) return 0;
    long long num = 1, den = 1;
    for (long long i = 0; i < r; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

// ---- exterior algebra on Q^k with bitmask monomial bases -----------------

using Form = std::map<std::uint64_t, Rat>; // homogeneous, mask -> coefficient

int inversions(std::uint64_t u, std::uint64_t v) {
    int inv = 0;
    for (std::uint64_t w = v; w; w &= w - 1) {
        int j = __builtin_ctzll(w);
        inv += __builtin_popcountll(u >> (j + 1));
    }
    return inv;
}

Form wedge(const Form& a, const Form& b) {
    Form out;
    for (auto& [u, x] : a)
        for (auto& [v, y] : b) {
            if (u & v) continue;
            Rat c = x * y;
            if (inversions(u, v) % 2) c = -c;
            auto [it, fresh] = out.emplace(u | v, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

std::uint64_t mask_of(const std::vector<int>& subset) {
    std::uint64_t m = 0;
    for (int i : subset) m |= std::uint64_t(1) << i;
    return m;
}

// index of each j-subset mask in the lexicographic wedge basis
const std::map<std::uint64_t, int>& mask_index(int k, int j) {
    static std::map<std::pair<int, int>, std::map<std::uint64_t, int>> cache;
    auto key = std::make_pair(k, j);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::map<std::uint64_t, int> m;
        auto subs = subsets_lex(k, j);
        for (int i = 0; i < (int)subs.size(); ++i) m[mask_of(subs[i])] = i;
        it = cache.emplace(key, std::move(m)).first;
    }
    return it->second;
}

struct JData {
    GradedCosheaf sheaf;
    std::vector<std::vector<QMatrix>> q; // q[e][j] : Λ^j Q^k -> stalk
};

JData build_j(const TDiagram& td) {
    if (!is_t_characteristic(td))
        throw NotCharacteristic("cokernel cosheaf requires a characteristic diagram");
    const FinitePoset& p = td.poset();
    int k = td.k;

    JData out;
    out.sheaf.base = td.d.base;
    out.sheaf.max_degree = k;
    out.sheaf.stalk.assign(p.n(), {});
    out.q.assign(p.n(), {});
    for (int e = 0; e < p.n(); ++e) {
        QMatrix in = td.aug[e].transpose().to_q(); // k x d(e), injective
        int de = td.d.rank[e];
        for (int j = 0; j <= k; ++j) {
            QMatrix a = exterior_power(in, j);
            if (rank(a) != (int)binom_ll(de, j))
                throw Error("torus inclusion lost rank on an exterior power");
            QMatrix qm = kernel_basis(a.transpose()).transpose();
            if (qm.rows() != (int)(binom_ll(k, j) - binom_ll(de, j)))
                throw Error("cokernel dimension mismatch");
            out.q[e].push_back(qm);
            out.sheaf.stalk[e].push_back(qm.rows());
        }
    }
    for (auto& [lo, hi] : p.covers) {
        std::vector<QMatrix> maps;
        for (int j = 0; j <= k; ++j) {
            auto xt = solve(out.q[hi][j].transpose(), out.q[lo][j].transpose());
            if (!xt) throw Error("cokernel cover map is not induced");
            maps.push_back(xt->transpose());
        }
        out.sheaf.cmap.push_back(std::move(maps));
    }
    out.sheaf.check_functorial();
    return out;
}

} // namespace

TDiagram restrict_diagram(const TDiagram& td, int q) {
    if (q < 0) throw OutOfRange("restrict_diagram: negative level");
    const FinitePoset& p = td.poset();
    auto base = std::make_shared<FinitePoset>(skeleton(p, q));

    TDiagram out;
    out.k = td.k;
    out.d.base = base;
    for (int e = 0; e < base->n(); ++e) {
        int orig = p.index_of(base->elements[e]);
        out.d.rank.push_back(td.d.rank[orig]);
        out.aug.push_back(td.aug[orig]);
    }
    for (auto& [lo, hi] : base->covers) {
        int olo = p.index_of(base->elements[lo]);
        int ohi = p.index_of(base->elements[hi]);
        out.d.arrow.push_back(td.d.arrow[p.cover_index(olo, ohi)]);
    }
    out.d.check_functorial();
    out.check_naturality();
    return out;
}

GradedCosheaf j_cosheaf(const TDiagram& td) {
    return build_j(td).sheaf;
}

TaylorResolution taylor_resolution(const TDiagram& td) {
    JData jd = build_j(td);
    const FinitePoset& p = td.poset();
    int k = td.k, d = p.dim;
    if (k > 62) throw OutOfRange("ambient torus rank too large for wedge bitmasks");
    StabilizerDiagram sd = stabilizer_diagram(td);

    // atoms below each element, and the stabilizer top form per nonzero face
    std::vector<int> atom_list = p.elements_of_rank(1);
    std::vector<std::vector<int>> atoms(p.n());
    for (int e = 0; e < p.n(); ++e)
        for (int a : atom_list)
            if (p.leq(a, e)) atoms[e].push_back(a);

    std::vector<Form> omega(p.n());
    for (int a : atom_list) {
        Form w{{0, Rat(1)}};
        for (int col = 0; col < sd.stab[a].cols; ++col) {
            Form lin;
            for (int row = 0; row < k; ++row)
                if (sd.stab[a].at(row, col) != 0)
                    lin[std::uint64_t(1) << row] = Rat(sd.stab[a].at(row, col));
            w = wedge(w, lin);
        }
        omega[a] = w;
    }
    for (int e = 0; e < p.n(); ++e) {
        if (p.rank[e] < 1) continue;
        Form w{{0, Rat(1)}};
        for (int a : atoms[e]) w = wedge(w, omega[a]);
        if (w.empty()) throw Error("stabilizer top form vanished");
        omega[e] = w;
    }

    // bas[e][j]: basis of the degree-j piece of the principal ideal (omega_e)
    std::vector<std::vector<QMatrix>> bas(p.n());
    std::vector<int> gdeg(p.n(), 0);
    for (int e = 0; e < p.n(); ++e) {
        if (p.rank[e] < 1) continue;
        int g = __builtin_popcountll(omega[e].begin()->first);
        gdeg[e] = g;
        for (int j = 0; j <= k; ++j) {
            int nk = (int)binom_ll(k, j);
            if (j < g) {
                bas[e].push_back(QMatrix(nk, 0));
                continue;
            }
            auto subs = subsets_lex(k, j - g);
            const auto& idx = mask_index(k, j);
            QMatrix cols(nk, (int)subs.size());
            for (int c = 0; c < (int)subs.size(); ++c) {
                Form mono{{mask_of(subs[c]), Rat(1)}};
                for (auto& [m, v] : wedge(mono, omega[e])) cols.set(idx.at(m), c, v);
            }
            bas[e].push_back(cols.select_columns(independent_columns(cols)));
        }
    }

    TaylorResolution out;
    out.base = td.d.base;
    out.k = k;
    out.j = jd.sheaf;

    // summand lists per level and element, ordered by face index
    std::vector<std::vector<std::vector<int>>> sums(d); // [i][x] -> faces
    for (int i = 0; i < d; ++i) {
        sums[i].assign(p.n(), {});
        for (int x = 0; x < p.n(); ++x)
            for (int c : p.elements_of_rank(i + 1))
                if (p.leq(c, x)) sums[i][x].push_back(c);
    }
    auto offsets = [&](int i, int x, int j) {
        std::vector<int> off{0};
        for (int c : sums[i][x]) off.push_back(off.back() + bas[c][j].cols());
        return off;
    };

    for (int i = 0; i < d; ++i) {
        GradedCosheaf t;
        t.base = td.d.base;
        t.max_degree = k;
        t.stalk.assign(p.n(), std::vector<int>(k + 1, 0));
        for (int x = 0; x < p.n(); ++x)
            for (int j = 0; j <= k; ++j) t.stalk[x][j] = offsets(i, x, j).back();
        for (auto& [lo, hi] : p.covers) {
            std::vector<QMatrix> maps;
            for (int j = 0; j <= k; ++j) {
                auto roff = offsets(i, lo, j), coff = offsets(i, hi, j);
                QMatrix m(roff.back(), coff.back());
                for (int s = 0; s < (int)sums[i][hi].size(); ++s) {
                    int c = sums[i][hi][s];
                    auto it = std::find(sums[i][lo].begin(), sums[i][lo].end(), c);
                    if (it == sums[i][lo].end()) continue;
                    int r = (int)(it - sums[i][lo].begin());
                    for (int z = 0; z < bas[c][j].cols(); ++z) m.set(roff[r] + z, coff[s] + z, 1);
                }
                maps.push_back(std::move(m));
            }
            t.cmap.push_back(std::move(maps));
        }
        t.check_functorial();
        out.terms.push_back(std::move(t));
    }

    // differentials: signed duals of the ideal inclusions P(c') ⊂ P(c)
    out.xi.assign(std::max(0, d - 1), {});
    for (int i = 0; i + 1 < d; ++i) {
        out.xi[i].assign(p.n(), {});
        for (int x = 0; x < p.n(); ++x)
            for (int j = 0; j <= k; ++j) {
                auto coff = offsets(i, x, j), roff = offsets(i + 1, x, j);
                QMatrix m(roff.back(), coff.back());
                for (int s = 0; s < (int)sums[i][x].size(); ++s) {
                    int c = sums[i][x][s];
                    for (int r = 0; r < (int)sums[i + 1][x].size(); ++r) {
                        int cp = sums[i + 1][x][r];
                        if (!p.less(c, cp)) continue;
                        int added = -1, pos = 0;
                        for (int a : atoms[cp])
                            if (std::find(atoms[c].begin(), atoms[c].end(), a) == atoms[c].end()) {
                                added = a;
                                break;
                            } else {
                                ++pos;
                            }
                        if (added < 0) throw Error("cover in a non-simplicial configuration");
                        auto inc = solve(bas[c][j], bas[cp][j]);
                        if (!inc) throw Error("ideal inclusion failed to solve");
                        QMatrix blk = inc->transpose();
                        if (pos % 2) blk = blk.scaled(Rat(-1));
                        for (int rr = 0; rr < blk.rows(); ++rr)
                            for (auto& [cc, v] : blk.row(rr)) m.set(roff[r] + rr, coff[s] + cc, v);
                    }
                }
                out.xi[i][x].push_back(std::move(m));
            }
    }

    // augmentation: per-atom components solved through the cokernel quotient
    out.eta.assign(p.n(), {});
    for (int e = 0; e < p.n(); ++e)
        for (int j = 0; j <= k; ++j) {
            auto roff = d > 0 ? offsets(0, e, j) : std::vector<int>{0};
            QMatrix m(roff.back(), jd.sheaf.stalk[e][j]);
            for (int s = 0; s < (d > 0 ? (int)sums[0][e].size() : 0); ++s) {
                int a = sums[0][e][s];
                auto et = solve(jd.q[e][j].transpose(), bas[a][j]);
                if (!et) throw Error("augmentation does not factor through the quotient");
                QMatrix blk = et->transpose();
                for (int rr = 0; rr < blk.rows(); ++rr)
                    for (auto& [cc, v] : blk.row(rr)) m.set(roff[s] + rr, cc, v);
            }
            out.eta[e].push_back(std::move(m));
        }

    // stalk exactness at every element and degree
    for (int e = 0; e < p.n(); ++e)
        for (int j = 0; j <= k; ++j) {
            RationalComplex cx;
            cx.dims.push_back(jd.sheaf.stalk[e][j]);
            for (int i = 0; i < d; ++i) cx.dims.push_back(out.terms[i].stalk[e][j]);
            if (d > 0) cx.maps.push_back(out.eta[e][j]);
            for (int i = 0; i + 1 < d; ++i) cx.maps.push_back(out.xi[i][e][j]);
            auto h = cx.homology();
            for (int pos = 0; pos < (int)h.size(); ++pos)
                if (h[pos] != 0)
                    throw ExactnessFailure("resolution not exact at element " + p.elements[e] +
                                           ", position " + std::to_string(pos));
        }

    // eta and xi are cosheaf morphisms
    for (int ci = 0; ci < (int)p.covers.size(); ++ci) {
        auto [lo, hi] = p.covers[ci];
        for (int j = 0; j <= k; ++j) {
            if (d > 0 &&
                out.eta[lo][j] * jd.sheaf.cmap[ci][j] != out.terms[0].cmap[ci][j] * out.eta[hi][j])
                throw ExactnessFailure("augmentation is not natural");
            for (int i = 0; i + 1 < d; ++i)
                if (out.xi[i][lo][j] * out.terms[i].cmap[ci][j] !=
                    out.terms[i + 1].cmap[ci][j] * out.xi[i][hi][j])
                    throw ExactnessFailure("differential is not natural");
        }
    }
    return out;
}

SkeletonCohomologyReport skeleton_cohomology(const TDiagram& td, int q) {
    if (!is_t_characteristic(td))
        throw NotCharacteristic("skeleton cohomology requires a characteristic diagram");
    TDiagram rtd = restrict_diagram(td, q);

    SkeletonCohomologyReport out;
    out.q = q;
    out.restricted = limit_dims(cohomology_cosheaf(rtd.d));
    out.full = limit_dims(cohomology_cosheaf(td.d));

    auto at = [](const GradedTable& t, int j, int i) -> int {
        if (j < 0 || j >= (int)t.size()) return 0;
        if (i < 0 || i >= (int)t[j].size()) return 0;
        return t[j][i];
    };
    int jmax = 0;
    for (int e = 0; e < td.poset().n(); ++e) jmax = std::max(jmax, td.d.rank[e]);
    int imax = td.poset().dim;

    out.agree_below_q = true;
    for (int j = 0; j <= jmax; ++j)
        for (int i = 0; i < q; ++i)
            if (at(out.restricted, j, i) != at(out.full, j, i)) out.agree_below_q = false;

    out.vanish = true;
    for (int j = 0; j <= jmax; ++j)
        for (int i = 0; i <= imax; ++i)
            if ((i > q || i > j) && at(out.restricted, j, i) != 0) out.vanish = false;

    // Euler bookkeeping for the boundary row i = q: the alternating sum of the
    // refinement cochain dimensions equals the alternating sum of the lim's
    const FinitePoset& sk = rtd.poset();
    long long sign = (q % 2 == 0) ? -1 : 1; // (-1)^{q+1}
    out.euler_ok = true;
    for (int j = 0; j <= jmax; ++j) {
        long long s = 0;
        for (int c = 0; c < sk.n(); ++c) {
            std::vector<int> upper;
            for (int x = 0; x < sk.n(); ++x)
                if (sk.less(c, x)) upper.push_back(x);
            s += reduced_euler(sk, upper) * binom_ll(rtd.d.rank[c], j);
        }
        long long alt = 0;
        for (int i = 0; i < q; ++i) alt += (i % 2 ? -1 : 1) * at(out.full, j, i);
        long long predicted = sign * (s + alt);
        out.boundary_formula.push_back(predicted);
        if (predicted != at(out.restricted, j, q)) out.euler_ok = false;
    }
    return out;
}

BigradedBettiTable skeleton_bigraded(const TDiagram& td, int q, int t_max) {
    if (!is_t_characteristic(td))
        throw NotCharacteristic("skeleton Betti numbers require a characteristic diagram");
    if (!ef_check(td))
        throw NotEquivariantlyFormal("skeleton Betti formulas need all odd Betti numbers zero");

    TDiagram rtd = restrict_diagram(td, q);
    BigradedBettiTable tab = bigraded_betti(rtd, t_max);
    BigradedBettiTable full = bigraded_betti(td, t_max);

    const FinitePoset& sk = rtd.poset();
    auto family2 = [&](int j) -> long long {
        long long s = 0;
        for (int c = 0; c < sk.n(); ++c) {
            std::vector<int> upper;
            for (int x = 0; x < sk.n(); ++x)
                if (sk.less(c, x)) upper.push_back(x);
            s += reduced_euler(sk, upper) * binom_ll(rtd.d.rank[c], j);
        }
        return (q % 2 == 0 ? -1 : 1) * s;
    };

    for (auto& [cell, v] : tab.beta) {
        auto [i, t] = cell;
        long long expect = 0;
        if (i == 0 && t < q)
            expect = full.beta.at({0, t});
        else if (t == i + q)
            expect = family2(t);
        if ((long long)v != expect)
            throw Error("restricted Betti number off the closed form at (-" + std::to_string(i) +
                        ", " + std::to_string(2 * t) + "): " + std::to_string(v) + " vs " +
                        std::to_string(expect));
    }
    return tab;
}

std::pair<long long, long long> cp_closed_forms(int m, int q, int j) {
    if (m < 2 || q < 0 || q > m - 2 || j < 0)
        throw OutOfRange("closed forms need m >= 2, 0 <= q <= m-2, j >= 0");
    long long e1 = 0;
    for (int i = -1; i <= q; ++i) {
        long long term =
            binom_gen(m, i + 1) * binom_gen(m - 2 - i, q - i) * binom_gen(m - 2 - i, j);
        e1 += ((q - 1 - i) % 2) ? -term : term;
    }
    if (q % 2) e1 = -e1;
    long long e2 = 0;
    for (int i = 0; i <= q + 1; ++i)
        e2 += binom_gen(m - 1 - i, j - i) * binom_gen(j - i - 1, q - i + 1);
    return {e1, e2};
}

} // namespace toricoh
