#include "toricoh/toric.hpp"

#include "toricoh/errors.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>

namespace toricoh {

std::vector<std::vector<int>> subsets_lex(int n, int j) {
    std::vector<std::vector<int>> out;
    if (j < 0 || j > n) return out;
    std::vector<int> cur(j);
    std::iota(cur.begin(), cur.end(), 0);
    for (;;) {
        out.push_back(cur);
        int i = j - 1;
        while (i >= 0 && cur[i] == n - j + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int l = i + 1; l < j; ++l) cur[l] = cur[l - 1] + 1;
    }
    if (j == 0) out = {{}};
    return out;
}

namespace {

Rat det_dense(std::vector<std::vector<Rat>> m) {
    int n = (int)m.size();
    Rat det = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[c][c];
            for (int j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

long long binom_ll(long long n, long long r) {
    if (r < 0 || r > n || n < 0) return 0;
    long long out = 1;
    for (long long i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
    return out;
}

} // namespace

QMatrix exterior_power(const QMatrix& m, int j) {
    auto rows = subsets_lex(m.rows(), j);
    auto cols = subsets_lex(m.cols(), j);
    QMatrix out((int)rows.size(), (int)cols.size());
    for (int r = 0; r < (int)rows.size(); ++r)
        for (int c = 0; c < (int)cols.size(); ++c) {
            std::vector<std::vector<Rat>> sub(j, std::vector<Rat>(j));
            for (int i = 0; i < j; ++i)
                for (int l = 0; l < j; ++l) sub[i][l] = m.get(rows[r][i], cols[c][l]);
            Rat d = j == 0 ? Rat(1) : det_dense(std::move(sub));
            if (d != 0) out.set(r, c, d);
        }
    return out;
}

const MonoBasis& mono_basis(int nvars, int deg) {
    static std::map<std::pair<int, int>, MonoBasis> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(nvars, deg);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    MonoBasis mb;
    std::vector<int> cur(nvars, 0);
    // lexicographic enumeration of exponent vectors summing to deg
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == nvars) {
            if (left == 0) {
                mb.index[cur] = (int)mb.list.size();
                mb.list.push_back(cur);
            }
            return;
        }
        if (pos == nvars - 1) {
            cur[pos] = left;
            rec(pos + 1, 0);
            cur[pos] = 0;
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[pos] = e;
            rec(pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    if (nvars == 0) {
        if (deg == 0) {
            mb.index[{}] = 0;
            mb.list.push_back({});
        }
    } else {
        rec(0, deg);
    }
    return cache.emplace(key, std::move(mb)).first->second;
}

std::vector<QMatrix> sym_powers(const QMatrix& m, int t_max) {
    int tv = m.rows(), sv = m.cols(); // target / source variable counts
    using Poly = std::map<std::vector<int>, Rat>;
    std::vector<QMatrix> out;
    out.push_back(QMatrix::identity(1));

    // images of source monomials as polynomials in the target variables
    std::vector<Poly> prev{{{std::vector<int>(tv, 0), Rat(1)}}};
    for (int t = 1; t <= t_max; ++t) {
        const MonoBasis& src = mono_basis(sv, t);
        const MonoBasis& srcp = mono_basis(sv, t - 1);
        const MonoBasis& tgt = mono_basis(tv, t);
        std::vector<Poly> cur(src.list.size());
        QMatrix mat((int)tgt.list.size(), (int)src.list.size());
        for (int c = 0; c < (int)src.list.size(); ++c) {
            const auto& alpha = src.list[c];
            int j = 0;
            while (alpha[j] == 0) ++j;
            auto rest = alpha;
            --rest[j];
            const Poly& base = prev[srcp.index.at(rest)];
            Poly img;
            for (auto& [mono, coef] : base)
                for (int i = 0; i < tv; ++i) {
                    Rat v = m.get(i, j);
                    if (v == 0) continue;
                    auto mm = mono;
                    ++mm[i];
                    img[mm] += coef * v;
                }
            for (auto& [mono, coef] : img)
                if (coef != 0) mat.set(tgt.index.at(mono), c, coef);
            cur[c] = std::move(img);
        }
        out.push_back(std::move(mat));
        prev = std::move(cur);
    }
    return out;
}

QMatrix sym_mult_linear(const std::vector<Rat>& coeffs, int t) {
    int n = (int)coeffs.size();
    const MonoBasis& src = mono_basis(n, t);
    const MonoBasis& tgt = mono_basis(n, t + 1);
    QMatrix out((int)tgt.list.size(), (int)src.list.size());
    for (int c = 0; c < (int)src.list.size(); ++c)
        for (int i = 0; i < n; ++i) {
            if (coeffs[i] == 0) continue;
            auto mono = src.list[c];
            ++mono[i];
            out.add(tgt.index.at(mono), c, coeffs[i]);
        }
    return out;
}

void TorusDiagram::check_functorial() const {
    const FinitePoset& p = poset();
    for (int a = 0; a < p.n(); ++a)
        for (int b = 0; b < p.n(); ++b) {
            if (!p.less(a, b) || p.rank[b] != p.rank[a] + 2) continue;
            IMat ref;
            bool first = true;
            for (int x : p.up[a]) {
                if (!p.less(x, b)) continue;
                IMat via = arrow[p.cover_index(x, b)] * arrow[p.cover_index(a, x)];
                if (first) {
                    ref = via;
                    first = false;
                } else if (!(via == ref)) {
                    throw Error("torus diagram not functorial at " + p.elements[a]);
                }
            }
        }
}

void TDiagram::check_naturality() const {
    const FinitePoset& p = poset();
    for (int e = 0; e < p.n(); ++e) {
        if (aug[e].rows != d.rank[e] || aug[e].cols != k)
            throw SchemaError("augmentation shape mismatch at " + p.elements[e]);
        IMat s, u, v;
        smith(aug[e], s, u, v);
        int r = 0;
        for (int t = 0; t < std::min(s.rows, s.cols); ++t)
            if (s.at(t, t) != 0) {
                if (abs(s.at(t, t)) != 1)
                    throw NotEpimorphism("augmentation at " + p.elements[e] +
                                         " has non-saturated image");
                ++r;
            }
        if (r != d.rank[e])
            throw NotEpimorphism("augmentation at " + p.elements[e] + " is not surjective");
    }
    for (std::size_t c = 0; c < p.covers.size(); ++c) {
        auto [lo, hi] = p.covers[c];
        if (!(d.arrow[c] * aug[lo] == aug[hi]))
            throw Error("augmentation not natural on cover " + p.elements[lo] + " < " +
                        p.elements[hi]);
    }
}

StabilizerDiagram stabilizer_diagram(const TDiagram& td) {
    td.check_naturality();
    StabilizerDiagram sd;
    sd.base = td.d.base;
    sd.k = td.k;
    const FinitePoset& p = td.poset();
    for (int e = 0; e < p.n(); ++e) sd.stab.push_back(integer_kernel(td.aug[e]));
    for (auto& [lo, hi] : p.covers) {
        if (!solve(sd.stab[hi].to_q(), sd.stab[lo].to_q()))
            throw Error("stabilizer inclusion fails on cover " + p.elements[lo] + " < " +
                        p.elements[hi]);
    }
    return sd;
}

bool is_reduced(const TDiagram& td) {
    StabilizerDiagram sd = stabilizer_diagram(td);
    const FinitePoset& p = td.poset();
    for (int a = 0; a < p.n(); ++a)
        for (int b = 0; b < p.n(); ++b)
            if (p.less(a, b) && sd.stab[a].cols == sd.stab[b].cols) return false;
    return true;
}

bool is_strongly_reduced(const TDiagram& td) {
    StabilizerDiagram sd = stabilizer_diagram(td);
    const FinitePoset& p = td.poset();
    for (int e = 0; e < p.n(); ++e)
        if (sd.stab[e].cols != p.rank[e]) return false;
    return true;
}

GradedCosheaf cohomology_cosheaf(const TorusDiagram& d) {
    const FinitePoset& p = d.poset();
    GradedCosheaf a;
    a.base = d.base;
    a.max_degree = 0;
    for (int e = 0; e < p.n(); ++e) a.max_degree = std::max(a.max_degree, d.rank[e]);
    a.stalk.assign(p.n(), std::vector<int>(a.max_degree + 1, 0));
    for (int e = 0; e < p.n(); ++e)
        for (int j = 0; j <= a.max_degree; ++j)
            a.stalk[e][j] = (int)binom_ll(d.rank[e], j);
    for (std::size_t c = 0; c < p.covers.size(); ++c) {
        QMatrix dual = d.arrow[c].transpose().to_q(); // H^1(upper) -> H^1(lower)
        std::vector<QMatrix> per;
        for (int j = 0; j <= a.max_degree; ++j) per.push_back(exterior_power(dual, j));
        a.cmap.push_back(std::move(per));
    }
    a.check_functorial();
    return a;
}

QMatrix ClassifyingCosheaf::action(int e, int g, int t) const {
    int r = stab_basis[e].cols;
    std::vector<Rat> coeffs(r);
    for (int i = 0; i < r; ++i) coeffs[i] = Rat(stab_basis[e].at(g, i));
    return sym_mult_linear(coeffs, t);
}

ClassifyingCosheaf classifying_cosheaf(const StabilizerDiagram& s, int t_max) {
    if (t_max < 0) throw OutOfRange("t_max must be >= 0");
    ClassifyingCosheaf cc;
    cc.k = s.k;
    cc.t_max = t_max;
    cc.stab_basis = s.stab;
    const FinitePoset& p = *s.base;
    GradedCosheaf& a = cc.sheaf;
    a.base = s.base;
    a.max_degree = t_max; // internal degree t stands for cohomological degree 2t
    a.stalk.assign(p.n(), std::vector<int>(t_max + 1, 0));
    for (int e = 0; e < p.n(); ++e) {
        int r = s.stab[e].cols;
        for (int t = 0; t <= t_max; ++t)
            a.stalk[e][t] = t == 0 ? 1 : (int)binom_ll(r + t - 1, t);
    }
    for (std::size_t c = 0; c < p.covers.size(); ++c) {
        auto [lo, hi] = p.covers[c];
        // stab(lo) = stab(hi) * n;   dual restriction on variables is nᵀ
        auto n = solve(s.stab[hi].to_q(), s.stab[lo].to_q());
        if (!n) throw Error("stabilizer inclusion fails on a cover");
        a.cmap.push_back(sym_powers(n->transpose(), t_max));
    }
    a.check_functorial();
    return cc;
}

Fan make_fan(int ambient, std::vector<std::vector<Int>> rays,
             std::vector<std::vector<int>> cones) {
    Fan f;
    f.ambient = ambient;
    for (auto& r : rays) {
        if ((int)r.size() != ambient) throw SchemaError("ray dimension mismatch");
        Int g = 0;
        for (auto& x : r) g = gcd(g, x);
        if (g != 1) throw RaysNotPrimitive("ray is not primitive");
    }
    f.rays = std::move(rays);
    std::set<std::vector<int>> seen;
    for (auto& c : cones) {
        std::sort(c.begin(), c.end());
        for (int i : c)
            if (i < 0 || i >= (int)f.rays.size()) throw SchemaError("cone ray index out of range");
        if (std::adjacent_find(c.begin(), c.end()) != c.end())
            throw SchemaError("repeated ray in cone");
        // close under faces (all subsets, since cones here are simplicial)
        int m = (int)c.size();
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<int> face;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) face.push_back(c[i]);
            seen.insert(face);
        }
    }
    seen.insert({});
    f.cones.assign(seen.begin(), seen.end());
    std::sort(f.cones.begin(), f.cones.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    f.smooth = true;
    for (auto& c : f.cones) {
        IMat m(ambient, (int)c.size());
        for (int j = 0; j < (int)c.size(); ++j)
            for (int i = 0; i < ambient; ++i) m.at(i, j) = f.rays[c[j]][i];
        if (irank(m) != (int)c.size())
            throw NonSalient("cone with dependent rays (non-simplicial or non-salient)");
        if (!is_saturated_basis(m)) f.smooth = false;
    }

    // completeness: every maximal cone is full-dimensional and every
    // (d-1)-cone bounds exactly two of them
    f.complete = false;
    std::vector<std::vector<int>> maxcones, walls;
    for (auto& c : f.cones) {
        if ((int)c.size() == ambient) maxcones.push_back(c);
        if ((int)c.size() == ambient - 1) walls.push_back(c);
    }
    if (!maxcones.empty()) {
        f.complete = true;
        std::set<std::vector<int>> maxset(maxcones.begin(), maxcones.end());
        for (auto& c : f.cones)
            if ((int)c.size() > 0 && (int)c.size() < ambient) {
                bool in_max = false;
                for (auto& mc : maxcones)
                    if (std::includes(mc.begin(), mc.end(), c.begin(), c.end())) in_max = true;
                if (!in_max) f.complete = false;
            }
        for (auto& w : walls) {
            int count = 0;
            for (auto& mc : maxcones)
                if (std::includes(mc.begin(), mc.end(), w.begin(), w.end())) ++count;
            if (count != 2) f.complete = false;
        }
    }
    return f;
}

namespace {

std::string cone_name(const std::vector<int>& c) {
    if (c.empty()) return "o";
    std::string s = "c";
    for (int i = 0; i < (int)c.size(); ++i) {
        if (i) s += "_";
        s += std::to_string(c[i]);
    }
    return s;
}

} // namespace

TDiagram fan_to_diagram(const Fan& f) {
    int d = f.ambient;
    std::vector<std::string> names;
    std::map<std::vector<int>, int> idx;
    for (auto& c : f.cones) {
        idx[c] = (int)names.size();
        names.push_back(cone_name(c));
    }
    std::vector<std::pair<int, int>> covers;
    for (auto& c : f.cones)
        for (auto& cc : f.cones)
            if (cc.size() + 1 == c.size() &&
                std::includes(c.begin(), c.end(), cc.begin(), cc.end()))
                covers.emplace_back(idx[cc], idx[c]);

    auto base = std::make_shared<FinitePoset>(from_cover_indices(names, covers));

    TDiagram td;
    td.k = d;
    td.d.base = base;
    td.d.rank.resize(base->n());
    td.aug.resize(base->n());
    for (auto& c : f.cones) {
        IMat m(d, (int)c.size());
        for (int j = 0; j < (int)c.size(); ++j)
            for (int i = 0; i < d; ++i) m.at(i, j) = f.rays[c[j]][i];
        IMat aug = saturation_quotient(m);
        td.aug[idx[c]] = aug;
        td.d.rank[idx[c]] = aug.rows;
    }
    td.d.arrow.resize(base->covers.size());
    for (std::size_t c = 0; c < base->covers.size(); ++c) {
        auto [lo, hi] = base->covers[c];
        // arrow * aug(lo) = aug(hi); aug(lo)ᵀ has independent columns
        auto x = solve(td.aug[lo].transpose().to_q(), td.aug[hi].transpose().to_q());
        if (!x) throw Error("fan arrow construction failed");
        td.d.arrow[c] = to_integer(x->transpose());
    }
    td.d.check_functorial();
    td.check_naturality();
    return td;
}

bool is_t_characteristic(const TDiagram& td) {
    const FinitePoset& p = td.poset();
    if (!is_simplicial_poset(p)) return false;
    StabilizerDiagram sd = stabilizer_diagram(td);
    std::vector<int> atoms = p.elements_of_rank(1);

    // the atoms' stabilizers must together span Q^k
    {
        int total = 0;
        for (int a : atoms) total += sd.stab[a].cols;
        IMat all(td.k, total);
        int col = 0;
        for (int a : atoms)
            for (int j = 0; j < sd.stab[a].cols; ++j, ++col)
                for (int i = 0; i < td.k; ++i) all.at(i, col) = sd.stab[a].at(i, j);
        if (irank(all) != td.k) return false;
    }

    for (int e = 0; e < p.n(); ++e) {
        std::vector<int> below;
        for (int a : atoms)
            if (p.leq(a, e)) below.push_back(a);
        int total = 0;
        for (int a : below) total += sd.stab[a].cols;
        IMat cat(td.k, total);
        int col = 0;
        for (int a : below)
            for (int j = 0; j < sd.stab[a].cols; ++j, ++col)
                for (int i = 0; i < td.k; ++i) cat.at(i, col) = sd.stab[a].at(i, j);
        if (irank(cat) != total) return false;            // not a direct sum
        if (total != sd.stab[e].cols) return false;       // wrong rank
        auto x = solve(cat.to_q(), sd.stab[e].to_q());    // integral span test
        if (!x) return false;
        for (int i = 0; i < x->rows(); ++i)
            for (auto& [j, v] : x->row(i))
                if (denominator(v) != 1) return false;    // non-saturated sum
    }
    return true;
}

Fan cp_fan(int m) {
    if (m < 2) throw OutOfRange("cp_fan needs m >= 2");
    int d = m - 1;
    std::vector<std::vector<Int>> rays;
    for (int i = 0; i < d; ++i) {
        std::vector<Int> r(d, 0);
        r[i] = 1;
        rays.push_back(r);
    }
    rays.push_back(std::vector<Int>(d, -1));
    std::vector<std::vector<int>> cones;
    // all proper subsets of the m rays
    for (int mask = 0; mask < (1 << m); ++mask) {
        int pc = __builtin_popcount((unsigned)mask);
        if (pc >= m) continue;
        std::vector<int> c;
        for (int i = 0; i < m; ++i)
            if (mask & (1 << i)) c.push_back(i);
        cones.push_back(std::move(c));
    }
    return make_fan(d, std::move(rays), std::move(cones));
}

} // namespace toricoh
