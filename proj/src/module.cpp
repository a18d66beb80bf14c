#include "toricoh/module.hpp"

#include "toricoh/errors.hpp"

#include <algorithm>

namespace toricoh {

namespace {

long long binom_ll(long long n, long long r) {
    if (r < 0 || r > n || n < 0) return 0;
    long long out = 1;
    for (long long i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
    return out;
}

} // namespace

void GradedModulePresentation::check_commuting() const {
    for (int g = 0; g < k; ++g)
        for (int h = g + 1; h < k; ++h)
            for (int t = 0; t + 2 <= t_max; ++t)
                if (action[g][t + 1] * action[h][t] != action[h][t + 1] * action[g][t])
                    throw Error("generator actions do not commute");
}

int koszul_tor(const GradedModulePresentation& m, int i, int t) {
    if (i < 0 || i > m.k) throw OutOfRange("koszul_tor: homological position out of range");
    auto piece_dim = [&](int s) -> int {
        if (s < 0) return 0;
        if (s > m.t_max)
            throw TruncationExceeded("module piece of degree " + std::to_string(2 * s) +
                                     " lies beyond the truncation bound");
        return m.piece[s];
    };

    // complex positions i+1 -> i -> i-1 suffice for the homology at i
    auto term_dim = [&](int p) -> int {
        if (p < 0 || p > m.k) return 0;
        return (int)binom_ll(m.k, p) * piece_dim(t - p);
    };
    auto differential = [&](int p) -> QMatrix { // position p -> p-1
        auto rowsets = subsets_lex(m.k, p - 1);
        auto colsets = subsets_lex(m.k, p);
        std::map<std::vector<int>, int> rowidx;
        for (int r = 0; r < (int)rowsets.size(); ++r) rowidx[rowsets[r]] = r;
        int md = piece_dim(t - p);
        int mtgt = piece_dim(t - p + 1);
        QMatrix out((int)rowsets.size() * mtgt, (int)colsets.size() * md);
        for (int c = 0; c < (int)colsets.size(); ++c) {
            const auto& s = colsets[c];
            for (int l = 0; l < p; ++l) {
                auto face = s;
                face.erase(face.begin() + l);
                int r = rowidx.at(face);
                const QMatrix& act = m.action[s[l]][t - p];
                int sign = l % 2 ? -1 : 1;
                for (int rr = 0; rr < act.rows(); ++rr)
                    for (auto& [cc, v] : act.row(rr))
                        out.add(r * mtgt + rr, c * md + cc, sign > 0 ? v : -v);
            }
        }
        return out;
    };

    int dim_i = term_dim(i);
    int rank_in = 0, rank_out = 0;
    if (i + 1 <= m.k && term_dim(i + 1) > 0 && dim_i > 0) rank_in = rank(differential(i + 1));
    if (i >= 1 && dim_i > 0 && term_dim(i - 1) > 0) rank_out = rank(differential(i));
    return dim_i - rank_in - rank_out;
}

GradedModulePresentation trivial_module(int k, int t_max) {
    GradedModulePresentation m;
    m.k = k;
    m.t_max = t_max;
    m.piece.assign(t_max + 1, 0);
    m.piece[0] = 1;
    m.action.assign(k, {});
    for (int g = 0; g < k; ++g)
        for (int t = 0; t < t_max; ++t)
            m.action[g].push_back(QMatrix(m.piece[t + 1], m.piece[t]));
    return m;
}

GradedModulePresentation free_module(int k, int t_max) {
    return stalk_module(IMat::identity(k), k, t_max);
}

GradedModulePresentation stalk_module(const IMat& stab_basis, int k, int t_max) {
    if (stab_basis.rows != k) throw SchemaError("stalk_module: basis shape mismatch");
    int r = stab_basis.cols;
    GradedModulePresentation m;
    m.k = k;
    m.t_max = t_max;
    for (int t = 0; t <= t_max; ++t) m.piece.push_back(t == 0 ? 1 : (int)binom_ll(r + t - 1, t));
    m.action.assign(k, {});
    for (int g = 0; g < k; ++g) {
        std::vector<Rat> coeffs(r);
        for (int i = 0; i < r; ++i) coeffs[i] = Rat(stab_basis.at(g, i));
        for (int t = 0; t < t_max; ++t) m.action[g].push_back(sym_mult_linear(coeffs, t));
    }
    m.check_commuting();
    return m;
}

GradedModulePresentation limit_presentation(const ClassifyingCosheaf& cc) {
    GradedModulePresentation m;
    m.k = cc.k;
    m.t_max = cc.t_max;

    std::vector<int> elems;
    std::vector<QMatrix> bases;
    for (int t = 0; t <= cc.t_max; ++t) {
        bases.push_back(limit_sections(cc.sheaf, t, t == 0 ? &elems : nullptr));
        m.piece.push_back(bases.back().cols());
    }
    m.action.assign(cc.k, {});
    for (int g = 0; g < cc.k; ++g) {
        for (int t = 0; t < cc.t_max; ++t) {
            // block-diagonal action over the section blocks, then rewrite in
            // the kernel bases: bases[t+1] * x = act * bases[t]
            int rows = 0, cols = 0;
            std::vector<int> roff, coff;
            for (int e : elems) {
                roff.push_back(rows);
                coff.push_back(cols);
                rows += cc.sheaf.stalk_dim(e, t + 1);
                cols += cc.sheaf.stalk_dim(e, t);
            }
            QMatrix act(rows, cols);
            for (int b = 0; b < (int)elems.size(); ++b) {
                QMatrix blk = cc.action(elems[b], g, t);
                for (int rr = 0; rr < blk.rows(); ++rr)
                    for (auto& [ccol, v] : blk.row(rr)) act.add(roff[b] + rr, coff[b] + ccol, v);
            }
            auto x = solve(bases[t + 1], act * bases[t]);
            if (!x) throw Error("generator action does not preserve the section space");
            m.action[g].push_back(*x);
        }
    }
    m.check_commuting();
    return m;
}

} // namespace toricoh
