#pragma once

#include "toricoh/complex.hpp"
#include "toricoh/lattice.hpp"
#include "toricoh/poset.hpp"
#include "toricoh/qmatrix.hpp"

#include <memory>
#include <tuple>
#include <vector>

namespace toricoh {

/*
 * Cellular cosheaf of graded Q-vector spaces on a finite poset C: a stalk per
 * element with a chosen basis per internal degree, and a degree-preserving
 * matrix per cover mapping stalk(upper) -> stalk(lower) (values flow toward
 * smaller elements).  Sheaves on C^op are the same data read backwards; all
 * derived limits below are taken over C^op.
 */
struct GradedCosheaf {
    std::shared_ptr<const FinitePoset> base;
    int max_degree = 0;
    // stalk[e][t] = dim of degree-t piece at element e; size max_degree+1 each
    std::vector<std::vector<int>> stalk;
    // cmap[cover index][t] : stalk(upper, t) -> stalk(lower, t)
    std::vector<std::vector<QMatrix>> cmap;

    const FinitePoset& poset() const { return *base; }
    int stalk_dim(int e, int t) const { return stalk[e][t]; }
    int stalk_total(int e) const;

    // composite map stalk(b, t) -> stalk(a, t) for a <= b; identity on a == b
    QMatrix map_between(int a, int b, int t) const;

    // throws NotAComplex-style error if two cover paths around a diamond
    // disagree (checked on every length-2 interval, every degree)
    void check_functorial() const;

private:
    mutable std::map<std::tuple<int, int, int>, QMatrix> cache_;
};

GradedCosheaf constant_cosheaf(std::shared_ptr<const FinitePoset> p,
                               const std::vector<int>& graded_dims);

// [t][i] tables of dimensions
using GradedTable = std::vector<std::vector<int>>;

// homology of C_i^cw(C, B) = ⊕_{rk c = i} B(c) with signed cover differentials;
// result[t][i] = dim H^cw_i in internal degree t
GradedTable cellular_homology(const FinitePoset& c, const IncidenceAssignment& inc,
                              const GradedCosheaf& b);

enum class LimitEngine { Auto, Refinement, Resolution };

// result[t][i] = dim lim^i A in internal degree t (sheaf cohomology over C^op)
GradedTable limit_dims(const GradedCosheaf& a, LimitEngine engine = LimitEngine::Auto);

// the refinement cochain complex on ord C in internal degree t (exposed for
// tests and Euler bookkeeping)
RationalComplex refinement_complex(const GradedCosheaf& a, int t);

// lim^0 with an explicit basis: kernel inside ⊕_{c maximal} stalk(c, t);
// `elems` receives the maximal elements indexing the blocks
QMatrix limit_sections(const GradedCosheaf& a, int t, std::vector<int>* elems = nullptr);

struct DualityReport {
    bool skipped = false; // base is not a homology manifold
    bool ok = false;
    GradedTable lim;      // [t][i]
    GradedTable cellular; // [t][i]
};
DualityReport zmss_duality_check(const FinitePoset& c, const GradedCosheaf& a);

/*
 * Projective resolution of the constant functor on C^op by representable
 * functors, used as the workhorse lim engine when the order complex is too
 * big.  Generators live at elements of C; a level-i generator holds its
 * boundary as a sparse vector over level-(i-1) generators.
 */
struct PosetResolution {
    struct Gen {
        int elem;
        std::map<int, Rat> val; // global indices into the previous level
    };
    std::vector<std::vector<Gen>> levels;
};
PosetResolution build_resolution(const FinitePoset& c);

} // namespace toricoh
