#pragma once

#include "toricoh/cosheaf.hpp"
#include "toricoh/lattice.hpp"
#include "toricoh/poset.hpp"

#include <memory>
#include <string>
#include <vector>

namespace toricoh {

// ---- multilinear helpers -------------------------------------------------

// j-subsets of {0..n-1} in lexicographic order
std::vector<std::vector<int>> subsets_lex(int n, int j);

// Λ^j of a linear map, on the lexicographic wedge bases (entries are minors)
QMatrix exterior_power(const QMatrix& m, int j);

// monomial basis of degree-d polynomials in n variables, lexicographic by
// exponent vector
struct MonoBasis {
    std::vector<std::vector<int>> list;
    std::map<std::vector<int>, int> index;
};
const MonoBasis& mono_basis(int nvars, int deg); // cached

// Sym^t of a linear map (target vars x source vars) for t = 0..t_max
std::vector<QMatrix> sym_powers(const QMatrix& m, int t_max);

// multiplication Sym^t -> Sym^{t+1} by the linear form with the given
// coefficient vector
QMatrix sym_mult_linear(const std::vector<Rat>& coeffs, int t);

// ---- diagrams ------------------------------------------------------------

/*
 * Diagram of tori over C, covariant toward larger elements: a lattice rank
 * per element and an integer matrix per cover sending D(lower) -> D(upper).
 */
struct TorusDiagram {
    std::shared_ptr<const FinitePoset> base;
    std::vector<int> rank;  // d(c)
    std::vector<IMat> arrow; // per cover: d(upper) x d(lower)

    const FinitePoset& poset() const { return *base; }
    void check_functorial() const;
};

struct TDiagram {
    TorusDiagram d;
    int k = 0;
    std::vector<IMat> aug; // per element: d(c) x k, surjective with saturated image

    const FinitePoset& poset() const { return *d.base; }
    void check_naturality() const;
};

struct StabilizerDiagram {
    std::shared_ptr<const FinitePoset> base;
    int k = 0;
    std::vector<IMat> stab; // per element: k x rank(stab), saturated basis
};

struct Fan {
    int ambient = 0;
    std::vector<std::vector<Int>> rays;
    std::vector<std::vector<int>> cones; // sorted ray-index lists, incl. {}
    bool smooth = false;
    bool complete = false;
};
// validates rays/cones, closes under faces, computes flags
Fan make_fan(int ambient, std::vector<std::vector<Int>> rays,
             std::vector<std::vector<int>> cones);

StabilizerDiagram stabilizer_diagram(const TDiagram& td);
bool is_reduced(const TDiagram& td);
bool is_strongly_reduced(const TDiagram& td);

GradedCosheaf cohomology_cosheaf(const TorusDiagram& d);

/*
 * The polynomial cosheaf H^*(BS) truncated at degree 2*t_max, together with
 * the degree-2 generator actions needed to see it as a module over the
 * ambient polynomial ring on k generators.
 */
struct ClassifyingCosheaf {
    GradedCosheaf sheaf; // internal degree = polynomial degree t (pieces 2t)
    std::vector<IMat> stab_basis;
    int k = 0, t_max = 0;
    // multiplication by (generator g restricted to the stalk at e): Sym^t -> Sym^{t+1}
    QMatrix action(int e, int g, int t) const;
};
ClassifyingCosheaf classifying_cosheaf(const StabilizerDiagram& s, int t_max);

TDiagram fan_to_diagram(const Fan& f);

bool is_t_characteristic(const TDiagram& td);

// the complete smooth fan of CP^{m-1} (rays e_1..e_{m-1}, -Σe_i)
Fan cp_fan(int m);

} // namespace toricoh
