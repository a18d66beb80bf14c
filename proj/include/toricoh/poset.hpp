#pragma once

#include "toricoh/qmatrix.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace toricoh {

/*
 * Finite graded poset.  Built from cover relations only; ranks are always
 * recomputed (longest chain from a minimal element) and gradedness is
 * enforced.  leq_ holds the full transitive closure, so comparisons are O(1).
 */
struct FinitePoset {
    std::vector<std::string> elements;
    std::vector<std::pair<int, int>> covers; // (lower, upper) element indices
    std::vector<int> rank;
    int dim = -1; // max rank; -1 for the empty poset

    std::vector<std::vector<int>> up, down; // cover adjacency per element
    std::vector<std::vector<char>> leq_;
    std::map<std::pair<int, int>, int> cover_index_;

    int n() const { return (int)elements.size(); }
    bool leq(int a, int b) const { return leq_[a][b] != 0; }
    bool less(int a, int b) const { return a != b && leq_[a][b] != 0; }
    int index_of(const std::string& id) const;
    int cover_index(int lower, int upper) const;
    std::vector<int> elements_of_rank(int r) const;
    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;
};

FinitePoset from_cover_relations(const std::vector<std::string>& elements,
                                 const std::vector<std::pair<std::string, std::string>>& covers);
FinitePoset from_cover_indices(std::vector<std::string> elements,
                               std::vector<std::pair<int, int>> covers);

FinitePoset opposite(const FinitePoset& p);
FinitePoset skeleton(const FinitePoset& p, int q);
FinitePoset coskeleton(const FinitePoset& p, int q);
// induced subposet on an order-convex subset (covers restrict verbatim)
FinitePoset induced_subposet(const FinitePoset& p, const std::vector<int>& keep);

/*
 * All strictly increasing chains, grouped by dimension (= length-1);
 * each chain is a vector of element indices, ascending in the poset order.
 */
struct OrderComplex {
    std::vector<std::vector<std::vector<int>>> simplices;
    std::vector<std::map<std::vector<int>, int>> index;
    int dim() const { return (int)simplices.size() - 1; }
    std::size_t total() const;
};
OrderComplex order_complex(const FinitePoset& p);

struct IncidenceAssignment {
    std::vector<int> sign; // per cover index, ±1
};
IncidenceAssignment incidence_assignment(const FinitePoset& p);

struct FHVector {
    std::vector<long long> f; // f_{-1} .. f_{d-1} = rank counts
    std::vector<long long> h; // h_0 .. h_d
};
FHVector f_h_vectors(const FinitePoset& p);

// dims of the local cohomology stalk at c, indexed q = 0..dim(p)
std::vector<int> local_cohomology_stalk(const FinitePoset& p, int c);

struct ManifoldReport {
    bool ok = false;
    std::vector<std::pair<int, int>> failures; // (element, degree) with wrong dim
};
ManifoldReport is_homology_manifold(const FinitePoset& p);

bool is_simplicial_poset(const FinitePoset& p);

// reduced cohomology dims of an order complex, indexed q = -1..dim  (entry 0
// of the returned vector is degree -1)
std::vector<int> reduced_cohomology(const OrderComplex& oc);

// reduced Euler characteristic of ord of the induced subposet on `keep`
long long reduced_euler(const FinitePoset& p, const std::vector<int>& keep);

} // namespace toricoh
