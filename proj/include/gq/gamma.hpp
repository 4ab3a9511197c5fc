#pragma once

#include <map>
#include <vector>

#include "gq/digraph.hpp"
#include "gq/setcomp.hpp"
#include "gq/wqsym.hpp"

namespace gq {

// Generating function of the non-decreasing vertex labelings of G, as an
// M-basis vector: M_I appears (with coefficient 1) exactly when every edge
// (u,v) has block_index(u) <= block_index(v) in I.
WqsymVec gamma_nc(const Digraph& G);
WqsymVec gamma_nc(const GraphVec& v);

// Commutative image; invariant under relabeling.
QsymVec gamma_unlabeled(const Digraph& G);
QsymVec gamma_unlabeled(const GraphVec& v);

// Canonical graph family: edges from every earlier block to every later one.
Digraph graph_GI(const SetComposition& I);

// The descent-starred permutations indexing the F-expansion of
// gamma_nc(graph_GI(I)): concatenations of per-block permutation words,
// with only within-block descents starred.
std::vector<DStarPerm> mp_set(const SetComposition& I);

// Sum of F_(sigma,D) over mp_set(I).
WqsymVec gamma_GI_in_F(const SetComposition& I);

// Direct truncated enumeration of G non-decreasing functions into {1..m};
// independent oracle for gamma_nc.
WordMap gamma_nc_words(const Digraph& G, int m);

// Two-alphabet refinement of the commutative image for bipartite graphs:
// terms are (p-exponent vector, q-exponent vector) pairs over m variables.
struct BiPolynomial {
    int truncation = 0;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Int> terms;

    bool operator==(const BiPolynomial&) const = default;
    BiPolynomial& operator+=(const BiPolynomial& o);
    Rat eval(const std::vector<Rat>& p, const std::vector<Rat>& q) const;
};

// Canonical bipartition of a bipartite digraph: W = vertices with an
// incoming edge, V = the rest (isolated vertices default to V). Throws if
// some vertex has both in- and out-edges.
struct Bipartition {
    std::vector<int> V, W;
};
Bipartition canonical_bipartition(const Digraph& B);

BiPolynomial delta_two_alphabet(const Digraph& B, int m);
BiPolynomial delta_two_alphabet(const GraphVec& v, int m);

// Numeric evaluation of delta_two_alphabet without materializing the
// polynomial (used by the larger sweeps).
Rat delta_eval(const Digraph& B, const std::vector<Rat>& p, const std::vector<Rat>& q);
Rat delta_eval(const GraphVec& v, const std::vector<Rat>& p, const std::vector<Rat>& q);

} // namespace gq
