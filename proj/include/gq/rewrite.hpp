#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gq/bipartite.hpp"
#include "gq/digraph.hpp"
#include "gq/setcomp.hpp"

namespace gq {

// Returns I with graph_GI(I) = G when G is transitive and incomparability
// is an equivalence relation; nullopt otherwise.
std::optional<SetComposition> identify_GI(const Digraph& G);

// Returns (I,J) with graph_BIJ(I,J) = B when the V-neighbourhoods of B are
// nested (totally ordered by inclusion); nullopt otherwise.
std::optional<SemiLengthView> identify_BIJ(const Digraph& B);

// Rewrite G, modulo the span of the cyclic inclusion-exclusion elements,
// into an integer combination of graphs of the form G_I. Each step either
// adds a missing transitivity edge (a single-reversed-edge triangle
// relation) or applies a three-term relation from a cycle with two
// co-oriented edges; both strictly increase the edge count. Deterministic:
// witnesses are chosen lexicographically. trace, when given, receives one
// line per rewrite step.
GraphVec reduce_to_GI(const Digraph& G, std::vector<std::string>* trace = nullptr);

// Bipartite analog: rewrite B into an integer combination of B_(I,J)
// graphs using 4-cycle relations; every intermediate graph stays bipartite.
GraphVec reduce_bipartite_to_BIJ(const Digraph& B, std::vector<std::string>* trace = nullptr);

// True iff the generating-function image of v vanishes. Equivalence with
// membership in the cyclic inclusion-exclusion span is what the rank
// computations below certify degree by degree.
bool kernel_check(const GraphVec& v);

enum class CycleMode {
    All,  // every simple cycle, both traversal orientations
    Short // only generators with |C+| in {1,2}
};

// Every bipartite digraph on {1..n}, each exactly once (enumerated by its
// canonical bipartition).
std::vector<Digraph> enumerate_bipartite(int n);

// Rank over Q, in the labeled-graph basis, of all cie(G,C) where G runs
// over the acyclic (or bipartite) digraphs on {1..n} and C over the
// selected cycles of G. stop_at >= 0 short-circuits at a known target;
// threads > 1 shards the generator construction (elimination is serial).
int cie_span_rank(int n, CycleMode mode, bool bipartite = false, int stop_at = -1,
                  int threads = 1);

} // namespace gq
