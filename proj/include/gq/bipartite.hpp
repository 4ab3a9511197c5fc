#pragma once

#include <optional>
#include <vector>

#include "gq/digraph.hpp"
#include "gq/setcomp.hpp"
#include "gq/wqsym.hpp"

namespace gq {

// Canonical bipartite family: x in I_h points to y in J_k whenever h <= k.
Digraph graph_BIJ(const SemiLengthView& v, int n);

// Complete bipartite graph with the blocks alternately oriented:
// edges I_m x J_{m'} for m <= m' and J_m x I_{m'} for m < m'.
// Generally not bipartite as a directed graph.
Digraph graph_HIJ(const SemiLengthView& v, int n);

// K_{V,W} with each edge in D reversed; may contain directed cycles.
Digraph reverse_edges(const std::vector<int>& V, const std::vector<int>& W,
                      const std::vector<Edge>& D, int n);

// Greedy peeling from the acyclicity characterization of K^D: returns the
// unique (I,J) with K^D = H_(I,J), or nullopt when K^D has a directed
// cycle. Requires every vertex of W to have at least one incident edge
// outside D.
std::optional<SemiLengthView> decompose_KD(const std::vector<int>& V, const std::vector<int>& W,
                                           const std::vector<Edge>& D);

// Multiplicity-free N-basis expansion of gamma_nc(B) for bipartite B,
// via enumeration of reversal sets D over the non-edges. threads > 1
// shards the enumeration (identical output).
WqsymVec n_expansion(const Digraph& B, int threads = 1);

// M-basis expansion of N_(I,J).
WqsymVec N_in_M(const SemiLengthView& v, int n);

// Strict lexicographic containment comparison on (I_1, complement of J_1,
// I_2, ...): true = a strictly before b, false = b strictly before a,
// nullopt = incomparable or equal. Both views must share block unions V,W.
std::optional<bool> biij_containment_less(const SemiLengthView& a, const SemiLengthView& b);

// Deterministic linear extension of the containment order (Kahn's
// algorithm, canonical-string tie-break). Returns indices into the input.
std::vector<int> biij_linear_extension(const std::vector<SemiLengthView>& views);

} // namespace gq
