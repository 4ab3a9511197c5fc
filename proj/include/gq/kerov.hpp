#pragma once

#include <map>
#include <string>
#include <vector>

#include "gq/digraph.hpp"
#include "gq/rational.hpp"

namespace gq {

struct Partition {
    std::vector<int> parts; // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;   // sum of parts
    int length() const { return static_cast<int>(parts.size()); }
    std::string str() const; // "3,2,1" (empty partition -> "")
    static Partition parse(const std::string& s);

    auto operator<=>(const Partition&) const = default;
};

// h assigns a positive integer to every V-vertex of the canonical
// bipartition; sum of values = |W|.
struct DecoratedGraph {
    Digraph B;
    std::map<int, int> h;
};

// Every connected component satisfies the strict neighbourhood bound
// |N(U)| > sum h(U) for nonempty proper U of its V-part, and carries
// matching totals sum h = |W| (checked per component).
bool is_expander(const DecoratedGraph& g);

// Forest criterion: one V-vertex per component, decorated by its degree.
// Throws if the undirected version of B is not a forest.
bool tree_expander_characterization(const DecoratedGraph& g);

// Signed count of expander decorations of type nu, extended linearly:
// a graph with c components contributes (-1)^c times the number of h with
// sorted value multiset nu making it an expander.
Rat I_nu(const GraphVec& v, const Partition& nu);

// One-line permutation utilities (1-based words: perm[i-1] = image of i).
using Perm = std::vector<int>;
std::vector<std::vector<int>> cycles_of(const Perm& p); // each cycle starts at its min; sorted by min
int num_cycles(const Perm& p);
Perm compose(const Perm& a, const Perm& b); // (a*b)(i) = a(b(i))
Perm inverse(const Perm& p);
Perm canonical_of_type(const Partition& mu); // consecutive-block cycles

// Cycle-incidence bipartite graph: V = cycles of sigma, W = cycles of tau,
// one edge when the cycles share an element. Vertices labeled by the
// cycle-minimum order, V first.
Digraph graph_of_pair(const Perm& sigma, const Perm& tau);

// Signed sums of B(sigma,tau) over factorizations sigma*tau = pi of the
// normalized character (pi of cycle type mu) and of the free cumulant
// R_{k+1} (pi = long cycle, minimal-genus factorizations only; all support
// graphs are forests, asserted).
GraphVec G_Ch(const Partition& mu, int cap = 6);
GraphVec G_R(int k_plus_1, int cap = 6);

// Coefficient of prod_i R_{nu_i + 1} in the Kerov polynomial K_mu:
// (-1)^{length(nu)} I_nu(G_Ch(mu)).
Int kerov_coeff(const Partition& mu, const Partition& nu, int cap = 6);

// Disjoint union, extended bilinearly (the graph-algebra product).
GraphVec graphvec_product(const GraphVec& a, const GraphVec& b);

} // namespace gq
