#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gq/rational.hpp"

namespace gq {

using Edge = std::pair<int, int>;

// Labeled digraph on vertex set {1..n}. Always acyclic after construction
// unless allow_cycles is requested (needed for K^D graphs, which may
// legitimately contain directed cycles).
class Digraph {
public:
    Digraph() : n_(0) {}
    Digraph(int n, std::vector<Edge> edges, bool allow_cycles = false);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; } // sorted lexicographically
    bool has_edge(int u, int v) const;
    bool has_directed_cycle() const;

    Digraph with_edge(int u, int v) const;
    Digraph without_edges(const std::vector<Edge>& del) const;
    Digraph relabeled(const std::vector<int>& sigma) const; // sigma[v] = new label, 1-based

    std::string str() const; // "n:u>v,u>v,..."
    // Text file format: first line n, then one "u v" line per edge.
    std::string file_format() const;
    static Digraph parse_file(const std::string& text);

    auto operator<=>(const Digraph&) const = default;

private:
    int n_;
    std::vector<Edge> edges_;
};

bool is_acyclic(int n, const std::vector<Edge>& edges);

// Every labeled acyclic digraph on {1..n}; n capped (exhaustive driver).
std::vector<Digraph> enumerate_acyclic(int n, int cap = 5);

// Minimum of {sigma(G)} over all relabelings, in edge-list encoding order.
// Cached. Two graphs are isomorphic iff canonical forms are equal.
Digraph canonical_label(const Digraph& G);

// Simple cycle of the undirected version of a host graph, with the edge
// sets split by whether the traversal orientation matches the edge
// orientation in the graph.
struct UndirectedCycle {
    std::vector<int> vertices;     // canonical rotation/reflection
    std::vector<Edge> plus_edges;  // C+: traversal agrees with edge direction
    std::vector<Edge> minus_edges; // C-
};

// All simple cycles of the undirected version, lengths 3..max_len.
std::vector<UndirectedCycle> undirected_cycles(const Digraph& G, int max_len);

// Sparse exact-rational combination of labeled acyclic digraphs.
struct GraphVec {
    std::map<Digraph, Rat> terms;

    void add(const Digraph& g, const Rat& c);
    bool is_zero() const { return terms.empty(); }
    GraphVec& operator+=(const GraphVec& o);
    GraphVec& operator-=(const GraphVec& o);
    GraphVec& operator*=(const Rat& c);
    bool operator==(const GraphVec&) const = default;

    std::string json() const;
};

// CIE_{G,C} = sum_{D subset of C+} (-1)^{|D|} (G \ D).
GraphVec cie(const Digraph& G, const UndirectedCycle& C);

} // namespace gq
