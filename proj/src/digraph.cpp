#include "gq/digraph.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gq {

Digraph::Digraph(int n, std::vector<Edge> edges, bool allow_cycles)
    : n_(n), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [u, v] : edges_) {
        if (u < 1 || u > n || v < 1 || v > n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop edge rejected");
    }
    if (!allow_cycles && has_directed_cycle()) throw std::invalid_argument("graph has a directed cycle");
}

bool Digraph::has_edge(int u, int v) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

bool Digraph::has_directed_cycle() const { return !is_acyclic(n_, edges_); }

Digraph Digraph::with_edge(int u, int v) const {
    auto e = edges_;
    e.emplace_back(u, v);
    return Digraph(n_, std::move(e));
}

Digraph Digraph::without_edges(const std::vector<Edge>& del) const {
    std::vector<Edge> e;
    for (auto ed : edges_)
        if (std::find(del.begin(), del.end(), ed) == del.end()) e.push_back(ed);
    return Digraph(n_, std::move(e));
}

Digraph Digraph::relabeled(const std::vector<int>& sigma) const {
    std::vector<Edge> e;
    e.reserve(edges_.size());
    for (auto [u, v] : edges_) e.emplace_back(sigma[u], sigma[v]);
    return Digraph(n_, std::move(e), true);
}

std::string Digraph::str() const {
    std::ostringstream out;
    out << n_ << ":";
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (i) out << ",";
        out << edges_[i].first << ">" << edges_[i].second;
    }
    return out.str();
}

std::string Digraph::file_format() const {
    std::ostringstream out;
    out << n_ << "\n";
    for (auto [u, v] : edges_) out << u << " " << v << "\n";
    return out.str();
}

Digraph Digraph::parse_file(const std::string& text) {
    std::istringstream in(text);
    int n;
    if (!(in >> n)) throw std::invalid_argument("graph file: missing vertex count");
    std::vector<Edge> edges;
    int u, v;
    while (in >> u >> v) edges.emplace_back(u, v);
    return Digraph(n, std::move(edges));
}

bool is_acyclic(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> adj(n + 1);
    std::vector<int> indeg(n + 1, 0);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        ++indeg[v];
    }
    std::vector<int> queue;
    for (int v = 1; v <= n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        for (int w : adj[v])
            if (--indeg[w] == 0) queue.push_back(w);
    }
    return seen == n;
}

std::vector<Digraph> enumerate_acyclic(int n, int cap) {
    if (n > cap) throw std::invalid_argument("enumerate_acyclic: n exceeds cap");
    std::vector<Edge> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (u != v) pairs.emplace_back(u, v);
    std::vector<Digraph> out;
    std::size_t p = pairs.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << p); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < p; ++i)
            if ((mask >> i) & 1u) edges.push_back(pairs[i]);
        if (is_acyclic(n, edges)) out.emplace_back(n, std::move(edges));
    }
    return out;
}

Digraph canonical_label(const Digraph& G) {
    static std::map<Digraph, Digraph> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(G);
        if (it != cache.end()) return it->second;
    }
    int n = G.n();
    std::vector<int> perm(n + 1);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Edge> best = G.edges();
    std::vector<Edge> cur;
    do {
        cur.clear();
        for (auto [u, v] : G.edges()) cur.emplace_back(perm[u], perm[v]);
        std::sort(cur.begin(), cur.end());
        if (cur < best) best = cur;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    Digraph result(n, std::move(best));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(G, result);
    return result;
}

std::vector<UndirectedCycle> undirected_cycles(const Digraph& G, int max_len) {
    int n = G.n();
    std::vector<std::vector<int>> adj(n + 1);
    for (auto [u, v] : G.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }

    std::vector<UndirectedCycle> out;
    std::vector<int> path;
    std::vector<char> used(n + 1, 0);

    // Canonical form: start at the smallest vertex of the cycle, and take
    // the smaller of the two traversal directions (second vertex < last).
    auto emit = [&](const std::vector<int>& cyc) {
        UndirectedCycle c;
        c.vertices = cyc;
        int k = static_cast<int>(cyc.size());
        for (int i = 0; i < k; ++i) {
            int a = cyc[i], b = cyc[(i + 1) % k];
            if (G.has_edge(a, b))
                c.plus_edges.emplace_back(a, b);
            else
                c.minus_edges.emplace_back(b, a);
        }
        out.push_back(std::move(c));
    };

    auto dfs = [&](auto&& self, int start, int v) -> void {
        for (int w : adj[v]) {
            if (w == start && path.size() >= 3) {
                if (path[1] < path.back()) emit(path);
                continue;
            }
            if (w <= start || used[w] || static_cast<int>(path.size()) >= max_len) continue;
            used[w] = 1;
            path.push_back(w);
            self(self, start, w);
            path.pop_back();
            used[w] = 0;
        }
    };

    for (int s = 1; s <= n; ++s) {
        path = {s};
        used.assign(n + 1, 0);
        used[s] = 1;
        dfs(dfs, s, s);
    }
    return out;
}

void GraphVec::add(const Digraph& g, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(g);
    if (it == terms.end()) {
        terms.emplace(g, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

GraphVec& GraphVec::operator+=(const GraphVec& o) {
    for (const auto& [g, c] : o.terms) add(g, c);
    return *this;
}

GraphVec& GraphVec::operator-=(const GraphVec& o) {
    for (const auto& [g, c] : o.terms) add(g, -c);
    return *this;
}

GraphVec& GraphVec::operator*=(const Rat& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [g, v] : terms) v *= c;
    return *this;
}

std::string GraphVec::json() const {
    std::ostringstream out;
    out << "{\"terms\":[";
    bool first = true;
    for (const auto& [g, c] : terms) {
        if (!first) out << ",";
        first = false;
        out << "[\"" << g.str() << "\",\"" << rat_to_string(c) << "\"]";
    }
    out << "]}";
    return out.str();
}

GraphVec cie(const Digraph& G, const UndirectedCycle& C) {
    for (auto [u, v] : C.plus_edges)
        if (!G.has_edge(u, v)) throw std::invalid_argument("cycle edge not in graph");
    for (auto [u, v] : C.minus_edges)
        if (!G.has_edge(u, v)) throw std::invalid_argument("cycle edge not in graph");
    if (C.plus_edges.empty()) throw std::invalid_argument("cycle with empty C+ (host graph not acyclic?)");

    int s = static_cast<int>(C.plus_edges.size());
    GraphVec out;
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
        std::vector<Edge> del;
        for (int i = 0; i < s; ++i)
            if ((mask >> i) & 1u) del.push_back(C.plus_edges[i]);
        int sign = (del.size() % 2 == 0) ? 1 : -1;
        out.add(G.without_edges(del), sign);
    }
    return out;
}

} // namespace gq
