#include "gq/rewrite.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "gq/gamma.hpp"
#include "gq/parallel.hpp"
#include "gq/wqsym.hpp"

namespace gq {

namespace {

// reach[x][y] = directed path from x to y (x != y)
std::vector<std::vector<char>> reachability(const Digraph& G) {
    int n = G.n();
    std::vector<std::vector<char>> reach(n + 1, std::vector<char>(n + 1, 0));
    std::vector<std::vector<int>> adj(n + 1);
    for (auto [u, v] : G.edges()) adj[u].push_back(v);
    for (int s = 1; s <= n; ++s) {
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!reach[s][w]) {
                    reach[s][w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return reach;
}

} // namespace

std::optional<SetComposition> identify_GI(const Digraph& G) {
    int n = G.n();
    auto reach = reachability(G);
    auto sim = [&](int x, int y) { return x != y && !reach[x][y] && !reach[y][x]; };

    // Components of the transitive closure of ~ are the candidate blocks.
    std::vector<int> comp(n + 1, -1);
    int ncomp = 0;
    for (int s = 1; s <= n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = ncomp;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 1; w <= n; ++w)
                if (sim(v, w) && comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> blocks(ncomp);
    for (int v = 1; v <= n; ++v) blocks[comp[v]].push_back(v);

    // Order blocks topologically by the edges between them.
    std::vector<std::vector<int>> after(ncomp);
    std::vector<int> indeg(ncomp, 0);
    for (auto [u, v] : G.edges())
        if (comp[u] != comp[v]) after[comp[u]].push_back(comp[v]);
    for (auto& a : after) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        for (int b : a) ++indeg[b];
    }
    std::vector<int> order;
    std::vector<char> done(ncomp, 0);
    while (static_cast<int>(order.size()) < ncomp) {
        int pick = -1;
        for (int c = 0; c < ncomp; ++c)
            if (!done[c] && indeg[c] == 0) {
                pick = c;
                break;
            }
        if (pick < 0) return std::nullopt;
        done[pick] = 1;
        order.push_back(pick);
        for (int b : after[pick]) --indeg[b];
    }
    std::vector<std::vector<int>> ordered;
    for (int c : order) ordered.push_back(blocks[c]);
    SetComposition I(n, std::move(ordered));
    if (graph_GI(I) == G) return I;
    return std::nullopt;
}

std::optional<SemiLengthView> identify_BIJ(const Digraph& B) {
    Bipartition bp = canonical_bipartition(B);
    int n = B.n();
    std::vector<std::pair<std::vector<int>, int>> nbhd; // (sorted N(v), v)
    for (int v : bp.V) {
        std::vector<int> nb;
        for (int w : bp.W)
            if (B.has_edge(v, w)) nb.push_back(w);
        nbhd.emplace_back(std::move(nb), v);
    }
    std::sort(nbhd.begin(), nbhd.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
        return a < b;
    });
    SemiLengthView out;
    std::vector<std::vector<int>> nvals;
    for (const auto& [nb, v] : nbhd) {
        if (nvals.empty() || nvals.back() != nb) {
            nvals.push_back(nb);
            out.I_blocks.push_back({});
        }
        out.I_blocks.back().push_back(v);
    }
    for (std::size_t m = 0; m < nvals.size(); ++m) {
        std::vector<int> next = (m + 1 < nvals.size()) ? nvals[m + 1] : std::vector<int>{};
        std::vector<int> J;
        std::set_difference(nvals[m].begin(), nvals[m].end(), next.begin(), next.end(),
                            std::back_inserter(J));
        out.J_blocks.push_back(std::move(J));
    }
    if (out.I_blocks.empty()) { // no V vertices: only possible with no edges
        if (!bp.W.empty()) return std::nullopt;
        return out;
    }
    if (graph_BIJ(out, n) == B) return out;
    return std::nullopt;
}

namespace {

std::map<Digraph, GraphVec> gi_cache;   // guarded by cache_mutex
std::map<Digraph, GraphVec> bij_cache;  // guarded by cache_mutex
std::mutex cache_mutex;

GraphVec reduce_gi_rec(const Digraph& G, std::vector<std::string>* trace) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = gi_cache.find(G);
        if (it != gi_cache.end() && !trace) return it->second;
    }
    GraphVec result;
    if (identify_GI(G)) {
        result.add(G, 1);
    } else {
        int n = G.n();
        auto reach = reachability(G);
        auto sim = [&](int x, int y) { return x != y && !reach[x][y] && !reach[y][x]; };

        // Missing transitivity edge: first (x,z) lexicographically.
        int cx = 0, cz = 0;
        for (int x = 1; x <= n && !cx; ++x)
            for (int z = 1; z <= n && !cx; ++z) {
                if (x == z || G.has_edge(x, z)) continue;
                for (int y = 1; y <= n; ++y)
                    if (G.has_edge(x, y) && G.has_edge(y, z)) {
                        cx = x;
                        cz = z;
                        break;
                    }
            }
        if (cx) {
            Digraph G0 = G.with_edge(cx, cz);
            if (trace) {
                std::ostringstream line;
                line << "transitivity " << G.str() << " += (" << cx << "," << cz << ")";
                trace->push_back(line.str());
            }
            result = reduce_gi_rec(G0, trace);
        } else {
            // Incomparability not transitive: least (x,y,z) with x~y, y~z
            // and a path x -> z.
            int wx = 0, wy = 0, wz = 0;
            for (int x = 1; x <= n && !wx; ++x)
                for (int y = 1; y <= n && !wx; ++y)
                    for (int z = 1; z <= n && !wx; ++z)
                        if (sim(x, y) && sim(y, z) && x != z && reach[x][z]) {
                            wx = x;
                            wy = y;
                            wz = z;
                        }
            if (!wx) throw std::logic_error("reduce_to_GI: no applicable rewrite");
            Digraph G0 = G.with_edge(wx, wy).with_edge(wy, wz);
            if (trace) {
                std::ostringstream line;
                line << "three-term " << G.str() << " via (" << wx << "," << wy << "," << wz << ")";
                trace->push_back(line.str());
            }
            GraphVec a = reduce_gi_rec(G0, trace);
            GraphVec b = reduce_gi_rec(G0.without_edges({{wx, wy}}), trace);
            GraphVec c = reduce_gi_rec(G0.without_edges({{wy, wz}}), trace);
            a *= -1;
            result = std::move(a);
            result += b;
            result += c;
        }
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    gi_cache.emplace(G, result);
    return result;
}

GraphVec reduce_bij_rec(const Digraph& B, std::vector<std::string>* trace) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = bij_cache.find(B);
        if (it != bij_cache.end() && !trace) return it->second;
    }
    GraphVec result;
    if (identify_BIJ(B)) {
        result.add(B, 1);
    } else {
        Bipartition bp = canonical_bipartition(B);
        int v1 = 0, v2 = 0, w1 = 0, w2 = 0;
        for (int v : bp.V) {
            for (int vp : bp.V) {
                if (v == vp) continue;
                for (int w : bp.W) {
                    for (int wp : bp.W) {
                        if (w == wp) continue;
                        if (B.has_edge(v, w) && B.has_edge(vp, wp) && !B.has_edge(v, wp) &&
                            !B.has_edge(vp, w)) {
                            v1 = v;
                            v2 = vp;
                            w1 = w;
                            w2 = wp;
                            goto found;
                        }
                    }
                }
            }
        }
    found:
        if (!v1) throw std::logic_error("reduce_bipartite_to_BIJ: no applicable rewrite");
        Digraph B0 = B.with_edge(v1, w2).with_edge(v2, w1);
        if (trace) {
            std::ostringstream line;
            line << "four-cycle " << B.str() << " via (" << v1 << "," << w1 << ")(" << v2 << ","
                 << w2 << ")";
            trace->push_back(line.str());
        }
        GraphVec a = reduce_bij_rec(B0, trace);
        GraphVec b = reduce_bij_rec(B0.without_edges({{v1, w2}}), trace);
        GraphVec c = reduce_bij_rec(B0.without_edges({{v2, w1}}), trace);
        a *= -1;
        result = std::move(a);
        result += b;
        result += c;
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    bij_cache.emplace(B, result);
    return result;
}

} // namespace

GraphVec reduce_to_GI(const Digraph& G, std::vector<std::string>* trace) {
    GraphVec out = reduce_gi_rec(G, trace);
    if (trace) {
        std::ostringstream line;
        line << "result terms=" << out.terms.size();
        trace->push_back(line.str());
    }
    return out;
}

GraphVec reduce_bipartite_to_BIJ(const Digraph& B, std::vector<std::string>* trace) {
    GraphVec out = reduce_bij_rec(B, trace);
    if (trace) {
        std::ostringstream line;
        line << "result terms=" << out.terms.size();
        trace->push_back(line.str());
    }
    return out;
}

bool kernel_check(const GraphVec& v) { return gamma_nc(v).is_zero(); }

std::vector<Digraph> enumerate_bipartite(int n) {
    // Each bipartite graph is produced once: W is exactly the set of
    // vertices with an incoming edge.
    std::vector<Digraph> out;
    for (unsigned wmask = 0; wmask < (1u << n); ++wmask) {
        std::vector<int> V, W;
        for (int v = 1; v <= n; ++v)
            if ((wmask >> (v - 1)) & 1u)
                W.push_back(v);
            else
                V.push_back(v);
        std::vector<Edge> pairs;
        for (int v : V)
            for (int w : W) pairs.emplace_back(v, w);
        std::size_t p = pairs.size();
        if (!W.empty() && p == 0) continue;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << p); ++mask) {
            std::vector<Edge> edges;
            std::set<int> covered;
            for (std::size_t i = 0; i < p; ++i)
                if ((mask >> i) & 1u) {
                    edges.push_back(pairs[i]);
                    covered.insert(pairs[i].second);
                }
            if (covered.size() != W.size()) continue;
            out.emplace_back(n, std::move(edges));
        }
    }
    return out;
}

int cie_span_rank(int n, CycleMode mode, bool bipartite, int stop_at, int threads) {
    if (n > 5) throw std::invalid_argument("cie_span_rank: n exceeds cap");
    std::vector<Digraph> hosts = bipartite ? enumerate_bipartite(n) : enumerate_acyclic(n);
    using Rows = std::vector<std::map<std::string, Rat>>;
    auto fold = [&](Rows& acc, std::int64_t i) {
        const Digraph& G = hosts[i];
        for (const auto& C : undirected_cycles(G, n)) {
            // Both traversal orientations give generators.
            for (int orient = 0; orient < 2; ++orient) {
                UndirectedCycle cc;
                cc.plus_edges = orient ? C.minus_edges : C.plus_edges;
                cc.minus_edges = orient ? C.plus_edges : C.minus_edges;
                if (cc.plus_edges.empty()) continue;
                if (mode == CycleMode::Short && cc.plus_edges.size() > 2) continue;
                std::map<std::string, Rat> row;
                for (const auto& [g, c] : cie(G, cc).terms) row[g.str()] = c;
                acc.push_back(std::move(row));
            }
        }
    };
    auto merge = [](Rows& acc, Rows&& part) {
        for (auto& r : part) acc.push_back(std::move(r));
    };
    Rows rows = sweep_parallel(static_cast<std::int64_t>(hosts.size()), Rows{}, fold, merge, threads);
    return rank_of_rows(rows, stop_at);
}

} // namespace gq
