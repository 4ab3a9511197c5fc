#include "gq/bipartite.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gq/gamma.hpp"
#include "gq/parallel.hpp"

namespace gq {

Digraph graph_BIJ(const SemiLengthView& v, int n) {
    std::vector<Edge> edges;
    int r = v.semi_length();
    for (int h = 0; h < r; ++h)
        for (int k = h; k < r; ++k)
            for (int x : v.I_blocks[h])
                for (int y : v.J_blocks[k]) edges.emplace_back(x, y);
    return Digraph(n, std::move(edges));
}

Digraph graph_HIJ(const SemiLengthView& v, int n) {
    std::vector<Edge> edges;
    int r = v.semi_length();
    for (int m = 0; m < r; ++m)
        for (int mm = m; mm < r; ++mm)
            for (int x : v.I_blocks[m])
                for (int y : v.J_blocks[mm]) edges.emplace_back(x, y);
    for (int m = 0; m < r; ++m)
        for (int mm = m + 1; mm < r; ++mm)
            for (int x : v.J_blocks[m])
                for (int y : v.I_blocks[mm]) edges.emplace_back(x, y);
    return Digraph(n, std::move(edges));
}

Digraph reverse_edges(const std::vector<int>& V, const std::vector<int>& W,
                      const std::vector<Edge>& D, int n) {
    std::vector<Edge> edges;
    for (int v : V)
        for (int w : W) {
            if (std::find(D.begin(), D.end(), Edge{v, w}) != D.end())
                edges.emplace_back(w, v);
            else
                edges.emplace_back(v, w);
        }
    return Digraph(n, std::move(edges), true);
}

std::optional<SemiLengthView> decompose_KD(const std::vector<int>& V, const std::vector<int>& W,
                                           const std::vector<Edge>& D) {
    std::set<Edge> rev(D.begin(), D.end());
    std::set<int> vrem(V.begin(), V.end()), wrem(W.begin(), W.end());
    for (auto [v, w] : D)
        if (!vrem.count(v) || !wrem.count(w)) throw std::invalid_argument("reversal edge outside V x W");
    for (int w : W) {
        bool covered = false;
        for (int v : V)
            if (!rev.count({v, w})) {
                covered = true;
                break;
            }
        if (!covered) throw std::invalid_argument("vertex of W with every edge reversed");
    }

    SemiLengthView out;
    while (!vrem.empty() || !wrem.empty()) {
        // Sources in V: no reversed edge from a remaining w.
        std::vector<int> I;
        for (int v : vrem) {
            bool src = true;
            for (int w : wrem)
                if (rev.count({v, w})) {
                    src = false;
                    break;
                }
            if (src) I.push_back(v);
        }
        if (I.empty()) return std::nullopt; // directed cycle
        for (int v : I) vrem.erase(v);
        out.I_blocks.push_back(std::move(I));

        // Sources in W: every forward edge from remaining V is reversed.
        std::vector<int> J;
        for (int w : wrem) {
            bool src = true;
            for (int v : vrem)
                if (!rev.count({v, w})) {
                    src = false;
                    break;
                }
            if (src) J.push_back(w);
        }
        if (J.empty() && !wrem.empty()) return std::nullopt;
        for (int w : J) wrem.erase(w);
        out.J_blocks.push_back(std::move(J));
        if (out.J_blocks.back().empty() && !vrem.empty()) return std::nullopt;
    }

    // Peeling succeeded; confirm the layered form reproduces the edge set.
    int n = 0;
    for (int v : V) n = std::max(n, v);
    for (int w : W) n = std::max(n, w);
    if (reverse_edges(V, W, D, n).edges() != graph_HIJ(out, n).edges()) return std::nullopt;
    return out;
}

WqsymVec n_expansion(const Digraph& B, int threads) {
    Bipartition bp = canonical_bipartition(B);
    std::vector<Edge> non_edges;
    for (int v : bp.V)
        for (int w : bp.W)
            if (!B.has_edge(v, w)) non_edges.emplace_back(v, w);
    if (non_edges.size() > 25) throw std::invalid_argument("n_expansion: too many non-edges");

    std::size_t p = non_edges.size();
    auto fold = [&](WqsymVec& acc, std::int64_t mask) {
        std::vector<Edge> D;
        for (std::size_t i = 0; i < p; ++i)
            if ((mask >> i) & 1) D.push_back(non_edges[i]);
        auto view = decompose_KD(bp.V, bp.W, D);
        if (view) acc.add(view->to_setcomp(B.n()).str(), 1);
    };
    auto merge = [](WqsymVec& acc, WqsymVec&& part) { acc += part; };
    return sweep_parallel(std::int64_t(1) << p, WqsymVec(B.n(), Basis::N), fold, merge, threads);
}

WqsymVec N_in_M(const SemiLengthView& v, int n) {
    WqsymVec out(n, Basis::M);
    int r = v.semi_length();
    for (const auto& K : enumerate_setcomps(n)) {
        bool ok = true;
        for (int m = 0; m < r && ok; ++m) {
            for (int x : v.I_blocks[m])
                for (int y : v.J_blocks[m])
                    if (K.block_index(x) > K.block_index(y)) {
                        ok = false;
                        break;
                    }
            if (ok && m + 1 < r)
                for (int x : v.J_blocks[m])
                    for (int y : v.I_blocks[m + 1])
                        if (K.block_index(x) >= K.block_index(y)) {
                            ok = false;
                            break;
                        }
        }
        if (ok) out.add(K.str(), 1);
    }
    return out;
}

std::optional<bool> biij_containment_less(const SemiLengthView& a, const SemiLengthView& b) {
    auto as_set = [](const std::vector<std::vector<int>>& blocks, int m) {
        std::set<int> s;
        if (m < static_cast<int>(blocks.size())) s.insert(blocks[m].begin(), blocks[m].end());
        return s;
    };
    auto proper_subset = [](const std::set<int>& x, const std::set<int>& y) {
        return x.size() < y.size() && std::includes(y.begin(), y.end(), x.begin(), x.end());
    };
    int r = std::max(a.semi_length(), b.semi_length());
    for (int m = 0; m < r; ++m) {
        std::set<int> ai = as_set(a.I_blocks, m), bi = as_set(b.I_blocks, m);
        if (ai != bi) {
            if (proper_subset(ai, bi)) return true;
            if (proper_subset(bi, ai)) return false;
            return std::nullopt;
        }
        std::set<int> aj = as_set(a.J_blocks, m), bj = as_set(b.J_blocks, m);
        if (aj != bj) {
            // Complements in W compared by containment: larger J comes first.
            if (proper_subset(bj, aj)) return true;
            if (proper_subset(aj, bj)) return false;
            return std::nullopt;
        }
    }
    return std::nullopt; // equal
}

std::vector<int> biij_linear_extension(const std::vector<SemiLengthView>& views) {
    int k = static_cast<int>(views.size());
    std::vector<std::vector<int>> succ(k);
    std::vector<int> indeg(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            auto c = biij_containment_less(views[i], views[j]);
            if (c && *c) {
                succ[i].push_back(j);
                ++indeg[j];
            }
        }
    std::vector<std::string> keys(k);
    for (int i = 0; i < k; ++i) keys[i] = views[i].str();

    std::vector<int> out;
    std::vector<char> done(k, 0);
    while (static_cast<int>(out.size()) < k) {
        int pick = -1;
        for (int i = 0; i < k; ++i)
            if (!done[i] && indeg[i] == 0 && (pick < 0 || keys[i] < keys[pick])) pick = i;
        if (pick < 0) throw std::logic_error("containment relation has a cycle");
        done[pick] = 1;
        out.push_back(pick);
        for (int j : succ[pick]) --indeg[j];
    }
    return out;
}

} // namespace gq
