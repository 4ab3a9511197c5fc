#include "gq/kerov.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gq/gamma.hpp"

namespace gq {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
    }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ",";
        out << parts[i];
    }
    return out.str();
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

namespace {

// Connected components of the undirected version, including isolated
// vertices. comp[v] in {0..ncomp-1}.
int undirected_components(const Digraph& G, std::vector<int>& comp) {
    int n = G.n();
    comp.assign(n + 1, -1);
    std::vector<std::vector<int>> adj(n + 1);
    for (auto [u, v] : G.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    int ncomp = 0;
    for (int s = 1; s <= n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = ncomp;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    return ncomp;
}

} // namespace

bool is_expander(const DecoratedGraph& g) {
    Bipartition bp = canonical_bipartition(g.B);
    for (int v : bp.V)
        if (!g.h.count(v) || g.h.at(v) <= 0)
            throw std::invalid_argument("decoration missing or non-positive on a V-vertex");

    std::vector<int> comp;
    int ncomp = undirected_components(g.B, comp);
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> Vc;
        std::vector<int> Wc;
        for (int v : bp.V)
            if (comp[v] == c) Vc.push_back(v);
        for (int w : bp.W)
            if (comp[w] == c) Wc.push_back(w);
        int total = 0;
        for (int v : Vc) total += g.h.at(v);
        if (total != static_cast<int>(Wc.size())) return false;
        int s = static_cast<int>(Vc.size());
        if (s > 20) throw std::invalid_argument("is_expander: V-part too large");
        for (unsigned mask = 1; mask + 1 < (1u << s); ++mask) {
            int hsum = 0;
            std::set<int> nbhd;
            for (int i = 0; i < s; ++i)
                if ((mask >> i) & 1u) {
                    hsum += g.h.at(Vc[i]);
                    for (int w : Wc)
                        if (g.B.has_edge(Vc[i], w)) nbhd.insert(w);
                }
            if (static_cast<int>(nbhd.size()) <= hsum) return false;
        }
    }
    return true;
}

bool tree_expander_characterization(const DecoratedGraph& g) {
    std::vector<int> comp;
    int ncomp = undirected_components(g.B, comp);
    if (static_cast<int>(g.B.edges().size()) != g.B.n() - ncomp)
        throw std::invalid_argument("not a forest");
    Bipartition bp = canonical_bipartition(g.B);
    std::vector<int> vcount(ncomp, 0);
    for (int v : bp.V) ++vcount[comp[v]];
    for (int c = 0; c < ncomp; ++c)
        if (vcount[c] != 1) return false;
    for (int v : bp.V) {
        int deg = 0;
        for (int w : bp.W)
            if (g.B.has_edge(v, w)) ++deg;
        if (!g.h.count(v) || g.h.at(v) != deg) return false;
    }
    return true;
}

Rat I_nu(const GraphVec& v, const Partition& nu) {
    Rat total = 0;
    for (const auto& [g, coeff] : v.terms) {
        Bipartition bp = canonical_bipartition(g);
        if (static_cast<int>(bp.V.size()) != nu.length()) continue;
        if (static_cast<int>(bp.W.size()) != nu.size()) continue;
        std::vector<int> vals = nu.parts;
        std::sort(vals.begin(), vals.end());
        std::vector<int> comp;
        int ncomp = undirected_components(g, comp);
        long long count = 0;
        do {
            DecoratedGraph dg{g, {}};
            for (std::size_t i = 0; i < bp.V.size(); ++i) dg.h[bp.V[i]] = vals[i];
            if (is_expander(dg)) ++count;
        } while (std::next_permutation(vals.begin(), vals.end()));
        int sign = (ncomp % 2 == 0) ? 1 : -1;
        total += coeff * Rat(sign * count);
    }
    return total;
}

std::vector<std::vector<int>> cycles_of(const Perm& p) {
    int k = static_cast<int>(p.size());
    std::vector<char> seen(k + 1, 0);
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= k; ++s) {
        if (seen[s]) continue;
        std::vector<int> cyc;
        int v = s;
        while (!seen[v]) {
            seen[v] = 1;
            cyc.push_back(v);
            v = p[v - 1];
        }
        out.push_back(std::move(cyc));
    }
    return out; // cycles appear in order of their minima
}

int num_cycles(const Perm& p) { return static_cast<int>(cycles_of(p).size()); }

Perm compose(const Perm& a, const Perm& b) {
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i] - 1];
    return out;
}

Perm inverse(const Perm& p) {
    Perm out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[p[i] - 1] = static_cast<int>(i) + 1;
    return out;
}

Perm canonical_of_type(const Partition& mu) {
    Perm out(mu.size());
    int start = 1;
    for (int part : mu.parts) {
        for (int i = 0; i < part; ++i)
            out[start + i - 1] = (i + 1 < part) ? start + i + 1 : start;
        start += part;
    }
    return out;
}

Digraph graph_of_pair(const Perm& sigma, const Perm& tau) {
    auto cs = cycles_of(sigma);
    auto ct = cycles_of(tau);
    int a = static_cast<int>(cs.size());
    int b = static_cast<int>(ct.size());
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            bool meet = false;
            for (int x : cs[i]) {
                if (std::find(ct[j].begin(), ct[j].end(), x) != ct[j].end()) {
                    meet = true;
                    break;
                }
            }
            if (meet) edges.emplace_back(i + 1, a + j + 1);
        }
    return Digraph(a + b, std::move(edges));
}

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Minimal relabeling over the bipartition-preserving symmetries; skipped
// (raw labeled form kept) when the symmetry group is too large. Merging is
// an optimization only: every consumer of these sums is label-invariant.
Digraph bipartite_canonical(const Digraph& g) {
    Bipartition bp = canonical_bipartition(g);
    int a = static_cast<int>(bp.V.size());
    int b = static_cast<int>(bp.W.size());
    if (factorial(a) * factorial(b) > 50000) return g;
    std::vector<int> pv(bp.V.begin(), bp.V.end());
    std::vector<Edge> best = g.edges();
    std::sort(pv.begin(), pv.end());
    std::vector<int> pw(bp.W.begin(), bp.W.end());
    std::sort(pw.begin(), pw.end());
    std::vector<int> relab(g.n() + 1, 0);
    do {
        do {
            for (int i = 0; i < a; ++i) relab[pv[i]] = i + 1;
            for (int j = 0; j < b; ++j) relab[pw[j]] = a + j + 1;
            std::vector<Edge> cur;
            cur.reserve(g.edges().size());
            for (auto [u, v] : g.edges()) cur.emplace_back(relab[u], relab[v]);
            std::sort(cur.begin(), cur.end());
            if (cur < best) best = cur;
        } while (std::next_permutation(pw.begin(), pw.end()));
    } while (std::next_permutation(pv.begin(), pv.end()));
    return Digraph(g.n(), std::move(best));
}

} // namespace

GraphVec G_Ch(const Partition& mu, int cap) {
    int k = mu.size();
    if (k > cap) throw std::invalid_argument("G_Ch: partition size exceeds cap");
    int r = mu.length();
    Perm pi = canonical_of_type(mu);
    Perm sigma(k);
    std::iota(sigma.begin(), sigma.end(), 1);
    GraphVec out;
    do {
        Perm tau = compose(inverse(sigma), pi);
        int sign = ((num_cycles(tau) + r) % 2 == 0) ? 1 : -1;
        // V-side carries the cycles of tau (validated against character data)
        out.add(bipartite_canonical(graph_of_pair(tau, sigma)), sign);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

GraphVec G_R(int k_plus_1, int cap) {
    int k = k_plus_1 - 1;
    if (k < 1 || k > cap) throw std::invalid_argument("G_R: index out of range");
    Perm pi = canonical_of_type(Partition({k}));
    Perm sigma(k);
    std::iota(sigma.begin(), sigma.end(), 1);
    GraphVec out;
    do {
        Perm tau = compose(inverse(sigma), pi);
        if (num_cycles(sigma) + num_cycles(tau) != k + 1) continue;
        Digraph g = graph_of_pair(tau, sigma);
        std::vector<int> comp;
        int ncomp = undirected_components(g, comp);
        if (static_cast<int>(g.edges().size()) != g.n() - ncomp)
            throw std::logic_error("G_R: non-forest support graph");
        int sign = ((num_cycles(tau) + 1) % 2 == 0) ? 1 : -1;
        out.add(bipartite_canonical(g), sign);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

Int kerov_coeff(const Partition& mu, const Partition& nu, int cap) {
    Rat val = I_nu(G_Ch(mu, cap), nu);
    if (nu.length() % 2 != 0) val = -val;
    if (denominator(val) != 1) throw std::logic_error("kerov_coeff: non-integer value");
    return numerator(val);
}

GraphVec graphvec_product(const GraphVec& a, const GraphVec& b) {
    GraphVec out;
    for (const auto& [g1, c1] : a.terms)
        for (const auto& [g2, c2] : b.terms) {
            std::vector<Edge> edges = g1.edges();
            for (auto [u, v] : g2.edges()) edges.emplace_back(u + g1.n(), v + g1.n());
            out.add(Digraph(g1.n() + g2.n(), std::move(edges)), c1 * c2);
        }
    return out;
}

} // namespace gq
