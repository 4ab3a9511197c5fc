#include "gq/gamma.hpp"

#include <algorithm>
#include <stdexcept>

namespace gq {

WqsymVec gamma_nc(const Digraph& G) {
    WqsymVec out(G.n(), Basis::M);
    for (const auto& I : enumerate_setcomps(G.n())) {
        bool ok = true;
        for (auto [u, v] : G.edges()) {
            if (I.block_index(u) > I.block_index(v)) {
                ok = false;
                break;
            }
        }
        if (ok) out.add(I.str(), 1);
    }
    return out;
}

WqsymVec gamma_nc(const GraphVec& v) {
    WqsymVec out;
    bool first = true;
    for (const auto& [g, c] : v.terms) {
        WqsymVec im = gamma_nc(g);
        im *= c;
        if (first) {
            out = std::move(im);
            first = false;
        } else {
            out += im;
        }
    }
    return out;
}

QsymVec gamma_unlabeled(const Digraph& G) { return project_qsym(gamma_nc(G)); }

QsymVec gamma_unlabeled(const GraphVec& v) { return project_qsym(gamma_nc(v)); }

Digraph graph_GI(const SetComposition& I) {
    std::vector<Edge> edges;
    for (int j = 0; j < I.num_blocks(); ++j)
        for (int k = j + 1; k < I.num_blocks(); ++k)
            for (int x : I.block(j))
                for (int y : I.block(k)) edges.emplace_back(x, y);
    return Digraph(I.n(), std::move(edges));
}

std::vector<DStarPerm> mp_set(const SetComposition& I) {
    std::vector<DStarPerm> out;
    std::vector<std::vector<std::vector<int>>> block_words;
    for (const auto& b : I.blocks()) {
        std::vector<std::vector<int>> words;
        std::vector<int> w = b;
        std::sort(w.begin(), w.end());
        do {
            words.push_back(w);
        } while (std::next_permutation(w.begin(), w.end()));
        block_words.push_back(std::move(words));
    }
    std::vector<int> word;
    std::set<int> stars;
    auto rec = [&](auto&& self, int bi) -> void {
        if (bi == static_cast<int>(block_words.size())) {
            out.emplace_back(word, stars);
            return;
        }
        for (const auto& w : block_words[bi]) {
            std::size_t base = word.size();
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i > 0 && w[i - 1] > w[i]) stars.insert(static_cast<int>(base + i));
                word.push_back(w[i]);
            }
            self(self, bi + 1);
            for (std::size_t i = w.size(); i > 0; --i) {
                stars.erase(static_cast<int>(word.size()) - 1);
                word.pop_back();
            }
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

WqsymVec gamma_GI_in_F(const SetComposition& I) {
    WqsymVec out(I.n(), Basis::F);
    for (const auto& p : mp_set(I)) out.add(p.str(), 1);
    return out;
}

WordMap gamma_nc_words(const Digraph& G, int m) {
    WordMap out;
    int n = G.n();
    std::vector<int> f(n, 1);
    while (true) {
        bool ok = true;
        for (auto [u, v] : G.edges())
            if (f[u - 1] > f[v - 1]) {
                ok = false;
                break;
            }
        if (ok) out[f] = 1;
        int i = n - 1;
        while (i >= 0 && f[i] == m) f[i--] = 1;
        if (i < 0) break;
        ++f[i];
    }
    return out;
}

Bipartition canonical_bipartition(const Digraph& B) {
    int n = B.n();
    std::vector<char> has_in(n + 1, 0), has_out(n + 1, 0);
    for (auto [u, v] : B.edges()) {
        has_out[u] = 1;
        has_in[v] = 1;
    }
    Bipartition bp;
    for (int v = 1; v <= n; ++v) {
        if (has_in[v] && has_out[v]) throw std::invalid_argument("graph is not bipartite as a digraph");
        if (has_in[v])
            bp.W.push_back(v);
        else
            bp.V.push_back(v);
    }
    return bp;
}

BiPolynomial& BiPolynomial::operator+=(const BiPolynomial& o) {
    if (truncation == 0) truncation = o.truncation;
    for (const auto& [k, c] : o.terms) {
        auto it = terms.find(k);
        if (it == terms.end()) {
            if (c != 0) terms.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

Rat BiPolynomial::eval(const std::vector<Rat>& p, const std::vector<Rat>& q) const {
    Rat total = 0;
    for (const auto& [key, c] : terms) {
        Rat mono = c;
        for (int i = 0; i < truncation; ++i) {
            for (int e = 0; e < key.first[i]; ++e) mono *= p[i];
            for (int e = 0; e < key.second[i]; ++e) mono *= q[i];
        }
        total += mono;
    }
    return total;
}

namespace {

template <typename Fn>
void for_each_nondecreasing(const Digraph& B, int m, Fn&& fn) {
    int n = B.n();
    std::vector<int> f(n, 1);
    while (true) {
        bool ok = true;
        for (auto [u, v] : B.edges())
            if (f[u - 1] > f[v - 1]) {
                ok = false;
                break;
            }
        if (ok) fn(f);
        int i = n - 1;
        while (i >= 0 && f[i] == m) f[i--] = 1;
        if (i < 0) break;
        ++f[i];
    }
}

} // namespace

BiPolynomial delta_two_alphabet(const Digraph& B, int m) {
    Bipartition bp = canonical_bipartition(B);
    BiPolynomial out;
    out.truncation = m;
    for_each_nondecreasing(B, m, [&](const std::vector<int>& f) {
        std::vector<int> pe(m, 0), qe(m, 0);
        for (int v : bp.V) ++pe[f[v - 1] - 1];
        for (int w : bp.W) ++qe[f[w - 1] - 1];
        ++out.terms[{std::move(pe), std::move(qe)}];
    });
    return out;
}

BiPolynomial delta_two_alphabet(const GraphVec& v, int m) {
    BiPolynomial out;
    out.truncation = m;
    for (const auto& [g, c] : v.terms) {
        if (denominator(c) != 1) throw std::invalid_argument("delta_two_alphabet: integer coefficients expected");
        BiPolynomial one = delta_two_alphabet(g, m);
        for (auto& [k, cc] : one.terms) cc *= numerator(c);
        out += one;
    }
    return out;
}

Rat delta_eval(const Digraph& B, const std::vector<Rat>& p, const std::vector<Rat>& q) {
    Bipartition bp = canonical_bipartition(B);
    int m = static_cast<int>(p.size());
    Rat total = 0;
    for_each_nondecreasing(B, m, [&](const std::vector<int>& f) {
        Rat mono = 1;
        for (int v : bp.V) mono *= p[f[v - 1] - 1];
        for (int w : bp.W) mono *= q[f[w - 1] - 1];
        total += mono;
    });
    return total;
}

Rat delta_eval(const GraphVec& v, const std::vector<Rat>& p, const std::vector<Rat>& q) {
    Rat total = 0;
    for (const auto& [g, c] : v.terms) total += c * delta_eval(g, p, q);
    return total;
}

} // namespace gq
