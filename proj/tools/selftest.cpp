#include "selftest.hpp"

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gq/bipartite.hpp"
#include "gq/gamma.hpp"
#include "gq/kerov.hpp"
#include "gq/rewrite.hpp"

namespace gq {

namespace {

bool check(std::ostream& out, const std::string& name, const std::string& got,
           const std::string& want) {
    bool ok = got == want;
    out << (ok ? "ok   " : "FAIL ") << name << ": " << got;
    if (!ok) out << " (expected " << want << ")";
    out << "\n";
    return ok;
}

std::string signed_F_expansion(const Digraph& g) {
    std::vector<DStarPerm> keys;
    std::vector<WqsymVec> family;
    std::vector<int> w(g.n());
    for (int i = 0; i < g.n(); ++i) w[i] = i + 1;
    do {
        std::vector<int> desc;
        for (int x = 1; x < g.n(); ++x)
            if (w[x - 1] > w[x]) desc.push_back(x);
        for (unsigned mask = 0; mask < (1u << desc.size()); ++mask) {
            std::set<int> stars;
            for (std::size_t i = 0; i < desc.size(); ++i)
                if ((mask >> i) & 1u) stars.insert(desc[i]);
            keys.emplace_back(w, stars);
            WqsymVec v(g.n(), Basis::F);
            v.add(keys.back().str(), 1);
            family.push_back(to_M(v));
        }
    } while (std::next_permutation(w.begin(), w.end()));

    auto sol = solve_in_family(gamma_nc(g), family);
    if (!sol) return "<not in span>";
    std::vector<std::pair<std::string, Rat>> terms;
    for (std::size_t i = 0; i < keys.size(); ++i)
        if ((*sol)[i] != 0) terms.emplace_back(keys[i].str(), (*sol)[i]);
    std::sort(terms.begin(), terms.end());
    std::ostringstream s;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& [key, c] = terms[i];
        if (i == 0)
            s << (c < 0 ? "-" : "");
        else
            s << (c < 0 ? " - " : " + ");
        Rat a = c < 0 ? -c : c;
        if (a != 1) s << rat_to_string(a) << "*";
        s << "F[" << key << "]";
    }
    return s.str();
}

} // namespace

bool run_selftest(std::ostream& out) {
    bool ok = true;

    ok &= check(out, "packing of word 275525", delta_of_word({2, 7, 5, 5, 2, 5}).str(), "15|346|2");
    ok &= check(out, "block sizes of 15|346|2", phi_c(SetComposition::parse("15|346|2")).str(), "231");

    {
        auto mp = mp_set(SetComposition::parse("15|346|2"));
        std::set<std::string> got;
        for (const auto& p : mp) got.insert(p.str());
        std::ostringstream s;
        for (const auto& k : got) s << (s.tellp() > 0 ? " " : "") << k;
        ok &= check(out, "starred index set of 15|346|2", s.str(),
                    "153462 1536*42 154*362 1546*32 156*342 156*4*32 5*13462 5*136*42 5*14*362 "
                    "5*146*32 5*16*342 5*16*4*32");
    }

    ok &= check(out, "signed F-expansion of 3>1 with isolated 2",
                signed_F_expansion(Digraph(3, {{3, 1}})),
                "F[231] + F[3*21] + F[312] + F[32*1] - F[321]");

    {
        Digraph g(7, {{4, 2}, {6, 2}, {6, 1}, {2, 3}, {3, 5}, {1, 5}, {1, 7}, {7, 5}});
        UndirectedCycle C;
        for (const auto& cand : undirected_cycles(g, 7)) {
            std::set<int> vs(cand.vertices.begin(), cand.vertices.end());
            if (vs == std::set<int>{1, 2, 3, 5, 6}) C = cand;
        }
        if (C.plus_edges.size() != 3) std::swap(C.plus_edges, C.minus_edges);
        GraphVec v = cie(g, C);
        ok &= check(out, "inclusion-exclusion terms for the 5-cycle",
                    std::to_string(v.terms.size()), "8");
    }

    {
        SemiLengthView view;
        view.I_blocks = {{2, 6}, {5}, {3}};
        view.J_blocks = {{4}, {1, 7}, {}};
        Digraph b = graph_BIJ(view, 7);
        WqsymVec v = n_expansion(b);
        std::map<std::string, Rat> expect;
        for (const char* key :
             {"26|4|5|17|3", "26|4|5|1|3|7", "26|4|5|7|3|1", "26|4|35|17", "236|4|5|17",
              "256|147|3", "256|14|3|7", "256|17|3|4", "256|47|3|1", "256|1|3|47", "256|4|3|17",
              "256|7|3|14", "2356|147"})
            expect[key] = 1;
        ok &= check(out, "N-expansion of the 8-edge example",
                    v.terms == expect ? "13 expected terms" : v.json(), "13 expected terms");

        int cyclic = 0;
        std::vector<Edge> nonedges{{5, 4}, {3, 4}, {3, 1}, {3, 7}};
        for (unsigned mask = 0; mask < 16; ++mask) {
            std::vector<Edge> D;
            for (int i = 0; i < 4; ++i)
                if ((mask >> i) & 1u) D.push_back(nonedges[i]);
            if (!decompose_KD({2, 3, 5, 6}, {1, 4, 7}, D)) ++cyclic;
        }
        ok &= check(out, "cyclic reversal sets among the 16", std::to_string(cyclic), "3");
    }

    {
        std::vector<Edge> edges{{5, 1}, {5, 2}, {3, 1}, {3, 2}, {3, 9},
                                {8, 1}, {8, 4}, {8, 6}, {8, 7}};
        std::map<int, int> h{{5, 1}, {3, 2}, {8, 3}};
        DecoratedGraph without{Digraph(9, edges), h};
        edges.push_back({3, 4});
        DecoratedGraph with{Digraph(9, edges), h};
        std::string verdicts = std::string(is_expander(without) ? "expander" : "not-expander") +
                               " / " + (is_expander(with) ? "expander" : "not-expander");
        ok &= check(out, "decorated example without / with the extra edge", verdicts,
                    "not-expander / expander");
    }

    return ok;
}

} // namespace gq
