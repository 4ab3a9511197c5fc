#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gq/gamma.hpp"

using namespace gq;

TEST_CASE("image of a single graph in the M basis") {
    // empty graph: all set compositions appear
    WqsymVec v = gamma_nc(Digraph(2, {}));
    CHECK(v.terms == std::map<std::string, Rat>{{"12", 1}, {"1|2", 1}, {"2|1", 1}});
    // one edge forces the order
    WqsymVec w = gamma_nc(Digraph(2, {{1, 2}}));
    CHECK(w.terms == std::map<std::string, Rat>{{"12", 1}, {"1|2", 1}});
}

TEST_CASE("agreement with direct word enumeration") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& G : enumerate_acyclic(n))
            for (int m = 1; m <= 4; ++m) CHECK(word_expansion(gamma_nc(G), m) == gamma_nc_words(G, m));
}

TEST_CASE("canonical graphs G_I") {
    SetComposition I = SetComposition::parse("15|346|2");
    Digraph g = graph_GI(I);
    CHECK(g.n() == 6);
    CHECK(g.edges().size() == 2 + 3 + 6); // 1x3 blocks: 2*3 + 2*1 + 3*1
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(5, 2));
    CHECK(!g.has_edge(3, 4));
    CHECK(graph_GI(SetComposition::parse("123")).edges().empty());
}

TEST_CASE("the descent-starred index set of G_I") {
    auto mp = mp_set(SetComposition::parse("15|346|2"));
    std::set<std::string> got;
    for (const auto& p : mp) got.insert(p.str());
    std::set<std::string> expect{
        "153462", "5*13462", "154*362", "5*14*362", "156*4*32", "5*16*4*32",
        "1536*42", "5*136*42", "1546*32", "5*146*32", "156*342",  "5*16*342"};
    CHECK(got == expect);
    CHECK(mp.size() == 12);

    // F-expansion equals the graph image, for every I of small degree
    for (int n = 1; n <= 4; ++n)
        for (const auto& I : enumerate_setcomps(n))
            CHECK(to_M(gamma_GI_in_F(I)).terms == gamma_nc(graph_GI(I)).terms);
}

TEST_CASE("simple F-expansion of a single block") {
    auto mp = mp_set(SetComposition::parse("12"));
    std::set<std::string> got;
    for (const auto& p : mp) got.insert(p.str());
    CHECK(got == std::set<std::string>{"12", "2*1"});
}

TEST_CASE("the graph images form a basis") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<WqsymVec> fam;
        for (const auto& I : enumerate_setcomps(n)) fam.push_back(gamma_nc(graph_GI(I)));
        CHECK(Int(rank_over_rationals(fam)) == ordered_bell(n));
    }
}

TEST_CASE("relabeling invariance of the commutative image") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5); // up to 6
        std::vector<Edge> edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Digraph g(n, std::move(edges));
        std::vector<int> sigma(n + 1);
        for (int i = 1; i <= n; ++i) sigma[i] = i;
        std::shuffle(sigma.begin() + 1, sigma.end(), rng);
        Digraph h = g.relabeled(sigma);
        CHECK(gamma_unlabeled(g) == gamma_unlabeled(h));
    }
}

TEST_CASE("two-alphabet refinement") {
    Digraph e(2, {{1, 2}});
    BiPolynomial p1 = delta_two_alphabet(e, 1);
    CHECK(p1.terms.size() == 1); // p_1 q_1
    CHECK(p1.terms.at({{1}, {1}}) == Int(1));

    BiPolynomial p2 = delta_two_alphabet(e, 2);
    CHECK(p2.terms.size() == 3); // p1q1 + p1q2 + p2q2
    CHECK(p2.terms.at({{1, 0}, {1, 0}}) == Int(1));
    CHECK(p2.terms.at({{1, 0}, {0, 1}}) == Int(1));
    CHECK(p2.terms.at({{0, 1}, {0, 1}}) == Int(1));

    // vertex 1 isolated -> V side
    BiPolynomial lone = delta_two_alphabet(Digraph(1, {}), 2);
    CHECK(lone.terms.size() == 2); // p_1 + p_2

    // p = q = x collapses to the one-alphabet evaluation
    std::vector<Rat> x{2, 3, Rat(1, 2)};
    Digraph b(4, {{1, 3}, {2, 3}, {2, 4}});
    // evaluate commutative image at (x1,x2,x3) truncation by brute force
    Rat direct = 0;
    for (auto& [w, one] : gamma_nc_words(b, 3)) {
        Rat mono = 1;
        for (int letter : w) mono *= x[letter - 1];
        direct += mono;
    }
    CHECK(delta_eval(b, x, x) == direct);
    CHECK(delta_two_alphabet(b, 3).eval(x, x) == direct);
}

TEST_CASE("canonical bipartition") {
    Digraph b(4, {{1, 3}, {2, 3}});
    Bipartition bp = canonical_bipartition(b);
    CHECK(bp.V == std::vector<int>{1, 2, 4}); // isolated 4 goes to V
    CHECK(bp.W == std::vector<int>{3});
    CHECK_THROWS(canonical_bipartition(Digraph(3, {{1, 2}, {2, 3}})));
}
