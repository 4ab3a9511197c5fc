#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gq/gamma.hpp"
#include "gq/kerov.hpp"
#include "gq/rewrite.hpp"
#include "oracle.hpp"

using namespace gq;

namespace {

// figure-style example: three decorated centers over six leaves
Digraph expander_example(bool with_extra_edge) {
    std::vector<Edge> edges{{5, 1}, {5, 2}, {3, 1}, {3, 2}, {3, 9}, {8, 1}, {8, 4}, {8, 6}, {8, 7}};
    if (with_extra_edge) edges.push_back({3, 4});
    return Digraph(9, std::move(edges));
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> pq_cases() {
    return {{{2}, {1}}, {{1, 1}, {1, 1}}, {{2, 1}, {2, 1}}, {{1, 2}, {2, 1}}, {{3, 1}, {1, 2}}};
}

std::vector<Rat> rats(const std::vector<int>& v) { return std::vector<Rat>(v.begin(), v.end()); }

} // namespace

TEST_CASE("partitions and permutation utilities") {
    Partition mu = Partition::parse("3,1,2");
    CHECK(mu.str() == "3,2,1");
    CHECK(mu.size() == 6);
    CHECK(mu.length() == 3);
    CHECK_THROWS(Partition({1, 2}));

    Perm c = canonical_of_type(Partition({3, 2}));
    CHECK(c == Perm{2, 3, 1, 5, 4});
    CHECK(cycles_of(c) == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5}});
    CHECK(num_cycles(c) == 2);
    CHECK(compose(c, inverse(c)) == Perm{1, 2, 3, 4, 5});

    Digraph b = graph_of_pair(c, Perm{1, 2, 3, 4, 5});
    CHECK(b.n() == 7);
    CHECK(b.edges() == std::vector<Edge>{{1, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}});
}

TEST_CASE("expander recognition") {
    DecoratedGraph g{expander_example(false), {{5, 1}, {3, 2}, {8, 3}}};
    // N({3,5}) = {1,2,9} has size exactly h(3)+h(5): not an expander
    CHECK(!is_expander(g));
    DecoratedGraph g2{expander_example(true), {{5, 1}, {3, 2}, {8, 3}}};
    CHECK(is_expander(g2));
    // totals must match per component
    DecoratedGraph g3{expander_example(true), {{5, 2}, {3, 2}, {8, 3}}};
    CHECK(!is_expander(g3));
    CHECK_THROWS(is_expander(DecoratedGraph{expander_example(true), {{5, 1}, {3, 2}}}));
}

TEST_CASE("forest criterion matches the general definition") {
    CHECK_THROWS(tree_expander_characterization(
        DecoratedGraph{Digraph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}), {{1, 1}, {2, 1}}}));
    for (int n = 1; n <= 5; ++n)
        for (const auto& b : enumerate_bipartite(n)) {
            if (!undirected_cycles(b, n).empty()) continue;
            Bipartition bp = canonical_bipartition(b);
            int s = static_cast<int>(bp.V.size());
            int top = std::max(1, static_cast<int>(bp.W.size()));
            std::vector<int> h(s, 1);
            while (true) {
                DecoratedGraph dg{b, {}};
                for (int i = 0; i < s; ++i) dg.h[bp.V[i]] = h[i];
                CHECK(tree_expander_characterization(dg) == is_expander(dg));
                int i = 0;
                while (i < s && h[i] == top) h[i++] = 1;
                if (i == s) break;
                ++h[i];
            }
        }
}

TEST_CASE("cumulant graphs") {
    for (int k1 = 2; k1 <= 5; ++k1) {
        GraphVec g = G_R(k1);
        CHECK(I_nu(g, Partition({k1 - 1})) == Rat(-1));
        for (const auto& [p, q] : pq_cases()) {
            Partition la = oracle::lambda_of_pq(p, q);
            CHECK(delta_eval(g, rats(p), rats(q)) == oracle::free_cumulants(la, k1)[k1]);
        }
    }
}

TEST_CASE("character graphs evaluate to normalized characters") {
    for (const auto& mp : std::vector<std::vector<int>>{{1}, {2}, {3}, {4}, {2, 1}, {2, 2}, {3, 2}}) {
        Partition mu(mp);
        GraphVec g = G_Ch(mu);
        for (const auto& [p, q] : pq_cases())
            CHECK(delta_eval(g, rats(p), rats(q)) ==
                  oracle::normalized_character(mu, oracle::lambda_of_pq(p, q)));
    }
}

TEST_CASE("antisorting rule for products of cumulant graphs") {
    GraphVec prod = graphvec_product(G_R(4), G_R(2));
    CHECK(I_nu(prod, Partition({3, 1})) == Rat(1));
    CHECK(I_nu(prod, Partition({2, 2})) == Rat(0));
    CHECK(I_nu(prod, Partition({4})) == Rat(0));
    GraphVec triple = graphvec_product(prod, G_R(3));
    CHECK(I_nu(triple, Partition({3, 2, 1})) == Rat(-1));
    CHECK(I_nu(triple, Partition({3, 1, 1})) == Rat(0));
}

TEST_CASE("coefficients of the character polynomials") {
    // enumerate all nu of weighted degree sum(nu_i + 1) within the grading
    // bound and compare against the independently solved polynomial
    for (int k = 2; k <= 4; ++k) {
        Partition mu({k});
        auto poly = oracle::kerov_polynomial(mu);
        for (int wt = 0; wt <= k + 1; ++wt)
            for (const Partition& nu : oracle::partitions_of(wt)) {
                if (nu.length() == 0) continue;
                std::vector<int> key;
                for (int i = nu.length() - 1; i >= 0; --i) key.push_back(nu.parts[i] + 1);
                Rat expect = poly.count(key) ? poly.at(key) : 0;
                Int got = kerov_coeff(mu, nu);
                CHECK(Rat(got) == expect);
                CHECK(got >= 0); // one-part mu: non-negative coefficients
            }
    }
    // known closed forms
    CHECK(kerov_coeff(Partition({2}), Partition({2})) == 1);
    CHECK(kerov_coeff(Partition({3}), Partition({3})) == 1);
    CHECK(kerov_coeff(Partition({3}), Partition({1})) == 1);
    CHECK(kerov_coeff(Partition({4}), Partition({4})) == 1);
    CHECK(kerov_coeff(Partition({4}), Partition({2})) == 5);
    CHECK(kerov_coeff(Partition({4}), Partition({1, 1})) == 0);
}

TEST_CASE("oracle self-checks") {
    CHECK(oracle::dim(Partition({3, 2})) == 5);
    CHECK(oracle::character(Partition({2, 1}), Partition({3})) == -1);
    CHECK(oracle::character(Partition({2, 2}), Partition({2, 1, 1})) == 0);
    CHECK(oracle::free_cumulants(Partition({1}), 2)[2] == 1);
    for (const Partition& la : oracle::partitions_of(5))
        CHECK(oracle::free_cumulants(la, 2)[2] == 5); // R_2 = size
    CHECK(oracle::partitions_of(8).size() == 22);
    CHECK(oracle::lambda_of_pq({2, 1}, {2, 1}).str() == "3,3,1");
}
