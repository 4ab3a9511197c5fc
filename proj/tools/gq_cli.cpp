#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gq/bipartite.hpp"
#include "gq/gamma.hpp"
#include "gq/kerov.hpp"
#include "gq/rewrite.hpp"
#include "selftest.hpp"

using namespace gq;

namespace {

Digraph load_graph(const std::string& path, bool allow_cycles = false) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    (void)allow_cycles;
    return Digraph::parse_file(buf.str());
}

std::vector<DStarPerm> all_dstar_sorted(int n) {
    if (n > 6) throw std::invalid_argument("basis enumeration capped at degree 6");
    std::vector<DStarPerm> out;
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    do {
        std::vector<int> desc;
        for (int x = 1; x < n; ++x)
            if (w[x - 1] > w[x]) desc.push_back(x);
        for (unsigned mask = 0; mask < (1u << desc.size()); ++mask) {
            std::set<int> stars;
            for (std::size_t i = 0; i < desc.size(); ++i)
                if ((mask >> i) & 1u) stars.insert(desc[i]);
            out.emplace_back(w, stars);
        }
    } while (std::next_permutation(w.begin(), w.end()));
    std::sort(out.begin(), out.end(),
              [](const DStarPerm& a, const DStarPerm& b) { return a.str() < b.str(); });
    return out;
}

void print_wqsym(const WqsymVec& v, bool json) {
    if (json) {
        std::cout << v.json() << "\n";
        return;
    }
    for (const auto& [key, c] : v.terms)
        std::cout << basis_name(v.basis) << "[" << key << "] " << rat_to_string(c) << "\n";
}

void print_graphvec(const GraphVec& v, bool json) {
    if (json) {
        std::cout << v.json() << "\n";
        return;
    }
    for (const auto& [g, c] : v.terms) std::cout << rat_to_string(c) << " * " << g.str() << "\n";
}

WqsymVec expand_in_dstar_basis(const WqsymVec& target, int n, Basis basis) {
    std::vector<DStarPerm> keys = all_dstar_sorted(n);
    std::vector<WqsymVec> family;
    for (const auto& p : keys) {
        WqsymVec e(n, basis);
        e.add(p.str(), 1);
        family.push_back(to_M(e));
    }
    auto sol = solve_in_family(target, family);
    if (!sol) throw std::invalid_argument("vector is outside the requested basis span");
    WqsymVec out(n, basis);
    for (std::size_t i = 0; i < keys.size(); ++i)
        if ((*sol)[i] != 0) out.add(keys[i].str(), (*sol)[i]);
    return out;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"exact quasi-symmetric images of acyclic digraphs"};
    app.require_subcommand(1);
    bool json = false;
    int threads = 1;
    app.add_flag("--json", json, "machine-readable output");
    app.add_option("--threads", threads, "shard enumerations (identical output)");

    std::string graph_path, basis_str = "M", mode_str = "all", mu_str, nu_str;
    int n = 0, max_len = 0;
    bool bipartite = false, trace = false, table = false;

    auto* c_gamma = app.add_subcommand("gamma", "expand the image of a graph in a basis");
    c_gamma->add_option("--graph", graph_path, "graph file")->required();
    c_gamma->add_option("--basis", basis_str, "M, L, F or N");

    auto* c_cie = app.add_subcommand("cie", "cyclic inclusion-exclusion elements of a graph");
    c_cie->add_option("--graph", graph_path, "graph file")->required();
    c_cie->add_option("--max-len", max_len, "maximum cycle length");

    auto* c_reduce = app.add_subcommand("reduce", "rewrite into the canonical family modulo the relation span");
    c_reduce->add_option("--graph", graph_path, "graph file")->required();
    c_reduce->add_flag("--bipartite", bipartite, "target the bipartite family");
    c_reduce->add_flag("--trace", trace, "print each rewrite step");

    auto* c_rank = app.add_subcommand("kernel-rank", "rank of the relation span in one degree");
    c_rank->add_option("--n", n, "number of vertices")->required();
    c_rank->add_option("--mode", mode_str, "all or short");
    c_rank->add_flag("--bipartite", bipartite, "restrict to bipartite graphs");

    auto* c_nexp = app.add_subcommand("n-expand", "N-basis expansion of a bipartite graph image");
    c_nexp->add_option("--graph", graph_path, "graph file")->required();

    auto* c_kerov = app.add_subcommand("kerov", "character polynomial coefficients");
    c_kerov->add_option("--mu", mu_str, "partition, e.g. 3 or 2,2")->required();
    c_kerov->add_option("--nu", nu_str, "cumulant index partition");
    c_kerov->add_flag("--table", table, "all admissible nu");

    auto* c_bases = app.add_subcommand("bases", "M-expansions of a basis family in one degree");
    c_bases->add_option("--n", n, "degree")->required();
    c_bases->add_option("--basis", basis_str, "L, F or N");

    app.add_subcommand("selftest", "reproduce the built-in worked examples");

    app.parse(argc, argv);

    if (c_gamma->parsed()) {
        Digraph g = load_graph(graph_path);
        Basis basis = basis_from_name(basis_str);
        WqsymVec m = gamma_nc(g);
        if (basis == Basis::M) {
            print_wqsym(m, json);
        } else if (basis == Basis::N) {
            print_wqsym(n_expansion(g, threads), json);
        } else {
            print_wqsym(expand_in_dstar_basis(m, g.n(), basis), json);
        }
    } else if (c_cie->parsed()) {
        Digraph g = load_graph(graph_path);
        int cap = max_len > 0 ? max_len : g.n();
        bool first = true;
        if (json) std::cout << "[";
        for (const auto& C : undirected_cycles(g, cap)) {
            GraphVec v = cie(g, C);
            if (json) {
                std::cout << (first ? "" : ",") << v.json();
                first = false;
                continue;
            }
            std::cout << "cycle";
            for (int x : C.vertices) std::cout << " " << x;
            std::cout << " | C+:";
            for (auto [a, b] : C.plus_edges) std::cout << " " << a << ">" << b;
            std::cout << " | C-:";
            for (auto [a, b] : C.minus_edges) std::cout << " " << a << ">" << b;
            std::cout << " | terms=" << v.terms.size() << "\n";
        }
        if (json) std::cout << "]\n";
    } else if (c_reduce->parsed()) {
        Digraph g = load_graph(graph_path);
        std::vector<std::string> steps;
        GraphVec v = bipartite ? reduce_bipartite_to_BIJ(g, trace ? &steps : nullptr)
                               : reduce_to_GI(g, trace ? &steps : nullptr);
        for (const auto& s : steps) std::cout << "# " << s << "\n";
        print_graphvec(v, json);
    } else if (c_rank->parsed()) {
        CycleMode mode;
        if (mode_str == "all")
            mode = CycleMode::All;
        else if (mode_str == "short")
            mode = CycleMode::Short;
        else
            throw CLI::ValidationError("--mode must be all or short");
        std::cout << cie_span_rank(n, mode, bipartite, -1, threads) << "\n";
    } else if (c_nexp->parsed()) {
        print_wqsym(n_expansion(load_graph(graph_path), threads), json);
    } else if (c_kerov->parsed()) {
        Partition mu = Partition::parse(mu_str);
        if (table) {
            int bound = mu.size() + mu.length();
            GraphVec g = G_Ch(mu);
            std::vector<int> cur;
            auto rec = [&](auto&& self, int mx, int left) -> void {
                if (!cur.empty()) {
                    Partition nu(cur);
                    Int c = 0;
                    if (nu.length() % 2 == 0)
                        c = numerator(I_nu(g, nu));
                    else
                        c = -numerator(I_nu(g, nu));
                    if (c != 0) std::cout << "nu=" << nu.str() << " coeff=" << c << "\n";
                }
                for (int next = std::min(mx, left - 1); next >= 1; --next) {
                    cur.push_back(next);
                    self(self, next, left - next - 1);
                    cur.pop_back();
                }
            };
            rec(rec, bound, bound);
        } else {
            if (nu_str.empty()) throw CLI::ValidationError("kerov needs --nu or --table");
            std::cout << kerov_coeff(mu, Partition::parse(nu_str)) << "\n";
        }
    } else if (c_bases->parsed()) {
        Basis basis = basis_from_name(basis_str);
        if (basis == Basis::N) {
            if (n > 6) throw std::invalid_argument("basis enumeration capped at degree 6");
            for (const auto& K : enumerate_setcomps(n)) {
                WqsymVec e(n, Basis::N);
                e.add(K.str(), 1);
                std::cout << "N[" << K.str() << "] = ";
                print_wqsym(to_M(e), json);
            }
        } else if (basis == Basis::L || basis == Basis::F) {
            for (const auto& p : all_dstar_sorted(n)) {
                WqsymVec e(n, basis);
                e.add(p.str(), 1);
                std::cout << basis_name(basis) << "[" << p.str() << "] = ";
                print_wqsym(to_M(e), json);
            }
        } else {
            throw CLI::ValidationError("--basis must be L, F or N");
        }
    } else { // selftest
        if (!run_selftest(std::cout)) return 3;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const CLI::ParseError& e) {
        CLI::App dummy;
        dummy.exit(e); // prints the message
        return e.get_exit_code() == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
