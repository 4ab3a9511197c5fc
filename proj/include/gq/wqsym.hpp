#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gq/rational.hpp"
#include "gq/setcomp.hpp"

namespace gq {

enum class Basis { M, L, F, N };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& s);

// Sparse exact-rational linear combination in one homogeneous degree of
// WQSym, expressed in a single basis. Keys are canonical encodings:
// set compositions for M and N, descent-starred permutations for L and F.
// Vectors in different bases never add implicitly; convert via to_M.
struct WqsymVec {
    int degree = 0;
    Basis basis = Basis::M;
    std::map<std::string, Rat> terms;

    WqsymVec() = default;
    WqsymVec(int deg, Basis b) : degree(deg), basis(b) {}

    void add(const std::string& key, const Rat& c);
    bool is_zero() const { return terms.empty(); }
    WqsymVec& operator+=(const WqsymVec& o);
    WqsymVec& operator-=(const WqsymVec& o);
    WqsymVec& operator*=(const Rat& c);
    bool operator==(const WqsymVec&) const = default;

    std::string json() const;
};

struct QsymVec {
    int degree = 0;
    std::map<std::string, Rat> terms; // keyed by IntegerComposition::str()

    void add(const std::string& key, const Rat& c);
    bool is_zero() const { return terms.empty(); }
    QsymVec& operator+=(const QsymVec& o);
    bool operator==(const QsymVec&) const = default;

    std::string json() const;
};

// L_(sigma,D) expanded in the M basis: unit coefficient on every adjacent
// coarsening of the associated set composition.
WqsymVec L_in_M(const DStarPerm& p);

// F_(sigma,D) = sum_{D' subset of D} (-1)^{|D'|} L_(sigma,D'), keyed in L.
WqsymVec F_in_L(const DStarPerm& p);

// Re-express any vector in the M basis.
WqsymVec to_M(const WqsymVec& v);

// Commutative projection: M_I -> M_{phi_c(I)}.
QsymVec project_qsym(const WqsymVec& v);

// Rank of the coefficient matrix in the M basis, exact rational arithmetic.
int rank_over_rationals(const std::vector<WqsymVec>& vs);

// Exact coefficients of target in the span of family, or nullopt.
std::optional<std::vector<Rat>> solve_in_family(const WqsymVec& target,
                                                const std::vector<WqsymVec>& family);

// Brute-force truncated word expansions: the defining summations restricted
// to words over {1..m}^n. First-class testing operations.
using WordMap = std::map<std::vector<int>, Rat>;

WordMap word_expansion_M(const SetComposition& I, int m);
// Inequality-table expansion for the M/L/F families indexed by a
// descent-starred permutation.
WordMap word_expansion_dstar(Basis b, const DStarPerm& p, int m);
WordMap word_expansion_N(const SetComposition& K, int m);
// Linear extension over any vector (converted to M internally).
WordMap word_expansion(const WqsymVec& v, int m);

// Generic exact elimination helpers shared with the graph-side rank
// computations.
// stop_at >= 0 returns early once that rank is reached (for large sweeps
// where the target rank is known in advance).
int rank_of_rows(const std::vector<std::map<std::string, Rat>>& rows, int stop_at = -1);
std::optional<std::vector<Rat>> solve_rows(const std::map<std::string, Rat>& target,
                                           const std::vector<std::map<std::string, Rat>>& family);

} // namespace gq
