#include "gq/wqsym.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gq/bipartite.hpp"

namespace gq {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::M: return "M";
        case Basis::L: return "L";
        case Basis::F: return "F";
        case Basis::N: return "N";
    }
    return "?";
}

Basis basis_from_name(const std::string& s) {
    if (s == "M") return Basis::M;
    if (s == "L") return Basis::L;
    if (s == "F") return Basis::F;
    if (s == "N") return Basis::N;
    throw std::invalid_argument("unknown basis: " + s);
}

void WqsymVec::add(const std::string& key, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

WqsymVec& WqsymVec::operator+=(const WqsymVec& o) {
    if (basis != o.basis || (degree != o.degree && !o.is_zero() && !is_zero()))
        throw std::invalid_argument("WqsymVec: basis/degree mismatch in addition");
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
}

WqsymVec& WqsymVec::operator-=(const WqsymVec& o) {
    if (basis != o.basis || (degree != o.degree && !o.is_zero() && !is_zero()))
        throw std::invalid_argument("WqsymVec: basis/degree mismatch in subtraction");
    for (const auto& [k, c] : o.terms) add(k, -c);
    return *this;
}

WqsymVec& WqsymVec::operator*=(const Rat& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [k, v] : terms) v *= c;
    return *this;
}

static std::string terms_json(const std::map<std::string, Rat>& terms) {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (const auto& [k, c] : terms) {
        if (!first) out << ",";
        first = false;
        out << "[\"" << k << "\",\"" << rat_to_string(c) << "\"]";
    }
    out << "]";
    return out.str();
}

std::string WqsymVec::json() const {
    std::ostringstream out;
    out << "{\"basis\":\"" << basis_name(basis) << "\",\"degree\":" << degree
        << ",\"terms\":" << terms_json(terms) << "}";
    return out.str();
}

void QsymVec::add(const std::string& key, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

QsymVec& QsymVec::operator+=(const QsymVec& o) {
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
}

std::string QsymVec::json() const {
    std::ostringstream out;
    out << "{\"basis\":\"M\",\"degree\":" << degree << ",\"terms\":" << terms_json(terms) << "}";
    return out.str();
}

WqsymVec L_in_M(const DStarPerm& p) {
    SetComposition I = from_dstar(p);
    WqsymVec out(p.n(), Basis::M);
    for (const auto& J : adjacent_coarsenings(I)) out.add(J.str(), 1);
    return out;
}

WqsymVec F_in_L(const DStarPerm& p) {
    std::vector<int> stars(p.stars().begin(), p.stars().end());
    int s = static_cast<int>(stars.size());
    WqsymVec out(p.n(), Basis::L);
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
        std::set<int> sub;
        for (int i = 0; i < s; ++i)
            if ((mask >> i) & 1u) sub.insert(stars[i]);
        int sign = (sub.size() % 2 == 0) ? 1 : -1;
        out.add(DStarPerm(p.word(), sub).str(), sign);
    }
    return out;
}

WqsymVec to_M(const WqsymVec& v) {
    if (v.basis == Basis::M) return v;
    WqsymVec out(v.degree, Basis::M);
    for (const auto& [key, c] : v.terms) {
        if (v.basis == Basis::L) {
            WqsymVec m = L_in_M(DStarPerm::parse(key));
            m *= c;
            out += m;
        } else if (v.basis == Basis::F) {
            WqsymVec l = F_in_L(DStarPerm::parse(key));
            for (const auto& [lk, lc] : l.terms) {
                WqsymVec m = L_in_M(DStarPerm::parse(lk));
                m *= lc * c;
                out += m;
            }
        } else { // N
            WqsymVec m = N_in_M(split_semilength(SetComposition::parse(key)), v.degree);
            m *= c;
            out += m;
        }
    }
    return out;
}

QsymVec project_qsym(const WqsymVec& v) {
    WqsymVec m = to_M(v);
    QsymVec out;
    out.degree = v.degree;
    for (const auto& [key, c] : m.terms)
        out.add(phi_c(SetComposition::parse(key)).str(), c);
    return out;
}

int rank_of_rows(const std::vector<std::map<std::string, Rat>>& rows, int stop_at) {
    // echelon basis keyed by pivot
    std::map<std::string, std::map<std::string, Rat>> basis;
    int rank = 0;
    for (const auto& r : rows) {
        if (stop_at >= 0 && rank >= stop_at) break;
        std::map<std::string, Rat> row = r;
        while (!row.empty()) {
            const std::string piv = row.begin()->first;
            auto it = basis.find(piv);
            if (it == basis.end()) {
                basis.emplace(piv, std::move(row));
                ++rank;
                break;
            }
            Rat factor = row.begin()->second / it->second.begin()->second;
            for (const auto& [k, c] : it->second) {
                auto jt = row.find(k);
                if (jt == row.end()) {
                    row.emplace(k, -factor * c);
                } else {
                    jt->second -= factor * c;
                    if (jt->second == 0) row.erase(jt);
                }
            }
        }
    }
    return rank;
}

std::optional<std::vector<Rat>> solve_rows(const std::map<std::string, Rat>& target,
                                           const std::vector<std::map<std::string, Rat>>& family) {
    // Dense Gaussian elimination on the (keys x family) matrix augmented
    // with the target column.
    std::set<std::string> keyset;
    for (const auto& [k, c] : target) keyset.insert(k);
    for (const auto& f : family)
        for (const auto& [k, c] : f) keyset.insert(k);
    std::vector<std::string> keys(keyset.begin(), keyset.end());
    std::map<std::string, int> keyidx;
    for (std::size_t i = 0; i < keys.size(); ++i) keyidx[keys[i]] = static_cast<int>(i);

    int nrows = static_cast<int>(keys.size());
    int ncols = static_cast<int>(family.size());
    std::vector<std::vector<Rat>> A(nrows, std::vector<Rat>(ncols + 1));
    for (int j = 0; j < ncols; ++j)
        for (const auto& [k, c] : family[j]) A[keyidx[k]][j] = c;
    for (const auto& [k, c] : target) A[keyidx[k]][ncols] = c;

    std::vector<int> pivot_col_of_row(nrows, -1);
    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int sel = -1;
        for (int i = row; i < nrows; ++i)
            if (A[i][col] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(A[sel], A[row]);
        Rat inv = A[row][col];
        for (int j = col; j <= ncols; ++j) A[row][j] /= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == row || A[i][col] == 0) continue;
            Rat f = A[i][col];
            for (int j = col; j <= ncols; ++j) A[i][j] -= f * A[row][j];
        }
        pivot_col_of_row[row] = col;
        ++row;
    }
    // consistency: no row of the form (0..0 | nonzero)
    for (int i = row; i < nrows; ++i)
        if (A[i][ncols] != 0) return std::nullopt;
    std::vector<Rat> sol(ncols, Rat(0));
    for (int i = 0; i < row; ++i) sol[pivot_col_of_row[i]] = A[i][ncols];
    return sol;
}

int rank_over_rationals(const std::vector<WqsymVec>& vs) {
    std::vector<std::map<std::string, Rat>> rows;
    rows.reserve(vs.size());
    for (const auto& v : vs) rows.push_back(to_M(v).terms);
    return rank_of_rows(rows);
}

std::optional<std::vector<Rat>> solve_in_family(const WqsymVec& target,
                                                const std::vector<WqsymVec>& family) {
    std::vector<std::map<std::string, Rat>> rows;
    rows.reserve(family.size());
    for (const auto& v : family) rows.push_back(to_M(v).terms);
    return solve_rows(to_M(target).terms, rows);
}

namespace {

template <typename Pred>
WordMap expand_words(int n, int m, Pred&& keep) {
    WordMap out;
    std::vector<int> w(n, 1);
    while (true) {
        if (keep(w)) out[w] = 1;
        int i = n - 1;
        while (i >= 0 && w[i] == m) w[i--] = 1;
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

} // namespace

WordMap word_expansion_M(const SetComposition& I, int m) {
    return expand_words(I.n(), m, [&](const std::vector<int>& w) { return delta_of_word(w) == I; });
}

WordMap word_expansion_dstar(Basis b, const DStarPerm& p, int m) {
    if (b == Basis::N) throw std::invalid_argument("N is not indexed by descent-starred permutations");
    const auto& sigma = p.word();
    int n = p.n();
    return expand_words(n, m, [&](const std::vector<int>& k) {
        for (int x = 1; x < n; ++x) {
            int a = k[sigma[x - 1] - 1], c = k[sigma[x] - 1];
            bool starred = p.stars().count(x) > 0;
            bool ok;
            switch (b) {
                case Basis::M: ok = starred ? (a == c) : (a < c); break;
                case Basis::L: ok = starred ? (a == c) : (a <= c); break;
                default: ok = starred ? (a < c) : (a <= c); break; // F
            }
            if (!ok) return false;
        }
        return true;
    });
}

WordMap word_expansion_N(const SetComposition& K, int m) {
    SemiLengthView v = split_semilength(K);
    int r = v.semi_length();
    return expand_words(K.n(), m, [&](const std::vector<int>& k) {
        for (int idx = 0; idx < r; ++idx) {
            for (int x : v.I_blocks[idx])
                for (int y : v.J_blocks[idx])
                    if (k[x - 1] > k[y - 1]) return false;
            if (idx + 1 < r)
                for (int x : v.J_blocks[idx])
                    for (int y : v.I_blocks[idx + 1])
                        if (k[x - 1] >= k[y - 1]) return false;
        }
        return true;
    });
}

WordMap word_expansion(const WqsymVec& v, int m) {
    WqsymVec mv = to_M(v);
    WordMap out;
    for (const auto& [key, c] : mv.terms) {
        for (auto& [w, one] : word_expansion_M(SetComposition::parse(key), m)) {
            auto it = out.find(w);
            if (it == out.end()) {
                out.emplace(w, c);
            } else {
                it->second += c;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

} // namespace gq
