#include "gq/setcomp.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "gq/rational.hpp"

namespace gq {

SetComposition::SetComposition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)), pos_(n + 1, 0) {
    int seen = 0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        auto& blk = blocks_[b];
        if (blk.empty()) throw std::invalid_argument("empty block in set composition");
        std::sort(blk.begin(), blk.end());
        for (int x : blk) {
            if (x < 1 || x > n) throw std::invalid_argument("element out of range");
            if (pos_[x] != 0) throw std::invalid_argument("repeated element in set composition");
            pos_[x] = static_cast<int>(b) + 1;
            ++seen;
        }
    }
    if (seen != n) throw std::invalid_argument("blocks do not cover {1..n}");
}

std::string SetComposition::str() const {
    std::ostringstream out;
    bool commas = n_ > 9;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) out << '|';
        for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
            if (commas && i) out << ',';
            out << blocks_[b][i];
        }
    }
    return out.str();
}

SetComposition SetComposition::parse(const std::string& s) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> cur;
    bool commas = s.find(',') != std::string::npos;
    int n = 0;
    std::size_t i = 0;
    while (i <= s.size()) {
        if (i == s.size() || s[i] == '|') {
            blocks.push_back(cur);
            cur.clear();
            ++i;
            continue;
        }
        if (s[i] == ',') { ++i; continue; }
        if (!isdigit(static_cast<unsigned char>(s[i]))) throw std::invalid_argument("bad set composition: " + s);
        if (commas) {
            std::size_t j = i;
            while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
            cur.push_back(std::stoi(s.substr(i, j - i)));
            i = j;
        } else {
            cur.push_back(s[i] - '0');
            ++i;
        }
        n = std::max(n, cur.back());
    }
    return SetComposition(n, std::move(blocks));
}

std::string IntegerComposition::str() const {
    bool commas = false;
    for (int p : parts)
        if (p > 9) commas = true;
    std::ostringstream out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (commas && i) out << ',';
        out << parts[i];
    }
    return out.str();
}

DStarPerm::DStarPerm(std::vector<int> word, std::set<int> stars)
    : word_(std::move(word)), stars_(std::move(stars)) {
    int n = static_cast<int>(word_.size());
    std::vector<char> seen(n + 1, 0);
    for (int x : word_) {
        if (x < 1 || x > n || seen[x]) throw std::invalid_argument("not a permutation word");
        seen[x] = 1;
    }
    for (int x : stars_) {
        if (x < 1 || x >= n) throw std::invalid_argument("star position out of range");
        if (word_[x - 1] <= word_[x]) throw std::invalid_argument("starred position is not a descent");
    }
}

std::string DStarPerm::str() const {
    bool commas = n() > 9;
    std::ostringstream out;
    for (int i = 0; i < n(); ++i) {
        if (commas && i) out << ',';
        out << word_[i];
        if (stars_.count(i + 1)) out << '*';
    }
    return out.str();
}

DStarPerm DStarPerm::parse(const std::string& s) {
    bool commas = s.find(',') != std::string::npos;
    std::vector<int> word;
    std::set<int> stars;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ',') { ++i; continue; }
        if (s[i] == '*') {
            if (word.empty()) throw std::invalid_argument("bad descent-starred permutation: " + s);
            stars.insert(static_cast<int>(word.size()));
            ++i;
            continue;
        }
        if (!isdigit(static_cast<unsigned char>(s[i]))) throw std::invalid_argument("bad descent-starred permutation: " + s);
        if (commas) {
            std::size_t j = i;
            while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
            word.push_back(std::stoi(s.substr(i, j - i)));
            i = j;
        } else {
            word.push_back(s[i] - '0');
            ++i;
        }
    }
    return DStarPerm(std::move(word), std::move(stars));
}

SetComposition SemiLengthView::to_setcomp(int n) const {
    std::vector<std::vector<int>> blocks;
    for (std::size_t m = 0; m < I_blocks.size(); ++m) {
        blocks.push_back(I_blocks[m]);
        if (m + 1 < J_blocks.size() || !J_blocks[m].empty()) blocks.push_back(J_blocks[m]);
    }
    return SetComposition(n, std::move(blocks));
}

std::string SemiLengthView::str() const {
    auto side = [](const std::vector<std::vector<int>>& bs) {
        std::ostringstream out;
        for (std::size_t i = 0; i < bs.size(); ++i) {
            if (i) out << '|';
            for (int x : bs[i]) out << x;
        }
        return out.str();
    };
    return "(" + side(I_blocks) + "," + side(J_blocks) + ")";
}

SetComposition delta_of_word(const std::vector<int>& w) {
    if (w.empty()) throw std::invalid_argument("delta_of_word: empty word");
    std::set<int> values(w.begin(), w.end());
    std::vector<int> sorted(values.begin(), values.end());
    std::vector<std::vector<int>> blocks(sorted.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
        // rank = number of distinct letter values <= w[j]
        int rank = static_cast<int>(std::upper_bound(sorted.begin(), sorted.end(), w[j]) - sorted.begin());
        blocks[rank - 1].push_back(static_cast<int>(j) + 1);
    }
    return SetComposition(static_cast<int>(w.size()), std::move(blocks));
}

IntegerComposition phi_c(const SetComposition& I) {
    IntegerComposition out;
    for (const auto& b : I.blocks()) out.parts.push_back(static_cast<int>(b.size()));
    return out;
}

DStarPerm to_dstar(const SetComposition& I) {
    std::vector<int> word;
    std::set<int> stars;
    for (const auto& b : I.blocks()) {
        for (auto it = b.rbegin(); it != b.rend(); ++it) {
            if (!word.empty() && it != b.rbegin()) stars.insert(static_cast<int>(word.size()));
            word.push_back(*it);
        }
    }
    return DStarPerm(std::move(word), std::move(stars));
}

SetComposition from_dstar(const DStarPerm& p) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> cur;
    for (int i = 0; i < p.n(); ++i) {
        if (!cur.empty() && !p.stars().count(i)) {
            blocks.push_back(cur);
            cur.clear();
        }
        cur.push_back(p.word()[i]);
    }
    if (!cur.empty()) blocks.push_back(cur);
    return SetComposition(p.n(), std::move(blocks));
}

std::vector<SetComposition> adjacent_coarsenings(const SetComposition& I) {
    int r = I.num_blocks();
    std::vector<SetComposition> out;
    // bit x of mask set = merge block x with block x+1
    for (unsigned mask = 0; mask < (1u << (r > 0 ? r - 1 : 0)); ++mask) {
        std::vector<std::vector<int>> blocks;
        for (int b = 0; b < r; ++b) {
            if (b > 0 && (mask >> (b - 1)) & 1u) {
                auto& last = blocks.back();
                last.insert(last.end(), I.block(b).begin(), I.block(b).end());
            } else {
                blocks.push_back(I.block(b));
            }
        }
        out.emplace_back(I.n(), std::move(blocks));
    }
    return out;
}

const std::vector<SetComposition>& enumerate_setcomps(int n) {
    static std::map<int, std::vector<SetComposition>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<SetComposition> all;
    std::vector<std::vector<int>> blocks;
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            if (!blocks.empty() || n == 0) all.emplace_back(n, blocks);
            return;
        }
        // insert `next` into an existing block (index loop: recursion
        // reallocates the outer vector)
        for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
            blocks[bi].push_back(next);
            self(self, next + 1);
            blocks[bi].pop_back();
        }
        // or as a new singleton block at any position
        for (std::size_t at = 0; at <= blocks.size(); ++at) {
            blocks.insert(blocks.begin() + at, {next});
            self(self, next + 1);
            blocks.erase(blocks.begin() + at);
        }
    };
    if (n == 0) {
        all.emplace_back();
    } else {
        rec(rec, 1);
    }
    std::sort(all.begin(), all.end(),
              [](const SetComposition& a, const SetComposition& b) { return a.str() < b.str(); });
    return cache.emplace(n, std::move(all)).first->second;
}

SemiLengthView split_semilength(const SetComposition& K) {
    SemiLengthView v;
    for (int b = 0; b < K.num_blocks(); ++b) {
        if (b % 2 == 0)
            v.I_blocks.push_back(K.block(b));
        else
            v.J_blocks.push_back(K.block(b));
    }
    if (v.J_blocks.size() < v.I_blocks.size()) v.J_blocks.push_back({});
    return v;
}

Int ordered_bell(int n) {
    // B(n) = sum_k C(n,k) B(n-k)
    std::vector<Int> B(n + 1);
    B[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Int binom = 1, sum = 0;
        for (int k = 1; k <= m; ++k) {
            binom = binom * (m - k + 1) / k;
            sum += binom * B[m - k];
        }
        B[m] = sum;
    }
    return B[n];
}

} // namespace gq
