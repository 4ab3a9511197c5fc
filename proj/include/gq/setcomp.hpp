#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "gq/rational.hpp"

namespace gq {

// Ordered list of disjoint nonempty blocks partitioning {1..n}.
// Blocks are kept sorted increasingly; the stored form never contains an
// empty block (the semi-length view below may expose one trailing empty
// J-block).
class SetComposition {
public:
    SetComposition() : n_(0) {}
    SetComposition(int n, std::vector<std::vector<int>> blocks);

    int n() const { return n_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int i) const { return blocks_[i]; }

    // 1-based index of the block containing x.
    int block_index(int x) const { return pos_[x]; }

    // "15|346|2"; elements comma-separated inside a block when n > 9.
    std::string str() const;
    static SetComposition parse(const std::string& s);

    auto operator<=>(const SetComposition&) const = default;

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> pos_; // pos_[x] = 1-based block index, pos_[0] unused
};

struct IntegerComposition {
    std::vector<int> parts;
    std::string str() const; // "231" (digits) or "2,3,11"
    auto operator<=>(const IntegerComposition&) const = default;
};

// Permutation word with a starred subset of its descents.
class DStarPerm {
public:
    DStarPerm() = default;
    // stars holds 1-based positions x with word[x-1] > word[x]; throws if a
    // starred position is not a descent.
    DStarPerm(std::vector<int> word, std::set<int> stars);

    int n() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const { return word_; }
    const std::set<int>& stars() const { return stars_; }

    // "5*16*4*32": star printed after the letter it follows.
    std::string str() const;
    static DStarPerm parse(const std::string& s);

    auto operator<=>(const DStarPerm&) const = default;

private:
    std::vector<int> word_;
    std::set<int> stars_;
};

// Odd-indexed parts I_1..I_r and even-indexed parts J_1..J_r of a set
// composition; only J_r may be empty.
struct SemiLengthView {
    std::vector<std::vector<int>> I_blocks;
    std::vector<std::vector<int>> J_blocks;

    int semi_length() const { return static_cast<int>(I_blocks.size()); }
    // Re-interleave I_1,J_1,...,I_r,J_r (dropping an empty final J_r).
    SetComposition to_setcomp(int n) const;
    std::string str() const; // "(26|5|3,4|17|)"
};

SetComposition delta_of_word(const std::vector<int>& w);
IntegerComposition phi_c(const SetComposition& I);

DStarPerm to_dstar(const SetComposition& I);
SetComposition from_dstar(const DStarPerm& p);

// All set compositions obtained by merging one or more adjacent blocks of I,
// including I itself.
std::vector<SetComposition> adjacent_coarsenings(const SetComposition& I);

// All set compositions of {1..n}, sorted lexicographically by canonical
// string encoding. Cached per n.
const std::vector<SetComposition>& enumerate_setcomps(int n);

SemiLengthView split_semilength(const SetComposition& K);

Int ordered_bell(int n);

} // namespace gq
