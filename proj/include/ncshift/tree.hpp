#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncshift/words.hpp"

namespace ncshift {

// The reduced free-group element  positive * omega_depth^{-1}.  Canonical
// means depth == 0, or positive is empty, or the last letter of positive
// differs from i_depth; canonicity depends on omega and is maintained by Tree.
struct TreeWord {
    FiniteWord positive;
    std::size_t depth = 0;

    bool is_root() const noexcept { return positive.empty() && depth == 0; }
    bool on_main_branch() const noexcept { return positive.empty(); }

    friend bool operator==(const TreeWord&, const TreeWord&) = default;
    // Window order: depth, then length of the positive part, then lexicographic.
    friend std::strong_ordering operator<=>(const TreeWord& a, const TreeWord& b) {
        if (auto c = a.depth <=> b.depth; c != 0) return c;
        if (auto c = a.positive.size() <=> b.positive.size(); c != 0) return c;
        return a.positive <=> b.positive;
    }
};

// "v|m", e.g. "12|3"; the unit is "|0".
std::string to_string(const TreeWord& u, std::size_t n = 9);
TreeWord parse_tree_word(std::string_view text, std::size_t n = 9);

// Rectangle |positive| <= max_pos, depth <= max_neg.
struct Window {
    std::size_t max_pos = 0;
    std::size_t max_neg = 0;

    bool contains(const TreeWord& u) const noexcept {
        return u.positive.size() <= max_pos && u.depth <= max_neg;
    }
    friend bool operator==(const Window&, const Window&) = default;
};

// The index set F_omega together with the left actions of the generators.
class Tree {
public:
    Tree(std::size_t n, InfiniteWord omega);

    std::size_t alphabet_size() const noexcept { return n_; }
    const InfiniteWord& omega() const noexcept { return omega_; }
    bool periodic() const noexcept { return omega_.is_purely_periodic(); }
    // Primitive period; throws std::domain_error when omega is not purely periodic.
    const FiniteWord& period() const;

    bool is_canonical(const TreeWord& u) const;
    TreeWord canonicalize(FiniteWord v, std::size_t m) const;

    TreeWord left_create(Letter i, const TreeWord& u) const;
    std::optional<TreeWord> left_annihilate(Letter i, const TreeWord& u) const;
    std::pair<Letter, TreeWord> unique_parent(const TreeWord& u) const;

    // Canonical form of u * (v0^k)^j. Requires purely periodic omega.
    TreeWord right_translate(const TreeWord& u, long long j, std::size_t k) const;

    // First m letters of the infinite word u * omega.
    FiniteWord head_word(const TreeWord& u, std::size_t m) const;

    std::vector<TreeWord> enumerate(const Window& w) const;

    // All one-step creation/annihilation images (and, when translation_k is
    // set, the +-1 right translates) lie in the window.
    bool is_interior(const TreeWord& u, const Window& w, std::optional<std::size_t> translation_k = std::nullopt) const;

    // Group-style label such as "12(2)^-1"; the unit prints as "phi".
    std::string label(const TreeWord& u) const;

private:
    void check_letter(Letter i) const;

    std::size_t n_;
    InfiniteWord omega_;
};

// Shift-tail relabelling: a word over the periodic tail of omega = u * tail is
// sent to the corresponding word over omega (depth increased by offset, then
// reduced). `target` is the tree over omega.
TreeWord shift_tail_map(const TreeWord& u, std::size_t offset, const Tree& target);
// Inverse of shift_tail_map.
TreeWord shift_tail_unmap(const TreeWord& u, std::size_t offset, const Tree& target);

}  // namespace ncshift
