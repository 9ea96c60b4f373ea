#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "ncshift/tree.hpp"

namespace ncshift {

using TreeWordSet = std::set<TreeWord>;

struct ClassInfo {
    long long component = 0;
    std::size_t remainder = 0;
    TreeWord representative;

    friend bool operator==(const ClassInfo&, const ClassInfo&) = default;
};

// Canonical decomposition of F_omega for omega = v0 v0 ... and a period
// multiple k. Components are the translates of the principal component by
// powers of v0^k; each class J_{u,k} is an orbit u * {(v0^k)^l}.
class Partition {
public:
    // Throws std::domain_error unless omega is purely periodic, and
    // std::invalid_argument for k == 0.
    Partition(Tree tree, std::size_t k);

    const Tree& tree() const noexcept { return tree_; }
    const FiniteWord& v0() const { return tree_.period(); }
    std::size_t k() const noexcept { return k_; }
    std::size_t block_length() const noexcept { return block_; }

    // -depth for words below the root, otherwise the reverse suffix match of
    // the positive part against ... v0 v0.
    long long signed_depth(const TreeWord& u) const;
    long long component_index(const TreeWord& u) const;
    bool in_principal_component(const TreeWord& u) const;
    TreeWord class_representative(const TreeWord& u) const;
    std::size_t remainder_class(const TreeWord& u) const;
    ClassInfo classify(const TreeWord& u) const;

    // [rep * (v0^k)^j for j in -radius..radius].
    std::vector<TreeWord> orbit(const TreeWord& u, std::size_t radius) const;

    // Independent scan for the unique j in [-bound, bound] with u * (v0^k)^-j
    // principal. Throws std::logic_error if none or several are found.
    long long brute_force_classify(const TreeWord& u, std::size_t bound) const;

    // Literal bijection G_0^{(mk)} -> G_0^{(m)} on remainder-0 words whose
    // component index is a multiple of k. Throws std::invalid_argument otherwise.
    TreeWord u_omega_k_map(const TreeWord& u) const;
    TreeWord u_omega_k_unmap(const TreeWord& u) const;

    // Principal component restricted to a window, in window order.
    std::vector<TreeWord> principal_listing(const Window& w) const;

    bool same_context(const Partition& other) const;

private:
    Tree tree_;
    std::size_t k_;
    std::size_t block_;
};

// w(S)A and w(S)^*A at the level of basis indices.
TreeWordSet set_left_translate(const Tree& tree, const FiniteWord& w, const TreeWordSet& a);
TreeWordSet set_left_star(const Tree& tree, const FiniteWord& w, const TreeWordSet& a);

}  // namespace ncshift
