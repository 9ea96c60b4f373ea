#include "ncshift/partition.hpp"

#include <stdexcept>

namespace ncshift {

namespace {

long long ceil_div(long long a, long long b) {
    // b > 0
    long long q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

}  // namespace

Partition::Partition(Tree tree, std::size_t k) : tree_(std::move(tree)), k_(k) {
    if (k_ == 0) throw std::invalid_argument("period multiple k must be positive");
    block_ = k_ * tree_.period().size();
}

long long Partition::signed_depth(const TreeWord& u) const {
    if (u.depth >= 1) return -static_cast<long long>(u.depth);
    return static_cast<long long>(reverse_suffix_match(u.positive, tree_.omega()));
}

long long Partition::component_index(const TreeWord& u) const {
    return ceil_div(signed_depth(u), static_cast<long long>(block_));
}

bool Partition::in_principal_component(const TreeWord& u) const {
    if (u.depth >= block_) return false;
    if (u.depth >= 1) return true;
    // i_0 is read as i_{|v0|}.
    return !u.positive.ends_with(v0().back());
}

TreeWord Partition::class_representative(const TreeWord& u) const {
    return tree_.right_translate(u, -component_index(u), k_);
}

std::size_t Partition::remainder_class(const TreeWord& u) const {
    return class_representative(u).depth / v0().size();
}

ClassInfo Partition::classify(const TreeWord& u) const {
    TreeWord rep = class_representative(u);
    std::size_t r = rep.depth / v0().size();
    return ClassInfo{component_index(u), r, std::move(rep)};
}

std::vector<TreeWord> Partition::orbit(const TreeWord& u, std::size_t radius) const {
    const TreeWord rep = class_representative(u);
    std::vector<TreeWord> out;
    const auto r = static_cast<long long>(radius);
    for (long long j = -r; j <= r; ++j) out.push_back(tree_.right_translate(rep, j, k_));
    return out;
}

long long Partition::brute_force_classify(const TreeWord& u, std::size_t bound) const {
    const auto b = static_cast<long long>(bound);
    std::optional<long long> found;
    for (long long j = -b; j <= b; ++j) {
        if (!in_principal_component(tree_.right_translate(u, -j, k_))) continue;
        if (found) throw std::logic_error("brute_force_classify: several components match " + to_string(u));
        found = j;
    }
    if (!found) throw std::logic_error("brute_force_classify: no component within bound for " + to_string(u));
    return *found;
}

TreeWord Partition::u_omega_k_map(const TreeWord& u) const {
    const ClassInfo info = classify(u);
    const auto k = static_cast<long long>(k_);
    if (info.remainder != 0 || info.component % k != 0)
        throw std::invalid_argument("u_omega_k_map: word is not in a remainder-0 block of a component divisible by k");
    return tree_.right_translate(info.representative, info.component / k, k_);
}

TreeWord Partition::u_omega_k_unmap(const TreeWord& u) const {
    const ClassInfo info = classify(u);
    if (info.remainder != 0) throw std::invalid_argument("u_omega_k_unmap: word is not in a remainder-0 block");
    return tree_.right_translate(info.representative, info.component * static_cast<long long>(k_), k_);
}

std::vector<TreeWord> Partition::principal_listing(const Window& w) const {
    std::vector<TreeWord> out;
    for (auto& u : tree_.enumerate(w))
        if (in_principal_component(u)) out.push_back(std::move(u));
    return out;
}

bool Partition::same_context(const Partition& other) const {
    return tree_.alphabet_size() == other.tree_.alphabet_size() && v0() == other.v0();
}

TreeWordSet set_left_translate(const Tree& tree, const FiniteWord& w, const TreeWordSet& a) {
    TreeWordSet out;
    for (const auto& u : a) {
        TreeWord cur = u;
        for (std::size_t t = w.size(); t-- > 0;) cur = tree.left_create(w[t], cur);
        out.insert(std::move(cur));
    }
    return out;
}

TreeWordSet set_left_star(const Tree& tree, const FiniteWord& w, const TreeWordSet& a) {
    TreeWordSet out;
    for (const auto& u : a) {
        std::optional<TreeWord> cur = u;
        for (std::size_t t = 0; t < w.size() && cur; ++t) cur = tree.left_annihilate(w[t], *cur);
        if (cur) out.insert(std::move(*cur));
    }
    return out;
}

}  // namespace ncshift
