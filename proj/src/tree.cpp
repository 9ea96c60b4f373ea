#include "ncshift/tree.hpp"

#include <stdexcept>

namespace ncshift {

std::string to_string(const TreeWord& u, std::size_t n) {
    return to_string(u.positive, n) + "|" + std::to_string(u.depth);
}

TreeWord parse_tree_word(std::string_view text, std::size_t n) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos) throw std::invalid_argument("tree word must have the form v|m");
    auto depth_text = text.substr(bar + 1);
    if (depth_text.empty()) throw std::invalid_argument("tree word is missing its depth");
    std::size_t depth = 0;
    for (char c : depth_text) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad depth in tree word");
        depth = depth * 10 + static_cast<std::size_t>(c - '0');
    }
    return TreeWord{parse_word(text.substr(0, bar), n), depth};
}

Tree::Tree(std::size_t n, InfiniteWord omega) : n_(n), omega_(std::move(omega)) {
    if (n_ == 0) throw std::invalid_argument("alphabet size must be at least 1");
    if (omega_.is_eventually_periodic()) {
        if (omega_.period().max_letter() > n_ || omega_.preperiod().max_letter() > n_)
            throw std::invalid_argument("infinite word uses letters outside the alphabet");
    }
}

const FiniteWord& Tree::period() const {
    if (!periodic()) throw std::domain_error("operation requires a purely periodic word");
    return omega_.period();
}

void Tree::check_letter(Letter i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("letter outside the alphabet");
}

bool Tree::is_canonical(const TreeWord& u) const {
    return u.depth == 0 || u.positive.empty() || u.positive.back() != omega_.at(u.depth);
}

TreeWord Tree::canonicalize(FiniteWord v, std::size_t m) const {
    while (m >= 1 && !v.empty() && v.back() == omega_.at(m)) {
        v.pop_back();
        --m;
    }
    return TreeWord{std::move(v), m};
}

TreeWord Tree::left_create(Letter i, const TreeWord& u) const {
    check_letter(i);
    std::vector<Letter> letters;
    letters.reserve(u.positive.size() + 1);
    letters.push_back(i);
    letters.insert(letters.end(), u.positive.begin(), u.positive.end());
    return canonicalize(FiniteWord(std::move(letters)), u.depth);
}

std::optional<TreeWord> Tree::left_annihilate(Letter i, const TreeWord& u) const {
    check_letter(i);
    if (!u.positive.empty()) {
        if (u.positive.front() != i) return std::nullopt;
        return TreeWord{u.positive.drop_front(), u.depth};
    }
    if (omega_.at(u.depth + 1) == i) return TreeWord{{}, u.depth + 1};
    return std::nullopt;
}

std::pair<Letter, TreeWord> Tree::unique_parent(const TreeWord& u) const {
    if (!u.positive.empty()) return {u.positive.front(), TreeWord{u.positive.drop_front(), u.depth}};
    return {omega_.at(u.depth + 1), TreeWord{{}, u.depth + 1}};
}

TreeWord Tree::right_translate(const TreeWord& u, long long j, std::size_t k) const {
    const std::size_t block = k * period().size();
    if (j == 0) return u;
    const std::size_t shift = static_cast<std::size_t>(j < 0 ? -j : j) * block;
    if (j < 0) return canonicalize(u.positive, u.depth + shift);
    if (shift <= u.depth) return canonicalize(u.positive, u.depth - shift);
    FiniteWord v = u.positive;
    for (std::size_t t = u.depth + 1; t <= shift; ++t) v.push_back(omega_.at(t));
    return TreeWord{std::move(v), 0};
}

FiniteWord Tree::head_word(const TreeWord& u, std::size_t m) const {
    std::vector<Letter> out;
    out.reserve(m);
    const std::size_t len = u.positive.size();
    for (std::size_t t = 1; t <= m; ++t)
        out.push_back(t <= len ? u.positive[t - 1] : omega_.at(u.depth + t - len));
    return FiniteWord(std::move(out));
}

std::vector<TreeWord> Tree::enumerate(const Window& w) const {
    std::vector<TreeWord> out;
    for (std::size_t m = 0; m <= w.max_neg; ++m) {
        const Letter forbidden = m == 0 ? 0 : omega_.at(m);
        for (std::size_t len = 0; len <= w.max_pos; ++len) {
            for (auto& v : all_words(n_, len)) {
                if (m != 0 && v.ends_with(forbidden)) continue;
                out.push_back(TreeWord{std::move(v), m});
            }
        }
    }
    return out;
}

bool Tree::is_interior(const TreeWord& u, const Window& w, std::optional<std::size_t> translation_k) const {
    if (!w.contains(u)) return false;
    for (Letter i = 1; i <= n_; ++i) {
        if (!w.contains(left_create(i, u))) return false;
        if (auto down = left_annihilate(i, u); down && !w.contains(*down)) return false;
    }
    if (translation_k) {
        if (!w.contains(right_translate(u, 1, *translation_k))) return false;
        if (!w.contains(right_translate(u, -1, *translation_k))) return false;
    }
    return true;
}

std::string Tree::label(const TreeWord& u) const {
    if (u.is_root()) return "phi";
    std::string out = to_string(u.positive, n_);
    if (u.depth > 0) out += "(" + to_string(omega_.prefix(u.depth), n_) + ")^-1";
    return out;
}

TreeWord shift_tail_map(const TreeWord& u, std::size_t offset, const Tree& target) {
    return target.canonicalize(u.positive, u.depth + offset);
}

TreeWord shift_tail_unmap(const TreeWord& u, std::size_t offset, const Tree& target) {
    if (u.depth >= offset) return TreeWord{u.positive, u.depth - offset};
    FiniteWord v = u.positive;
    for (std::size_t t = u.depth + 1; t <= offset; ++t) v.push_back(target.omega().at(t));
    return TreeWord{std::move(v), 0};
}

}  // namespace ncshift
