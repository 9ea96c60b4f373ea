#include "ncshift/operators.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ncshift {

Basis::Basis(std::vector<TreeWord> words) : words_(std::move(words)) {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (!index_.emplace(words_[i], i).second) throw std::invalid_argument("duplicate word in basis");
}

std::shared_ptr<const Basis> Basis::of_window(const Tree& tree, const Window& window) {
    return std::make_shared<const Basis>(tree.enumerate(window));
}

std::optional<std::size_t> Basis::index_of(const TreeWord& u) const {
    auto it = index_.find(u);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

SparseOperator SparseOperator::identity(BasisPtr basis) {
    SparseOperator out(basis);
    for (std::size_t i = 0; i < basis->size(); ++i) out.entries_.emplace(Key{i, i}, Rational(1));
    return out;
}

void SparseOperator::set(std::size_t row, std::size_t col, Rational value) {
    if (row >= basis_->size() || col >= basis_->size()) throw std::out_of_range("SparseOperator::set");
    if (value == 0)
        entries_.erase(Key{row, col});
    else
        entries_[Key{row, col}] = std::move(value);
}

Rational SparseOperator::at(std::size_t row, std::size_t col) const {
    auto it = entries_.find(Key{row, col});
    return it == entries_.end() ? Rational(0) : it->second;
}

SparseOperator SparseOperator::adjoint() const {
    SparseOperator out(basis_);
    for (const auto& [key, value] : entries_) out.entries_.emplace(Key{key.second, key.first}, value);
    return out;
}

void SparseOperator::require_same_basis(const SparseOperator& other) const {
    if (basis_ != other.basis_ && basis_->words() != other.basis_->words())
        throw std::invalid_argument("sparse operators live on different bases");
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
    a.require_same_basis(b);
    std::vector<std::vector<std::pair<std::size_t, const Rational*>>> a_by_col(a.basis_->size());
    for (const auto& [key, value] : a.entries_) a_by_col[key.second].emplace_back(key.first, &value);

    SparseOperator out(a.basis_);
    for (const auto& [key, bv] : b.entries_) {
        for (const auto& [row, av] : a_by_col[key.first]) out.entries_[{row, key.second}] += *av * bv;
    }
    std::erase_if(out.entries_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
    a.require_same_basis(b);
    SparseOperator out = a;
    for (const auto& [key, value] : b.entries_) out.entries_[key] += value;
    std::erase_if(out.entries_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
    a.require_same_basis(b);
    SparseOperator out = a;
    for (const auto& [key, value] : b.entries_) out.entries_[key] -= value;
    std::erase_if(out.entries_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

bool operator==(const SparseOperator& a, const SparseOperator& b) {
    return a.basis_->words() == b.basis_->words() && a.entries_ == b.entries_;
}

std::string SparseOperator::to_triples(std::size_t n) const {
    std::ostringstream os;
    for (const auto& [key, value] : entries_)
        os << to_string((*basis_)[key.first], n) << ' ' << to_string((*basis_)[key.second], n) << ' '
           << to_string(value) << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

SparseOperator creation_matrix(const Tree& tree, const BasisPtr& basis, Letter i,
                               const WeightRule* weights) {
    SparseOperator out(basis);
    for (std::size_t col = 0; col < basis->size(); ++col) {
        TreeWord target = tree.left_create(i, (*basis)[col]);
        auto row = basis->index_of(target);
        if (!row) continue;
        out.set(*row, col, weights ? weights->evaluate(target) : Rational(1));
    }
    return out;
}

}  // namespace

std::vector<SparseOperator> build_shift(const ShiftSpec& spec, const BasisPtr& basis) {
    std::vector<SparseOperator> out;
    for (Letter i = 1; i <= spec.tree.alphabet_size(); ++i)
        out.push_back(creation_matrix(spec.tree, basis, i, &spec.weights));
    return out;
}

std::vector<SparseOperator> build_unweighted(const Tree& tree, const BasisPtr& basis) {
    std::vector<SparseOperator> out;
    for (Letter i = 1; i <= tree.alphabet_size(); ++i) out.push_back(creation_matrix(tree, basis, i, nullptr));
    return out;
}

std::vector<SparseOperator> build_diagonal(const ShiftSpec& spec, const BasisPtr& basis) {
    std::vector<SparseOperator> out;
    for (Letter i = 1; i <= spec.tree.alphabet_size(); ++i) {
        SparseOperator w(basis);
        for (std::size_t u = 0; u < basis->size(); ++u) w.set(u, u, edge_weight(spec.weights, spec.tree, i, (*basis)[u]));
        out.push_back(std::move(w));
    }
    return out;
}

FactorizationReport verify_factorization(const std::vector<SparseOperator>& t, const std::vector<SparseOperator>& s,
                                         const std::vector<SparseOperator>& w) {
    if (t.size() != s.size() || t.size() != w.size()) throw std::invalid_argument("family sizes differ");
    FactorizationReport report;
    for (std::size_t g = 0; g < t.size(); ++g) {
        ++report.generators_checked;
        const SparseOperator product = s[g] * w[g];
        const SparseOperator diff = t[g] - product;
        const Basis& basis = *t[g].basis();
        for (const auto& [key, value] : diff.entries()) {
            report.mismatches.push_back(EntryMismatch{static_cast<Letter>(g + 1), basis[key.first], basis[key.second],
                                                      t[g].at(key.first, key.second),
                                                      product.at(key.first, key.second)});
        }
    }
    return report;
}

FactorizationReport verify_factorization(const ShiftSpec& spec, const Window& window) {
    auto basis = Basis::of_window(spec.tree, window);
    return verify_factorization(build_shift(spec, basis), build_unweighted(spec.tree, basis),
                                build_diagonal(spec, basis));
}

CuntzReport cuntz_report(const Tree& tree, const Window& window) {
    auto basis = Basis::of_window(tree, window);
    const auto s = build_unweighted(tree, basis);
    const std::size_t n = tree.alphabet_size();
    CuntzReport report;

    for (std::size_t i = 0; i < n; ++i) {
        const SparseOperator si_star = s[i].adjoint();
        for (std::size_t j = 0; j < n; ++j) {
            const SparseOperator product = si_star * s[j];
            std::vector<std::vector<std::pair<std::size_t, Rational>>> by_col(basis->size());
            for (const auto& [key, value] : product.entries()) by_col[key.second].emplace_back(key.first, value);
            for (std::size_t col = 0; col < basis->size(); ++col) {
                if (!window.contains(tree.left_create(static_cast<Letter>(j + 1), (*basis)[col]))) continue;
                if (i == j) ++report.isometry_columns_checked;
                const auto& entries = by_col[col];
                const bool ok = i == j ? (entries.size() == 1 && entries[0].first == col && entries[0].second == 1)
                                       : entries.empty();
                if (!ok)
                    report.failures.push_back("S_" + std::to_string(i + 1) + "^* S_" + std::to_string(j + 1) +
                                              " wrong at column " + to_string((*basis)[col], n));
            }
        }
    }

    SparseOperator sum(basis);
    for (const auto& si : s) sum = sum + si * si.adjoint();
    std::vector<std::vector<std::pair<std::size_t, Rational>>> by_row(basis->size());
    for (const auto& [key, value] : sum.entries()) by_row[key.first].emplace_back(key.second, value);
    for (std::size_t row = 0; row < basis->size(); ++row) {
        const TreeWord& u = (*basis)[row];
        if (!tree.is_interior(u, window)) {
            report.boundary_rows.push_back(u);
            continue;
        }
        ++report.interior_rows_checked;
        const auto& entries = by_row[row];
        if (!(entries.size() == 1 && entries[0].first == row && entries[0].second == 1))
            report.failures.push_back("sum S_i S_i^* wrong at row " + to_string(u, n));
    }
    return report;
}

SparseOperator word_operator(const FiniteWord& w, const std::vector<SparseOperator>& family) {
    if (family.empty()) throw std::invalid_argument("word_operator: empty operator family");
    SparseOperator out = SparseOperator::identity(family.front().basis());
    for (Letter l : w) {
        if (l < 1 || l > family.size()) throw std::invalid_argument("word_operator: letter outside family");
        out = out * family[l - 1];
    }
    return out;
}

TreeWordSet range_fixed_set(const Tree& tree, std::size_t m, const Window& window) {
    const FiniteWord target = tree.omega().prefix(m);
    TreeWordSet out;
    for (auto& u : tree.enumerate(window))
        if (tree.head_word(u, m) == target) out.insert(std::move(u));
    return out;
}

SparseOperator make_diagonal_projection(const BasisPtr& basis, const TreeWordSet& words) {
    SparseOperator out(basis);
    for (const auto& u : words) {
        auto idx = basis->index_of(u);
        if (!idx) throw std::invalid_argument("projection word outside the basis: " + to_string(u));
        out.set(*idx, *idx, 1);
    }
    return out;
}

SparseOperator right_translation_operator(const Partition& partition, const BasisPtr& basis) {
    SparseOperator out(basis);
    for (std::size_t col = 0; col < basis->size(); ++col) {
        auto row = basis->index_of(partition.tree().right_translate((*basis)[col], 1, partition.k()));
        if (row) out.set(*row, col, 1);
    }
    return out;
}

std::vector<bool> interior_mask(const Tree& tree, const Basis& basis, const Window& window,
                                std::optional<std::size_t> translation_k) {
    std::vector<bool> mask(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) mask[i] = tree.is_interior(basis[i], window, translation_k);
    return mask;
}

Rational commutation_defect(const SparseOperator& a, const SparseOperator& b, const std::vector<bool>& interior) {
    if (interior.size() != a.basis()->size()) throw std::invalid_argument("interior mask does not match basis");
    const SparseOperator diff = a * b - b * a;
    Rational worst = 0;
    for (const auto& [key, value] : diff.entries()) {
        if (!interior[key.first] || !interior[key.second]) continue;
        Rational mag = value < 0 ? Rational(-value) : value;
        if (mag > worst) worst = mag;
    }
    return worst;
}

CommutationCertificate v_commutes_certificate(const ShiftSpec& spec, const Partition& partition,
                                              const Window& window) {
    CommutationCertificate cert;
    const Tree& tree = spec.tree;
    for (const auto& u : tree.enumerate(window)) {
        const TreeWord translated = partition.tree().right_translate(u, 1, partition.k());
        for (Letter i = 1; i <= tree.alphabet_size(); ++i) {
            ++cert.edges_checked;
            Rational lhs = edge_weight(spec.weights, tree, i, u);
            Rational rhs = edge_weight(spec.weights, tree, i, translated);
            if (lhs == rhs) continue;
            ++cert.violations;
            if (!cert.counterexample) cert.counterexample = EdgeCounterexample{i, u, std::move(lhs), std::move(rhs)};
        }
    }
    if (cert.violations == 0) {
        const auto* cp = spec.weights.as_class_periodic();
        const bool structural = spec.weights.as_constant() ||
                                (cp && cp->partition.same_context(partition) && partition.k() % cp->partition.k() == 0);
        cert.certified = structural ? Honesty::Structural : Honesty::WindowCertified;
    }
    return cert;
}

// ---------------------------------------------------------------------------

BlockEntry BlockLayout::at(const TreeWord& row, const TreeWord& col) const {
    auto r = std::find(index.begin(), index.end(), row);
    auto c = std::find(index.begin(), index.end(), col);
    if (r == index.end() || c == index.end()) throw std::invalid_argument("block layout index outside listing");
    auto it = entries.find({static_cast<std::size_t>(r - index.begin()), static_cast<std::size_t>(c - index.begin())});
    return it == entries.end() ? BlockEntry{} : it->second;
}

std::size_t BlockLayout::count(BlockEntry::Kind kind) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [&](const auto& kv) { return kv.second.kind == kind; }));
}

std::string BlockLayout::to_text(const Tree& tree) const {
    std::vector<std::string> labels;
    for (const auto& u : index) labels.push_back(tree.label(u));
    std::vector<std::vector<std::string>> cells(index.size(), std::vector<std::string>(index.size(), "0"));
    for (const auto& [key, entry] : entries)
        cells[key.first][key.second] = to_string(entry.scalar) + (entry.kind == BlockEntry::Kind::ScalarShift ? "U" : "I");

    std::size_t label_width = 0;
    for (const auto& l : labels) label_width = std::max(label_width, l.size());
    std::vector<std::size_t> widths(index.size());
    for (std::size_t c = 0; c < index.size(); ++c) {
        widths[c] = labels[c].size();
        for (std::size_t r = 0; r < index.size(); ++r) widths[c] = std::max(widths[c], cells[r][c].size());
    }
    auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };

    std::ostringstream os;
    os << "T_" << generator << '\n' << std::string(label_width, ' ') << " |";
    for (std::size_t c = 0; c < index.size(); ++c) os << ' ' << pad(labels[c], widths[c]);
    os << '\n';
    for (std::size_t r = 0; r < index.size(); ++r) {
        os << pad(labels[r], label_width) << " |";
        for (std::size_t c = 0; c < index.size(); ++c) os << ' ' << pad(cells[r][c], widths[c]);
        os << '\n';
    }
    return os.str();
}

std::vector<BlockLayout> block_layout(const ShiftSpec& spec, const Partition& partition, std::size_t depth,
                                      const Window& window) {
    if (!is_k_periodic(spec.weights, partition, window).ok())
        throw std::domain_error("block_layout: weights are not " + std::to_string(partition.k()) + "-periodic");

    const Tree& tree = spec.tree;
    std::vector<TreeWord> index =
        partition.principal_listing(Window{depth, partition.block_length() - 1});
    std::map<TreeWord, std::size_t> position;
    for (std::size_t i = 0; i < index.size(); ++i) position.emplace(index[i], i);

    std::vector<BlockLayout> out;
    for (Letter g = 1; g <= tree.alphabet_size(); ++g) {
        BlockLayout layout{g, index, {}};
        for (std::size_t col = 0; col < index.size(); ++col) {
            const TreeWord target = tree.left_create(g, index[col]);
            const ClassInfo info = partition.classify(target);
            auto row = position.find(info.representative);
            if (row == position.end()) continue;
            if (info.component != 0 && info.component != 1)
                throw std::logic_error("block_layout: creation moved more than one component");
            BlockEntry entry;
            entry.kind = info.component == 0 ? BlockEntry::Kind::ScalarId : BlockEntry::Kind::ScalarShift;
            entry.shift_power = static_cast<int>(info.component);
            entry.scalar = spec.weights.evaluate(target);
            layout.entries.emplace(SparseOperator::Key{row->second, col}, std::move(entry));
        }
        out.push_back(std::move(layout));
    }
    return out;
}

}  // namespace ncshift
