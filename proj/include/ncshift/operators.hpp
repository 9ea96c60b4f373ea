#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncshift/partition.hpp"
#include "ncshift/scalar.hpp"
#include "ncshift/tree.hpp"
#include "ncshift/weights.hpp"

namespace ncshift {

// The data (n, omega, Lambda) of a bilateral weighted shift.
struct ShiftSpec {
    Tree tree;
    WeightRule weights;
};

// Ordered window basis with a reverse index.
class Basis {
public:
    explicit Basis(std::vector<TreeWord> words);
    static std::shared_ptr<const Basis> of_window(const Tree& tree, const Window& window);

    std::size_t size() const noexcept { return words_.size(); }
    const TreeWord& operator[](std::size_t i) const { return words_[i]; }
    const std::vector<TreeWord>& words() const noexcept { return words_; }
    std::optional<std::size_t> index_of(const TreeWord& u) const;

private:
    std::vector<TreeWord> words_;
    std::map<TreeWord, std::size_t> index_;
};

using BasisPtr = std::shared_ptr<const Basis>;

// Exact sparse matrix over a window basis; zero entries are never stored.
class SparseOperator {
public:
    using Key = std::pair<std::size_t, std::size_t>;  // (row, col)

    explicit SparseOperator(BasisPtr basis) : basis_(std::move(basis)) {}
    static SparseOperator identity(BasisPtr basis);

    const BasisPtr& basis() const noexcept { return basis_; }
    const std::map<Key, Rational>& entries() const noexcept { return entries_; }
    std::size_t nonzeros() const noexcept { return entries_.size(); }

    void set(std::size_t row, std::size_t col, Rational value);
    Rational at(std::size_t row, std::size_t col) const;

    // Entries are real, so the adjoint is the transpose.
    SparseOperator adjoint() const;

    friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
    friend bool operator==(const SparseOperator& a, const SparseOperator& b);

    // One "row col value" line per entry, words in v|m syntax.
    std::string to_triples(std::size_t n) const;

private:
    void require_same_basis(const SparseOperator& other) const;

    BasisPtr basis_;
    std::map<Key, Rational> entries_;
};

// T_i, S_i and W_i truncated to the window.
std::vector<SparseOperator> build_shift(const ShiftSpec& spec, const BasisPtr& basis);
std::vector<SparseOperator> build_unweighted(const Tree& tree, const BasisPtr& basis);
std::vector<SparseOperator> build_diagonal(const ShiftSpec& spec, const BasisPtr& basis);

struct EntryMismatch {
    Letter letter = 0;
    TreeWord row;
    TreeWord col;
    Rational expected;
    Rational actual;
};

struct FactorizationReport {
    std::size_t generators_checked = 0;
    std::vector<EntryMismatch> mismatches;
    bool passed() const noexcept { return mismatches.empty(); }
};

FactorizationReport verify_factorization(const ShiftSpec& spec, const Window& window);
// T_i against S_i W_i for caller-supplied families (same order, same basis).
FactorizationReport verify_factorization(const std::vector<SparseOperator>& t, const std::vector<SparseOperator>& s,
                                         const std::vector<SparseOperator>& w);

struct CuntzReport {
    std::size_t isometry_columns_checked = 0;
    std::size_t interior_rows_checked = 0;
    std::vector<TreeWord> boundary_rows;
    std::vector<std::string> failures;
    bool passed() const noexcept { return failures.empty(); }
};

// S_i^* S_j = delta_ij I on columns whose images stay in the window and
// sum_i S_i S_i^* = I on interior rows.
CuntzReport cuntz_report(const Tree& tree, const Window& window);

// w(S) = S_{i_1} ... S_{i_k}; the empty word gives the identity. `family` is
// indexed by letter - 1.
SparseOperator word_operator(const FiniteWord& w, const std::vector<SparseOperator>& family);

// Basis words fixed by omega_m(S) omega_m(S)^*: head_word(u, m) == omega_m.
TreeWordSet range_fixed_set(const Tree& tree, std::size_t m, const Window& window);

SparseOperator make_diagonal_projection(const BasisPtr& basis, const TreeWordSet& words);

// V xi_u = xi_{u v0^k}, a partial isometry on the window.
SparseOperator right_translation_operator(const Partition& partition, const BasisPtr& basis);

// mask[i] is true when basis word i is interior (translation by v0^k
// included when translation_k is set).
std::vector<bool> interior_mask(const Tree& tree, const Basis& basis, const Window& window,
                                std::optional<std::size_t> translation_k);

// max |(AB - BA)(r, c)| over interior rows and columns.
Rational commutation_defect(const SparseOperator& a, const SparseOperator& b, const std::vector<bool>& interior);

struct EdgeCounterexample {
    Letter letter = 0;
    TreeWord word;
    Rational weight;             // lambda_{iu}
    Rational translated_weight;  // lambda_{i u v0^k}
};

struct CommutationCertificate {
    std::optional<Honesty> certified;
    std::optional<EdgeCounterexample> counterexample;  // first violation in window order
    std::size_t edges_checked = 0;
    std::size_t violations = 0;
    bool ok() const noexcept { return certified.has_value(); }
};

// V T_i = T_i V reduces to lambda_{iu} == lambda_{i u v0^k}; checked on every
// window edge.
CommutationCertificate v_commutes_certificate(const ShiftSpec& spec, const Partition& partition,
                                              const Window& window);

struct BlockEntry {
    enum class Kind { Zero, ScalarId, ScalarShift };
    Kind kind = Kind::Zero;
    Rational scalar;
    int shift_power = 0;

    friend bool operator==(const BlockEntry&, const BlockEntry&) = default;
};

// Block matrix of one generator, indexed by principal-component
// representatives; U stands for the shift along each class orbit.
struct BlockLayout {
    Letter generator = 0;
    std::vector<TreeWord> index;
    std::map<SparseOperator::Key, BlockEntry> entries;  // nonzero only, (row, col)

    BlockEntry at(const TreeWord& row, const TreeWord& col) const;
    std::size_t count(BlockEntry::Kind kind) const;
    std::string to_text(const Tree& tree) const;
};

// Representatives with |positive| <= depth. Throws std::domain_error when the
// weights are not k-periodic on `window`.
std::vector<BlockLayout> block_layout(const ShiftSpec& spec, const Partition& partition, std::size_t depth,
                                      const Window& window);

}  // namespace ncshift
