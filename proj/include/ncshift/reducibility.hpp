#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "ncshift/operators.hpp"

namespace ncshift {

struct ProjectionSummary {
    std::size_t count = 0;
    bool sums_to_identity = false;
    // max over r of |P_r V - V P_r| on the interior.
    Rational max_v_defect;
};

struct Reducible {
    std::size_t k_min = 0;
    PeriodicityResult periodicity;
    CommutationCertificate certificate;
    // max over i of |V T_i - T_i V| on the interior.
    Rational shift_defect;
    ProjectionSummary projections;
    bool block_layout_available = false;
};

struct Irreducible {
    enum class Reason { AperiodicWord, NoPeriodUpTo };
    Reason reason = Reason::NoPeriodUpTo;
    std::size_t kmax = 0;
    Window window;
};

const char* to_string(Irreducible::Reason reason);

struct Verdict {
    std::variant<Irreducible, Reducible> outcome;
    Honesty honesty = Honesty::WindowCertified;
    // Length of the preperiod absorbed before the search (0 for periodic omega).
    std::size_t shift_offset = 0;

    bool reducible() const noexcept { return std::holds_alternative<Reducible>(outcome); }
    const Reducible* as_reducible() const { return std::get_if<Reducible>(&outcome); }
    const Irreducible* as_irreducible() const { return std::get_if<Irreducible>(&outcome); }
};

// Eventually periodic omega: the same shift expressed over the periodic tail.
// Throws std::domain_error for generated words.
ShiftSpec normalize_shift_tail(const ShiftSpec& spec, std::size_t* offset = nullptr);

// Searches k = 1..kmax for periodic weights whose translation V commutes with
// every T_i on the window. Throws std::logic_error if a found k fails its own
// projection checks, and std::domain_error for uncertified generated words.
Verdict verdict(const ShiftSpec& spec, std::size_t kmax, const Window& window);

// P_0..P_{k-1}, diagonal on remainder classes. Throws std::domain_error when
// omega is not periodic or the weights are not k-periodic on the window.
std::vector<SparseOperator> reducing_projections(const ShiftSpec& spec, std::size_t k, const Window& window,
                                                 BasisPtr basis = nullptr);

struct RemainderTransition {
    Letter letter = 0;
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t edges = 0;

    friend bool operator==(const RemainderTransition&, const RemainderTransition&) = default;
};

struct GeneratorSplit {
    Letter letter = 0;
    // P_r T_i P_r == T_i P_r on interior columns, for every r.
    bool preserves_split = false;
};

struct RestrictionReport {
    std::size_t k = 0;
    std::vector<RemainderTransition> transitions;  // sorted by (letter, from, to)
    std::vector<GeneratorSplit> generators;
};

RestrictionReport restriction_report(const ShiftSpec& spec, std::size_t k, const Window& window);

// The subspace generated from a V-orbit-closed seed of remainder-0 words:
// every window word whose 1-class representative is the class representative
// of some seed word. Throws std::invalid_argument when a seed word has
// nonzero remainder, lies outside the window, or its orbit leaves the seed.
TreeWordSet transport_unweighted_seed(const TreeWordSet& seed, const Partition& partition, const Window& window);

struct IrreducibilityEvidence {
    std::vector<std::size_t> chain;  // chain[m-1] = |fixed_set(m)|
    bool non_increasing = false;
    std::optional<std::size_t> reaches_root_at;  // first m with fixed_set(m) == {phi}
    std::size_t reachable = 0;
    std::size_t window_size = 0;

    bool passed() const noexcept { return non_increasing && reaches_root_at && reachable == window_size; }
};

// Throws std::domain_error unless omega is a generated (aperiodic) word.
// max_m defaults to 2 * (P + M) + 4.
IrreducibilityEvidence irreducibility_evidence(const ShiftSpec& spec, const Window& window,
                                               std::optional<std::size_t> max_m = std::nullopt);

}  // namespace ncshift
