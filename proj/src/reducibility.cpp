#include "ncshift/reducibility.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace ncshift {

const char* to_string(Irreducible::Reason reason) {
    return reason == Irreducible::Reason::AperiodicWord ? "aperiodic_word" : "no_period_up_to";
}

ShiftSpec normalize_shift_tail(const ShiftSpec& spec, std::size_t* offset) {
    const ShiftTail st = shift_tail_normalize(spec.tree.omega());
    if (offset) *offset = st.offset;
    if (st.offset == 0) return spec;

    Tree tail_tree(spec.tree.alphabet_size(), st.tail);
    if (spec.weights.as_constant()) return ShiftSpec{std::move(tail_tree), spec.weights};
    WeightRule weights = WeightRule::custom(
        spec.weights.describe() + " over shifted tail",
        [rule = spec.weights, target = spec.tree, off = st.offset](const TreeWord& u) {
            return rule.evaluate(shift_tail_map(u, off, target));
        });
    return ShiftSpec{std::move(tail_tree), std::move(weights)};
}

namespace {

std::vector<SparseOperator> projections_on(const Partition& partition, const BasisPtr& basis) {
    std::vector<SparseOperator> out;
    for (std::size_t r = 0; r < partition.k(); ++r) out.emplace_back(basis);
    for (std::size_t i = 0; i < basis->size(); ++i) out[partition.remainder_class((*basis)[i])].set(i, i, 1);
    return out;
}

}  // namespace

std::vector<SparseOperator> reducing_projections(const ShiftSpec& spec, std::size_t k, const Window& window,
                                                 BasisPtr basis) {
    if (!spec.tree.periodic()) throw std::domain_error("reducing_projections: omega is not periodic");
    const Partition partition(spec.tree, k);
    if (!is_k_periodic(spec.weights, partition, window).ok())
        throw std::domain_error("reducing_projections: weights are not " + std::to_string(k) + "-periodic");
    if (!basis) basis = Basis::of_window(spec.tree, window);
    return projections_on(partition, basis);
}

Verdict verdict(const ShiftSpec& spec, std::size_t kmax, const Window& window) {
    Verdict out;
    if (spec.tree.omega().is_generated()) {
        if (!spec.tree.omega().certified_aperiodic())
            throw std::domain_error("verdict: generated word '" + spec.tree.omega().name() +
                                    "' is not certified aperiodic");
        out.outcome = Irreducible{Irreducible::Reason::AperiodicWord, kmax, window};
        out.honesty = Honesty::Structural;
        return out;
    }

    const ShiftSpec periodic = normalize_shift_tail(spec, &out.shift_offset);
    const BasisPtr basis = Basis::of_window(periodic.tree, window);
    std::optional<std::vector<SparseOperator>> shifts;

    for (std::size_t k = 1; k <= kmax; ++k) {
        const Partition partition(periodic.tree, k);
        PeriodicityResult periodicity = is_k_periodic(periodic.weights, partition, window);
        if (!periodicity.ok()) continue;
        CommutationCertificate cert = v_commutes_certificate(periodic, partition, window);
        if (!cert.ok()) continue;

        if (!shifts) shifts = build_shift(periodic, basis);
        const SparseOperator v = right_translation_operator(partition, basis);
        const std::vector<bool> interior = interior_mask(periodic.tree, *basis, window, k);

        Reducible red;
        red.k_min = k;
        for (const auto& t : *shifts) red.shift_defect = std::max(red.shift_defect, commutation_defect(v, t, interior));

        const auto projections = projections_on(partition, basis);
        SparseOperator sum(basis);
        for (const auto& p : projections) {
            sum = sum + p;
            red.projections.max_v_defect = std::max(red.projections.max_v_defect, commutation_defect(p, v, interior));
        }
        red.projections.count = projections.size();
        red.projections.sums_to_identity = sum == SparseOperator::identity(basis);
        if (red.shift_defect != 0 || red.projections.max_v_defect != 0 || !red.projections.sums_to_identity)
            throw std::logic_error("verdict: certified k=" + std::to_string(k) + " fails its projection checks");

        red.block_layout_available = true;
        const bool structural =
            *periodicity.certified == Honesty::Structural && *cert.certified == Honesty::Structural;
        red.periodicity = std::move(periodicity);
        red.certificate = std::move(cert);
        out.honesty = structural ? Honesty::Structural : Honesty::WindowCertified;
        out.outcome = std::move(red);
        return out;
    }

    out.outcome = Irreducible{Irreducible::Reason::NoPeriodUpTo, kmax, window};
    out.honesty = Honesty::WindowCertified;
    return out;
}

RestrictionReport restriction_report(const ShiftSpec& spec, std::size_t k, const Window& window) {
    const BasisPtr basis = Basis::of_window(spec.tree, window);
    const auto projections = reducing_projections(spec, k, window, basis);
    const Partition partition(spec.tree, k);
    const std::vector<bool> interior = interior_mask(spec.tree, *basis, window, std::nullopt);
    const auto shifts = build_shift(spec, basis);

    RestrictionReport report;
    report.k = k;
    std::map<std::tuple<Letter, std::size_t, std::size_t>, std::size_t> counts;
    for (std::size_t g = 0; g < shifts.size(); ++g) {
        const Letter letter = static_cast<Letter>(g + 1);
        for (const auto& [key, value] : shifts[g].entries()) {
            if (!interior[key.second]) continue;
            ++counts[{letter, partition.remainder_class((*basis)[key.second]),
                      partition.remainder_class((*basis)[key.first])}];
        }

        bool preserves = true;
        for (const auto& p : projections) {
            const SparseOperator diff = p * shifts[g] * p - shifts[g] * p;
            for (const auto& [key, value] : diff.entries())
                if (interior[key.second]) preserves = false;
        }
        report.generators.push_back(GeneratorSplit{letter, preserves});
    }
    for (const auto& [key, edges] : counts)
        report.transitions.push_back(RemainderTransition{std::get<0>(key), std::get<1>(key), std::get<2>(key), edges});
    return report;
}

TreeWordSet transport_unweighted_seed(const TreeWordSet& seed, const Partition& partition, const Window& window) {
    TreeWordSet reps;
    for (const auto& s : seed) {
        if (!window.contains(s)) throw std::invalid_argument("seed word outside the window: " + to_string(s));
        if (partition.remainder_class(s) != 0)
            throw std::invalid_argument("seed word has nonzero remainder: " + to_string(s));
        for (long long j : {-1LL, 1LL}) {
            TreeWord t = partition.tree().right_translate(s, j, partition.k());
            if (window.contains(t) && !seed.contains(t))
                throw std::invalid_argument("seed is not closed under translation at " + to_string(s));
        }
        reps.insert(partition.class_representative(s));
    }

    const Partition unit(partition.tree(), 1);
    TreeWordSet out;
    for (auto& y : partition.tree().enumerate(window))
        if (reps.contains(unit.class_representative(y))) out.insert(std::move(y));
    return out;
}

IrreducibilityEvidence irreducibility_evidence(const ShiftSpec& spec, const Window& window,
                                               std::optional<std::size_t> max_m) {
    const Tree& tree = spec.tree;
    if (!tree.omega().is_generated())
        throw std::domain_error("irreducibility_evidence: omega is eventually periodic, so the shift may reduce");
    const std::size_t last = max_m.value_or(2 * (window.max_pos + window.max_neg) + 4);

    IrreducibilityEvidence ev;
    ev.non_increasing = true;
    for (std::size_t m = 1; m <= last; ++m) {
        const TreeWordSet fixed = range_fixed_set(tree, m, window);
        if (!ev.chain.empty() && fixed.size() > ev.chain.back()) ev.non_increasing = false;
        ev.chain.push_back(fixed.size());
        if (!ev.reaches_root_at && fixed.size() == 1 && fixed.begin()->is_root()) ev.reaches_root_at = m;
    }

    const auto words = tree.enumerate(window);
    ev.window_size = words.size();
    TreeWordSet seen{TreeWord{}};
    std::deque<TreeWord> queue{TreeWord{}};
    auto visit = [&](TreeWord w) {
        if (window.contains(w) && seen.insert(w).second) queue.push_back(std::move(w));
    };
    while (!queue.empty()) {
        const TreeWord u = std::move(queue.front());
        queue.pop_front();
        for (Letter i = 1; i <= tree.alphabet_size(); ++i) {
            visit(tree.left_create(i, u));
            if (auto down = tree.left_annihilate(i, u)) visit(std::move(*down));
        }
    }
    ev.reachable = seen.size();
    return ev;
}

}  // namespace ncshift
