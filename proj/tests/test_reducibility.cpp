#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ncshift/reducibility.hpp"

using namespace ncshift;

namespace {

FiniteWord w(const char* digits) { return FiniteWord::from_digits(digits); }
TreeWord tw(const char* digits, std::size_t depth) { return TreeWord{w(digits), depth}; }
Tree tree_of(std::size_t n, const char* period) { return Tree(n, InfiniteWord::periodic(w(period))); }

}  // namespace

TEST_CASE("verdict basics") {
    const Window win{4, 8};
    auto v = verdict({Tree(2, InfiniteWord::thue_morse()), WeightRule::constant(2)}, 8, win);
    REQUIRE(v.as_irreducible());
    CHECK(v.as_irreducible()->reason == Irreducible::Reason::AperiodicWord);
    CHECK(v.honesty == Honesty::Structural);

    const Tree two = tree_of(2, "2");
    v = verdict({two, WeightRule::constant(1)}, 8, win);
    REQUIRE(v.as_reducible());
    CHECK(v.as_reducible()->k_min == 1);
    CHECK(v.honesty == Honesty::Structural);

    v = verdict({two, fixtures::depth_injective(two)}, 6, Window{4, 12});
    REQUIRE(v.as_irreducible());
    CHECK(v.as_irreducible()->reason == Irreducible::Reason::NoPeriodUpTo);
    CHECK(v.as_irreducible()->kmax == 6);
    CHECK(v.honesty == Honesty::WindowCertified);

    const auto uncertified = InfiniteWord::generated("mystery", [](std::size_t m) -> Letter { return 1 + m % 2; }, false);
    CHECK_THROWS_AS(verdict({Tree(2, uncertified), WeightRule::constant(1)}, 8, win), std::domain_error);
}

TEST_CASE("reducible verdicts carry passing certificates") {
    const Tree two = tree_of(2, "2");
    const Window win{4, 8};
    const ShiftSpec ab{two, fixtures::alternating(two, 2, 3)};
    const auto v = verdict(ab, 8, win);
    REQUIRE(v.as_reducible());
    const auto& red = *v.as_reducible();
    CHECK(red.k_min == 2);
    CHECK(red.certificate.ok());
    CHECK(red.shift_defect == 0);
    CHECK(red.projections.count == 2);
    CHECK(red.projections.sums_to_identity);
    CHECK(red.projections.max_v_defect == 0);
    CHECK(red.block_layout_available);
    CHECK(v_commutes_certificate(ab, Partition(two, red.k_min), win).ok());
}

TEST_CASE("verdict is invariant under shift-tail normalization") {
    const Window win{3, 8};
    const Tree omega(2, InfiniteWord::eventually_periodic(w("1"), w("2")));
    const Tree tail = tree_of(2, "2");
    const auto tail_rule = fixtures::alternating(tail, 2, 3);
    // The same shift written over omega: weights pulled back through the relabelling.
    const auto omega_rule = WeightRule::custom("pulled back", [tail_rule, omega](const TreeWord& u) {
        return tail_rule.evaluate(shift_tail_unmap(u, 1, omega));
    });
    const auto direct = verdict({tail, tail_rule}, 8, win);
    const auto shifted = verdict({omega, omega_rule}, 8, win);
    REQUIRE(direct.as_reducible());
    REQUIRE(shifted.as_reducible());
    CHECK(shifted.shift_offset == 1);
    CHECK(direct.as_reducible()->k_min == shifted.as_reducible()->k_min);

    const auto injective = verdict({omega, WeightRule::custom("depth", [](const TreeWord& u) {
                                        return Rational(static_cast<long long>(2 + u.depth));
                                    })},
                                   6, win);
    CHECK_FALSE(injective.reducible());
}

TEST_CASE("reducing projections") {
    const Tree two = tree_of(2, "2");
    const Window win{3, 4};
    const ShiftSpec ab{two, fixtures::alternating(two, 2, 3)};
    const auto ps = reducing_projections(ab, 2, win);
    REQUIRE(ps.size() == 2);
    const auto& basis = ps[0].basis();
    auto in_range = [&](std::size_t r, const TreeWord& u) { return ps[r].at(*basis->index_of(u), *basis->index_of(u)) == 1; };
    CHECK(in_range(1, tw("", 1)));
    CHECK(in_range(1, tw("2", 0)));
    CHECK(in_range(1, tw("12", 0)));  // 1 2^{-1} translated by 2^2
    CHECK(in_range(1, tw("1", 1)));
    CHECK(in_range(0, tw("", 0)));
    CHECK(in_range(0, tw("1", 0)));
    CHECK(in_range(0, tw("21", 0)));
    CHECK(ps[0] + ps[1] == SparseOperator::identity(basis));

    const auto single = reducing_projections({two, WeightRule::constant(1)}, 1, win);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == SparseOperator::identity(single[0].basis()));

    CHECK_THROWS_AS(reducing_projections(ab, 1, win), std::domain_error);
    CHECK_THROWS_AS(reducing_projections({Tree(2, InfiniteWord::thue_morse()), WeightRule::constant(1)}, 1, win),
                    std::domain_error);
}

TEST_CASE("restriction report") {
    const Tree two = tree_of(2, "2");
    const Window win{3, 5};
    const ShiftSpec ab{two, fixtures::alternating(two, 2, 3)};
    const auto report = restriction_report(ab, 2, win);
    REQUIRE(report.generators.size() == 2);
    CHECK(report.generators[0].preserves_split);
    CHECK_FALSE(report.generators[1].preserves_split);
    for (const auto& t : report.transitions)
        if (t.letter == 1) CHECK(t.from == t.to);
    // T_2 moves phi (remainder 0) to 2 (remainder 1) and 2^{-1} (remainder 1) to phi.
    auto has = [&](Letter l, std::size_t from, std::size_t to) {
        for (const auto& t : report.transitions)
            if (t.letter == l && t.from == from && t.to == to) return true;
        return false;
    };
    CHECK(has(2, 0, 1));
    CHECK(has(2, 1, 0));

    const auto unit = restriction_report({two, WeightRule::constant(1)}, 1, win);
    for (const auto& g : unit.generators) CHECK(g.preserves_split);
}

TEST_CASE("transport of unweighted seeds") {
    const Tree two = tree_of(2, "2");
    const Window win{3, 6};
    const Partition p(two, 2);
    const auto words = two.enumerate(win);

    CHECK(transport_unweighted_seed({}, p, win).empty());

    TreeWordSet remainder_zero;
    for (const auto& u : words)
        if (p.remainder_class(u) == 0) remainder_zero.insert(u);
    CHECK(transport_unweighted_seed(remainder_zero, p, win).size() == words.size());

    TreeWordSet phi_orbit;
    for (const auto& u : words)
        if (p.class_representative(u) == TreeWord{}) phi_orbit.insert(u);
    const auto generated = transport_unweighted_seed(phi_orbit, p, win);
    TreeWordSet powers;
    for (const auto& u : words)
        if (Partition(two, 1).class_representative(u) == TreeWord{}) powers.insert(u);
    CHECK(generated == powers);
    CHECK(generated.contains(tw("", 1)));
    CHECK(generated.contains(tw("222", 0)));

    CHECK_THROWS_AS(transport_unweighted_seed({tw("", 1)}, p, win), std::invalid_argument);
    CHECK_THROWS_AS(transport_unweighted_seed({tw("", 0)}, p, win), std::invalid_argument);
}

TEST_CASE("irreducibility evidence") {
    const ShiftSpec tm{Tree(2, InfiniteWord::thue_morse()), WeightRule::constant(1)};
    const auto ev = irreducibility_evidence(tm, Window{6, 6});
    CHECK(ev.passed());
    CHECK(ev.non_increasing);
    CHECK(ev.reachable == ev.window_size);
    CHECK(ev.chain.front() > ev.chain.back());
    CHECK(ev.chain.back() == 1);

    // omega_8 sigma^4(omega) begins with omega_12 (the square 2112 2112 at
    // letters 5..12), so on P = M = 8 the chain needs m = 13.
    const auto wide = irreducibility_evidence(tm, Window{8, 8});
    CHECK(wide.passed());
    CHECK(wide.reaches_root_at == 13);
    CHECK(range_fixed_set(tm.tree, 12, Window{8, 8}) == TreeWordSet{TreeWord{}, tw("12212112", 4)});

    const ShiftSpec fib{Tree(2, InfiniteWord::fibonacci()), WeightRule::constant(1)};
    CHECK(irreducibility_evidence(fib, Window{5, 5}).passed());

    CHECK_THROWS_AS(irreducibility_evidence({tree_of(2, "2"), WeightRule::constant(1)}, Window{3, 3}),
                    std::domain_error);
}

TEST_CASE("planted periods are recovered") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t n = 2 + rng() % 2;
        FiniteWord v0;
        do {
            v0 = FiniteWord{};
            const std::size_t len = 1 + rng() % 3;
            for (std::size_t t = 0; t < len; ++t) v0.push_back(static_cast<Letter>(1 + rng() % n));
        } while (!is_primitive(v0));
        const Tree tree(n, InfiniteWord::periodic(v0));
        const std::size_t k0 = 1 + rng() % 4;
        const auto v = verdict({tree, fixtures::planted_period(tree, k0)}, 8, Window{2, 12});
        REQUIRE(v.as_reducible());
        CHECK(v.as_reducible()->k_min == k0);
    }
}
