#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ncshift/weights.hpp"
#include "oracles.hpp"

using namespace ncshift;

namespace {

FiniteWord w(const char* digits) { return FiniteWord::from_digits(digits); }
TreeWord tw(const char* digits, std::size_t depth) { return TreeWord{w(digits), depth}; }
Tree tree_of(std::size_t n, const char* period) { return Tree(n, InfiniteWord::periodic(w(period))); }

}  // namespace

TEST_CASE("evaluate") {
    const Tree two = tree_of(2, "2");
    CHECK(WeightRule::constant(1).evaluate(tw("121", 2)) == 1);
    const auto tab = WeightRule::tabulated({{tw("1", 0), Rational(3)}}, 1);
    CHECK(tab.evaluate(tw("1", 0)) == 3);
    CHECK(tab.evaluate(tw("2", 0)) == 1);
    const auto ab = fixtures::alternating(two, 2, 3);
    CHECK(ab.evaluate(tw("2", 0)) == 3);
    CHECK(ab.evaluate(tw("", 0)) == 2);
    CHECK(ab.evaluate(tw("22", 0)) == 2);

    CHECK_THROWS_AS(WeightRule::constant(0), std::domain_error);
    CHECK_THROWS_AS(WeightRule::tabulated({{tw("1", 0), Rational(-1)}}, 1), std::domain_error);
    const auto bad = WeightRule::custom("bad", [](const TreeWord& u) { return Rational(static_cast<long long>(u.depth)); });
    CHECK_THROWS_AS(bad.evaluate(tw("", 0)), std::domain_error);
    CHECK(bad.evaluate(tw("", 2)) == 2);
}

TEST_CASE("is_k_periodic") {
    const Tree two = tree_of(2, "2");
    const Window win{4, 6};
    auto r = is_k_periodic(WeightRule::constant(5), Partition(two, 3), win);
    CHECK(r.certified == Honesty::Structural);

    const auto ab = fixtures::alternating(two, 2, 3);
    r = is_k_periodic(ab, Partition(two, 1), win);
    REQUIRE_FALSE(r.ok());
    CHECK(r.counterexample->word == tw("2", 0));
    CHECK(r.counterexample->representative == tw("", 0));
    CHECK(r.counterexample->value == 3);
    CHECK(r.counterexample->representative_value == 2);

    CHECK(is_k_periodic(ab, Partition(two, 2), win).certified == Honesty::Structural);
    CHECK(is_k_periodic(ab, Partition(two, 4), win).certified == Honesty::Structural);
    // Same values through an opaque rule: only the window can vouch for them.
    const auto opaque = WeightRule::custom("opaque", [ab](const TreeWord& u) { return ab.evaluate(u); });
    CHECK(is_k_periodic(opaque, Partition(two, 2), win).certified == Honesty::WindowCertified);
    CHECK_FALSE(is_k_periodic(opaque, Partition(two, 3), win).ok());
}

TEST_CASE("periodicity equals constancy on orbits") {
    const Tree onetwo = tree_of(2, "12");
    const Window win{3, 8};
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        // Random tabulated rule, sometimes made periodic on purpose.
        const std::size_t k0 = 1 + rng() % 2;
        const Partition planted(onetwo, k0);
        std::map<TreeWord, Rational> entries;
        const bool periodic = rng() % 2;
        for (const auto& u : onetwo.enumerate(win)) {
            const TreeWord key = periodic ? planted.class_representative(u) : u;
            if (!entries.contains(key)) entries[key] = Rational(static_cast<long long>(1 + rng() % 3));
            entries[u] = entries[key];
        }
        const auto rule = WeightRule::tabulated(entries, 1);
        for (std::size_t k = 1; k <= 3; ++k) {
            const Partition p(onetwo, k);
            bool constant_on_orbits = true;
            for (const auto& u : onetwo.enumerate(win))
                for (const auto& x : p.orbit(u, 6))
                    if (win.contains(x) && rule.evaluate(x) != rule.evaluate(u)) constant_on_orbits = false;
            REQUIRE(is_k_periodic(rule, p, win).ok() == constant_on_orbits);
        }
    }
}

TEST_CASE("minimal period") {
    const Tree two = tree_of(2, "2");
    const Window win{4, 12};
    CHECK(minimal_period(WeightRule::constant(2), two, 8, win)->k == 1);
    CHECK(minimal_period(fixtures::alternating(two, 2, 3), two, 8, win)->k == 2);
    CHECK_FALSE(minimal_period(fixtures::depth_injective(two), two, 6, win).has_value());
    const Tree onetwo = tree_of(2, "12");
    for (std::size_t k0 = 1; k0 <= 4; ++k0) {
        const auto mp = minimal_period(fixtures::planted_period(onetwo, k0), onetwo, 8, win);
        REQUIRE(mp.has_value());
        CHECK(mp->k == k0);
        CHECK(mp->honesty == Honesty::Structural);
        // Multiples stay certified.
        for (std::size_t m = 1; m * k0 <= 8; ++m)
            CHECK(is_k_periodic(fixtures::planted_period(onetwo, k0), Partition(onetwo, m * k0), win).ok());
    }
}

TEST_CASE("n = 1 sequences") {
    const Tree line(1, InfiniteWord::periodic(w("1")));
    const Window win{12, 12};
    const std::vector<Rational> pattern{1, 2, 1, 3};
    const auto mp = minimal_period(fixtures::periodic_sequence(pattern), line, 8, win);
    REQUIRE(mp.has_value());
    CHECK(mp->k == oracle::sequence_period(pattern));
    CHECK(mp->honesty == Honesty::WindowCertified);
    CHECK_FALSE(minimal_period(fixtures::injective_sequence(1), line, 8, win).has_value());
}

TEST_CASE("phase normalization") {
    const Tree two = tree_of(2, "2");
    const Window win{2, 2};
    std::map<TreeWord, ComplexRational> table{{tw("1", 0), {-3, 0}}};
    auto out = phase_normalize(two, table, {1, 0}, win);
    CHECK(out.weights.at(tw("1", 0)) == 3);
    CHECK(out.mu.at(tw("1", 0)) == ComplexRational{-1, 0});
    CHECK(out.mu.at(tw("", 0)) == ComplexRational{1, 0});

    table = {{tw("2", 0), {0, 2}}};
    out = phase_normalize(two, table, {1, 0}, win);
    CHECK(out.weights.at(tw("2", 0)) == 2);
    CHECK(norm_squared(out.mu.at(tw("2", 0))) == 1);

    out = phase_normalize(two, {}, {5, 0}, win);
    for (const auto& [u, mu] : out.mu) CHECK(mu == ComplexRational{1, 0});
    for (const auto& [u, weight] : out.weights) CHECK(weight == 5);

    CHECK_THROWS_AS(phase_normalize(two, {{tw("1", 0), {0, 0}}}, {1, 0}, win), std::domain_error);
    CHECK_THROWS_AS(phase_normalize(two, {{tw("1", 0), {1, 1}}}, {1, 0}, win), std::domain_error);

    // A second pass over the normalized weights changes nothing.
    std::map<TreeWord, ComplexRational> mixed;
    for (const auto& u : two.enumerate(win)) mixed[u] = {Rational(3, 5) * 2, Rational(-4, 5) * 2};
    out = phase_normalize(two, mixed, {1, 0}, win);
    std::map<TreeWord, ComplexRational> again;
    for (const auto& [u, weight] : out.weights) again[u] = {weight, 0};
    for (const auto& [u, mu] : phase_normalize(two, again, {1, 0}, win).mu) CHECK(mu == ComplexRational{1, 0});
}

TEST_CASE("descriptions") {
    const Tree two = tree_of(2, "2");
    CHECK(WeightRule::constant(Rational(3, 2)).describe() == "constant(3/2)");
    CHECK(fixtures::alternating(two, 1, 2).describe().rfind("class_periodic(k=2", 0) == 0);
    CHECK(std::string(to_string(Honesty::Structural)) == "structural");
    CHECK(std::string(to_string(Honesty::WindowCertified)) == "window");
}
