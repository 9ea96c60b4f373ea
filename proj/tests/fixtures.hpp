// Weight families shared by the unit and acceptance tests.
#pragma once

#include <map>
#include <memory>
#include <random>
#include <set>

#include "ncshift/operators.hpp"

namespace fixtures {

using namespace ncshift;

// a on remainder-0 classes of the 2-partition, b on remainder-1 classes.
inline WeightRule alternating(const Tree& tree, Rational a, Rational b) {
    Partition p(tree, 2);
    return WeightRule::class_periodic(
        p, WeightRule::custom("remainder a/b", [p, a, b](const TreeWord& rep) { return p.remainder_class(rep) == 0 ? a : b; }));
}

// Constant on k0-classes with value (r + 1) + 1/(2 + |v|) at a representative
// (v, m) of remainder r, so different remainders never share a value.
inline WeightRule planted_period(const Tree& tree, std::size_t k0) {
    Partition p(tree, k0);
    return WeightRule::class_periodic(p, WeightRule::custom("planted", [p](const TreeWord& rep) {
                                          return Rational(static_cast<long long>(p.remainder_class(rep) + 1)) +
                                                 Rational(1, static_cast<long long>(2 + rep.positive.size()));
                                      }));
}

// 1 + 1/(1 + |signed depth|).
inline WeightRule depth_injective(const Tree& tree) {
    Partition p(tree, 1);
    return WeightRule::custom("depth injective", [p](const TreeWord& u) {
        const long long s = p.signed_depth(u);
        return Rational(1) + Rational(1, 1 + (s < 0 ? -s : s));
    });
}

// For n = 1 and omega = 1^infinity the tree is Z: (1^j, 0) -> j, (phi, m) -> -m.
inline long long integer_index(const TreeWord& u) {
    return u.depth > 0 ? -static_cast<long long>(u.depth) : static_cast<long long>(u.positive.size());
}

inline WeightRule periodic_sequence(std::vector<Rational> period) {
    return WeightRule::custom("sequence", [period = std::move(period)](const TreeWord& u) {
        const long long p = static_cast<long long>(period.size());
        return period[static_cast<std::size_t>(((integer_index(u) % p) + p) % p)];
    });
}

// Distinct pseudorandom values a_j, drawn on first use.
inline WeightRule injective_sequence(std::uint64_t seed) {
    struct State {
        std::mt19937_64 rng;
        std::map<long long, Rational> values;
        std::set<Rational> used;
    };
    auto state = std::make_shared<State>();
    state->rng.seed(seed);
    return WeightRule::custom("injective sequence", [state](const TreeWord& u) {
        const long long j = integer_index(u);
        auto it = state->values.find(j);
        if (it != state->values.end()) return it->second;
        Rational value;
        do {
            value = Rational(static_cast<long long>(1 + state->rng() % 1000), static_cast<long long>(1 + state->rng() % 97));
        } while (state->used.contains(value));
        state->used.insert(value);
        return state->values.emplace(j, value).first->second;
    });
}

}  // namespace fixtures
