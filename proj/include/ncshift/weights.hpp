#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "ncshift/partition.hpp"
#include "ncshift/scalar.hpp"
#include "ncshift/tree.hpp"

namespace ncshift {

// How much a certificate covers: the whole index set (by construction of
// the rule) or only the words of a finite window.
enum class Honesty { Structural, WindowCertified };

const char* to_string(Honesty h);

// A finitely presented weight family {lambda_u}. Values are positive exact
// rationals; evaluate() rejects anything else.
class WeightRule {
public:
    struct Constant {
        Rational value;
    };
    struct Tabulated {
        std::map<TreeWord, Rational> entries;
        Rational fallback;
    };
    struct ClassPeriodic;
    struct Custom {
        std::string name;
        std::function<Rational(const TreeWord&)> fn;
    };

    static WeightRule constant(Rational value);
    static WeightRule tabulated(std::map<TreeWord, Rational> entries, Rational fallback);
    // Evaluates `base` at the k-class representative.
    static WeightRule class_periodic(Partition partition, WeightRule base);
    static WeightRule custom(std::string name, std::function<Rational(const TreeWord&)> fn);

    Rational evaluate(const TreeWord& u) const;

    const Constant* as_constant() const;
    const Tabulated* as_tabulated() const;
    const ClassPeriodic* as_class_periodic() const;
    const Custom* as_custom() const;

    std::string describe() const;

private:
    struct Node;
    explicit WeightRule(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct WeightRule::ClassPeriodic {
    Partition partition;
    WeightRule base;
};

// Weights evaluated at the target of the edge, lambda_{iu}.
inline Rational edge_weight(const WeightRule& rule, const Tree& tree, Letter i, const TreeWord& u) {
    return rule.evaluate(tree.left_create(i, u));
}

struct PeriodicityCounterexample {
    TreeWord word;
    TreeWord representative;
    Rational value;
    Rational representative_value;
};

struct PeriodicityResult {
    std::optional<Honesty> certified;  // empty when a counterexample was found
    std::optional<PeriodicityCounterexample> counterexample;

    bool ok() const noexcept { return certified.has_value(); }
};

// Constancy of lambda on every k-class (k given by `partition`), checked
// structurally for matching class-periodic rules and otherwise on every word
// of the window.
PeriodicityResult is_k_periodic(const WeightRule& rule, const Partition& partition, const Window& window);

struct MinimalPeriod {
    std::size_t k = 0;
    Honesty honesty = Honesty::WindowCertified;
};

std::optional<MinimalPeriod> minimal_period(const WeightRule& rule, const Tree& tree, std::size_t kmax,
                                            const Window& window);

// Diagonal unitary U xi_u = mu_u xi_u making U T U^* a shift with weights
// |lambda_u|. Input values must be nonzero with rational modulus.
struct PhaseNormalization {
    std::map<TreeWord, ComplexRational> mu;
    std::map<TreeWord, Rational> weights;
};

PhaseNormalization phase_normalize(const Tree& tree, const std::map<TreeWord, ComplexRational>& table,
                                   const ComplexRational& fallback, const Window& window);

}  // namespace ncshift
