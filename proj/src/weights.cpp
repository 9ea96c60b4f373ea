#include "ncshift/weights.hpp"

#include <stdexcept>

namespace ncshift {

const char* to_string(Honesty h) { return h == Honesty::Structural ? "structural" : "window"; }

struct WeightRule::Node {
    std::variant<Constant, Tabulated, ClassPeriodic, Custom> rule;
};

namespace {

void require_positive(const Rational& r, const char* what) {
    if (r <= 0) throw std::domain_error(std::string(what) + ": weights must be positive, got " + to_string(r));
}

}  // namespace

WeightRule WeightRule::constant(Rational value) {
    require_positive(value, "constant weight");
    return WeightRule(std::make_shared<const Node>(Node{Constant{std::move(value)}}));
}

WeightRule WeightRule::tabulated(std::map<TreeWord, Rational> entries, Rational fallback) {
    require_positive(fallback, "tabulated default");
    for (const auto& [u, value] : entries) require_positive(value, "tabulated entry");
    return WeightRule(std::make_shared<const Node>(Node{Tabulated{std::move(entries), std::move(fallback)}}));
}

WeightRule WeightRule::class_periodic(Partition partition, WeightRule base) {
    return WeightRule(std::make_shared<const Node>(Node{ClassPeriodic{std::move(partition), std::move(base)}}));
}

WeightRule WeightRule::custom(std::string name, std::function<Rational(const TreeWord&)> fn) {
    if (!fn) throw std::invalid_argument("custom weight rule needs a function");
    return WeightRule(std::make_shared<const Node>(Node{Custom{std::move(name), std::move(fn)}}));
}

Rational WeightRule::evaluate(const TreeWord& u) const {
    return std::visit(
        [&](const auto& rule) -> Rational {
            using T = std::decay_t<decltype(rule)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return rule.value;
            } else if constexpr (std::is_same_v<T, Tabulated>) {
                auto it = rule.entries.find(u);
                return it == rule.entries.end() ? rule.fallback : it->second;
            } else if constexpr (std::is_same_v<T, ClassPeriodic>) {
                return rule.base.evaluate(rule.partition.class_representative(u));
            } else {
                Rational value = rule.fn(u);
                require_positive(value, rule.name.c_str());
                return value;
            }
        },
        node_->rule);
}

const WeightRule::Constant* WeightRule::as_constant() const { return std::get_if<Constant>(&node_->rule); }
const WeightRule::Tabulated* WeightRule::as_tabulated() const { return std::get_if<Tabulated>(&node_->rule); }
const WeightRule::ClassPeriodic* WeightRule::as_class_periodic() const {
    return std::get_if<ClassPeriodic>(&node_->rule);
}
const WeightRule::Custom* WeightRule::as_custom() const { return std::get_if<Custom>(&node_->rule); }

std::string WeightRule::describe() const {
    if (auto c = as_constant()) return "constant(" + to_string(c->value) + ")";
    if (auto t = as_tabulated())
        return "tabulated(" + std::to_string(t->entries.size()) + " entries, default " + to_string(t->fallback) + ")";
    if (auto p = as_class_periodic())
        return "class_periodic(k=" + std::to_string(p->partition.k()) + ", " + p->base.describe() + ")";
    return "custom(" + as_custom()->name + ")";
}

PeriodicityResult is_k_periodic(const WeightRule& rule, const Partition& partition, const Window& window) {
    if (rule.as_constant()) return {Honesty::Structural, std::nullopt};
    if (auto cp = rule.as_class_periodic();
        cp && cp->partition.same_context(partition) && partition.k() % cp->partition.k() == 0)
        return {Honesty::Structural, std::nullopt};

    for (const auto& u : partition.tree().enumerate(window)) {
        TreeWord rep = partition.class_representative(u);
        if (rep == u) continue;
        Rational value = rule.evaluate(u);
        Rational rep_value = rule.evaluate(rep);
        if (value != rep_value)
            return {std::nullopt, PeriodicityCounterexample{u, std::move(rep), std::move(value), std::move(rep_value)}};
    }
    return {Honesty::WindowCertified, std::nullopt};
}

std::optional<MinimalPeriod> minimal_period(const WeightRule& rule, const Tree& tree, std::size_t kmax,
                                            const Window& window) {
    for (std::size_t k = 1; k <= kmax; ++k) {
        auto result = is_k_periodic(rule, Partition(tree, k), window);
        if (result.ok()) return MinimalPeriod{k, *result.certified};
    }
    return std::nullopt;
}

PhaseNormalization phase_normalize(const Tree& tree, const std::map<TreeWord, ComplexRational>& table,
                                   const ComplexRational& fallback, const Window& window) {
    auto lambda = [&](const TreeWord& u) -> const ComplexRational& {
        auto it = table.find(u);
        return it == table.end() ? fallback : it->second;
    };
    // lambda / |lambda|, a unit-modulus phase.
    auto phase = [&](const TreeWord& u) -> std::pair<ComplexRational, Rational> {
        const ComplexRational& z = lambda(u);
        if (z.re == 0 && z.im == 0) throw std::domain_error("phase_normalize: zero weight at " + to_string(u));
        auto modulus = exact_modulus(z);
        if (!modulus) throw std::domain_error("phase_normalize: irrational modulus at " + to_string(u));
        return {ComplexRational{z.re / *modulus, z.im / *modulus}, *modulus};
    };

    PhaseNormalization out;
    for (const auto& u : tree.enumerate(window)) {
        ComplexRational mu{1, 0};
        if (u.positive.empty()) {
            if (u.depth > 0) {
                // Main branch: the edge (phi, m) -> (phi, m-1) carries lambda_{(phi, m-1)}.
                const TreeWord child{{}, u.depth - 1};
                mu = out.mu.at(child) * phase(child).first;
            }
        } else {
            const TreeWord parent{u.positive.drop_front(), u.depth};
            mu = out.mu.at(parent) * conj(phase(u).first);
        }
        out.mu.emplace(u, mu);
        out.weights.emplace(u, phase(u).second);
    }
    return out;
}

}  // namespace ncshift
