#include <fstream>
#include <sstream>

#include "ncshift/cli.hpp"

namespace ncshift::cli {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key))
        throw ConfigError(std::string(where) + ": missing field '" + key + "'");
    return j.at(key);
}

std::string string_field(const json& j, const char* key, const char* where) {
    const json& v = field(j, key, where);
    if (!v.is_string()) throw ConfigError(std::string(where) + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

std::size_t count_field(const json& j, const char* key, const char* where, std::size_t min) {
    const json& v = field(j, key, where);
    if (!v.is_number_integer() || v.get<long long>() < static_cast<long long>(min))
        throw ConfigError(std::string(where) + ": field '" + key + "' must be an integer >= " + std::to_string(min));
    return v.get<std::size_t>();
}

Rational rational_field(const json& j, const char* key, const char* where) {
    const json& v = field(j, key, where);
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (!v.is_string()) throw ConfigError(std::string(where) + ": '" + key + "' must be a \"p/q\" string");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::exception& e) {
        throw ConfigError(std::string(where) + ": " + e.what());
    }
}

FiniteWord word_field(const json& j, const char* key, const char* where, std::size_t n) {
    try {
        return parse_word(string_field(j, key, where), n);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string(where) + ": " + e.what());
    }
}

// 0, 1, ..., n, 11, 12, ...: a bijection from words to naturals.
std::size_t word_code(const FiniteWord& v, std::size_t n) {
    std::size_t code = 0;
    for (Letter l : v) code = code * n + l;
    return code;
}

}  // namespace

InfiniteWord parse_omega(const json& j, std::size_t n) {
    const std::string type = string_field(j, "type", "omega");
    if (type == "periodic") {
        FiniteWord period = word_field(j, "period", "omega", n);
        if (period.empty()) throw ConfigError("omega: period must be nonempty");
        return InfiniteWord::periodic(std::move(period));
    }
    if (type == "eventually_periodic") {
        FiniteWord pre = word_field(j, "preperiod", "omega", n);
        FiniteWord period = word_field(j, "period", "omega", n);
        if (period.empty()) throw ConfigError("omega: period must be nonempty");
        return InfiniteWord::eventually_periodic(std::move(pre), std::move(period));
    }
    if (type == "builtin_aperiodic") {
        const std::string name = string_field(j, "name", "omega");
        auto word = InfiniteWord::builtin(name);
        if (!word) throw ConfigError("omega: unknown builtin word '" + name + "'");
        for (std::size_t m = 1; m <= 64; ++m)
            if (word->at(m) > n) throw ConfigError("omega: '" + name + "' uses letters outside the alphabet");
        return *word;
    }
    throw ConfigError("omega: unknown type '" + type + "'");
}

WeightRule builtin_weights(const std::string& name, const Tree& tree) {
    if (name == "depth_injective") {
        if (!tree.periodic()) throw ConfigError("weights: depth_injective needs a purely periodic omega");
        Partition signed_depth(tree, 1);
        return WeightRule::custom(name, [signed_depth](const TreeWord& u) {
            long long s = signed_depth.signed_depth(u);
            return Rational(1) + Rational(1, 1 + (s < 0 ? -s : s));
        });
    }
    if (name == "word_injective") {
        const std::size_t n = tree.alphabet_size();
        return WeightRule::custom(name, [n](const TreeWord& u) {
            return Rational(static_cast<long long>(1 + u.depth)) +
                   Rational(1, static_cast<long long>(1 + word_code(u.positive, n)));
        });
    }
    throw ConfigError("weights: unknown builtin rule '" + name + "'");
}

WeightRule parse_weights(const json& j, const Tree& tree) {
    const std::string type = string_field(j, "type", "weights");
    try {
        if (type == "constant") return WeightRule::constant(rational_field(j, "value", "weights"));
        if (type == "tabulated") {
            std::map<TreeWord, Rational> entries;
            if (j.contains("entries")) {
                if (!j.at("entries").is_object()) throw ConfigError("weights: entries must be an object");
                for (const auto& [key, value] : j.at("entries").items()) {
                    TreeWord u = parse_tree_word(key, tree.alphabet_size());
                    if (!tree.is_canonical(u)) throw ConfigError("weights: entry '" + key + "' is not reduced");
                    entries[u] = rational_field(json{{"v", value}}, "v", "weights entry");
                }
            }
            return WeightRule::tabulated(std::move(entries), rational_field(j, "default", "weights"));
        }
        if (type == "class_periodic") {
            if (!tree.periodic()) throw ConfigError("weights: class_periodic needs a purely periodic omega");
            Partition partition(tree, count_field(j, "k", "weights", 1));
            return WeightRule::class_periodic(std::move(partition), parse_weights(field(j, "base", "weights"), tree));
        }
        if (type == "builtin") return builtin_weights(string_field(j, "name", "weights"), tree);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("weights: ") + e.what());
    }
    throw ConfigError("weights: unknown type '" + type + "'");
}

ShiftSpec SpecConfig::spec() const {
    Tree t = tree();
    WeightRule w = parse_weights(weights_json, t);
    return ShiftSpec{std::move(t), std::move(w)};
}

SpecConfig parse_config(const json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    SpecConfig c;
    c.n = count_field(j, "n", "config", 1);
    c.omega = parse_omega(field(j, "omega", "config"), c.n);
    c.weights_json = j.value("weights", json{{"type", "constant"}, {"value", "1"}});
    if (j.contains("window")) {
        const json& w = j.at("window");
        c.window = Window{count_field(w, "pos", "window", 0), count_field(w, "neg", "window", 0)};
    }
    if (j.contains("kmax")) c.kmax = count_field(j, "kmax", "config", 1);
    try {
        (void)c.tree();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    (void)c.spec();
    return c;
}

SpecConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_config(j);
}

}  // namespace ncshift::cli
