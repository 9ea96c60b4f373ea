#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ncshift/operators.hpp"

namespace ncshift::cli {

// Malformed or inconsistent configuration (exit code 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SpecConfig {
    std::size_t n = 2;
    InfiniteWord omega = InfiniteWord::periodic(FiniteWord{1});
    nlohmann::json weights_json;
    Window window{6, 12};
    std::size_t kmax = 8;

    Tree tree() const { return Tree(n, omega); }
    ShiftSpec spec() const;
};

InfiniteWord parse_omega(const nlohmann::json& j, std::size_t n);
WeightRule parse_weights(const nlohmann::json& j, const Tree& tree);
SpecConfig parse_config(const nlohmann::json& j);
SpecConfig load_config(const std::string& path);

// The built-in weight rules selectable by name.
WeightRule builtin_weights(const std::string& name, const Tree& tree);

enum class Format { Text, Json, Dot };

struct CommandOptions {
    std::optional<Window> window;
    std::optional<std::size_t> kmax;
    std::size_t k = 1;
    Format format = Format::Text;
};

enum ExitCode : int { Success = 0, Counterexample = 1, BadConfig = 2, Irreducibility = 3 };

struct CommandResult {
    int exit_code = Success;
    std::string output;
};

CommandResult cmd_classify(const SpecConfig& config, const CommandOptions& options);
CommandResult cmd_tree(const SpecConfig& config, const CommandOptions& options);
CommandResult cmd_partition(const SpecConfig& config, const CommandOptions& options);
CommandResult cmd_matrices(const SpecConfig& config, const CommandOptions& options);
CommandResult cmd_verdict(const SpecConfig& config, const CommandOptions& options);
CommandResult cmd_verify(const SpecConfig& config, const CommandOptions& options);

// Dispatches by command name; configuration problems become exit code 2.
CommandResult run_command(const std::string& command, const SpecConfig& config, const CommandOptions& options);

}  // namespace ncshift::cli
