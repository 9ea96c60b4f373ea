// Command-line front end: ncshift <command> --config FILE [options]
#include <iostream>

#include <CLI11.hpp>

#include "ncshift/cli.hpp"

namespace {

std::optional<ncshift::Window> parse_window(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return std::nullopt;
    try {
        std::size_t used_p = 0, used_m = 0;
        const std::string p = text.substr(0, comma), m = text.substr(comma + 1);
        const long long pos = std::stoll(p, &used_p), neg = std::stoll(m, &used_m);
        if (used_p != p.size() || used_m != m.size() || pos < 0 || neg < 0) return std::nullopt;
        return ncshift::Window{static_cast<std::size_t>(pos), static_cast<std::size_t>(neg)};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace

int main(int argc, char** argv) {
    using namespace ncshift::cli;

    CLI::App app{"Noncommutative bilateral weighted shifts on finite windows"};
    app.require_subcommand(1);

    std::string config_path;
    std::string window_text;
    std::size_t kmax = 0;
    std::size_t k = 1;
    std::string format = "text";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON configuration file")->required();
        sub->add_option("--window", window_text, "window as P,M");
        sub->add_option("--kmax", kmax, "largest period multiple searched");
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
    };
    const std::pair<const char*, const char*> plain[] = {
        {"classify", "periodic, eventually periodic or aperiodic omega"},
        {"tree", "window tree as text, json or dot"},
        {"verdict", "reducibility verdict with certificates (json)"},
        {"verify", "run every identity check on the window"}};
    for (const auto& [name, help] : plain) add_common(app.add_subcommand(name, help));
    const std::pair<const char*, const char*> with_k[] = {
        {"partition", "component index, remainder and representative per word"},
        {"matrices", "sparse T_i triples and the block layout"}};
    for (const auto& [name, help] : with_k) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub);
        sub->add_option("--k", k, "period multiple")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : BadConfig;
    }

    CommandOptions options;
    options.k = k;
    options.format = format == "json" ? Format::Json : format == "dot" ? Format::Dot : Format::Text;
    if (kmax > 0) options.kmax = kmax;
    if (!window_text.empty()) {
        options.window = parse_window(window_text);
        if (!options.window) {
            std::cerr << "invalid --window '" << window_text << "', expected P,M\n";
            return BadConfig;
        }
    }

    SpecConfig config;
    try {
        config = load_config(config_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return BadConfig;
    }

    const CommandResult result = run_command(app.get_subcommands().front()->get_name(), config, options);
    (result.exit_code == BadConfig ? std::cerr : std::cout) << result.output;
    return result.exit_code;
}
