#include <functional>
#include <sstream>

#include "ncshift/cli.hpp"
#include "ncshift/reducibility.hpp"
#include "ncshift/render.hpp"

namespace ncshift::cli {

using nlohmann::json;

namespace {

Window window_of(const SpecConfig& c, const CommandOptions& o) { return o.window.value_or(c.window); }
std::size_t kmax_of(const SpecConfig& c, const CommandOptions& o) { return o.kmax.value_or(c.kmax); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json window_json(const Window& w) { return json{{"pos", w.max_pos}, {"neg", w.max_neg}}; }

const char* kind_name(BlockEntry::Kind kind) {
    switch (kind) {
        case BlockEntry::Kind::ScalarId: return "scalar_id";
        case BlockEntry::Kind::ScalarShift: return "scalar_shift";
        default: return "zero";
    }
}

struct Check {
    std::string name;
    bool passed = true;
    std::string detail;
};

Check check_factorization(const ShiftSpec& spec, const Window& w) {
    const FactorizationReport r = verify_factorization(spec, w);
    Check c{"factorization", r.passed(), std::to_string(r.generators_checked) + " generators"};
    if (!r.passed()) {
        const auto& m = r.mismatches.front();
        c.detail += ", first mismatch T_" + std::to_string(m.letter) + " at (" + to_string(m.row) + ", " +
                    to_string(m.col) + ")";
    }
    return c;
}

Check check_cuntz(const Tree& tree, const Window& w) {
    const CuntzReport r = cuntz_report(tree, w);
    Check c{"cuntz", r.passed(),
            std::to_string(r.isometry_columns_checked) + " isometry columns, " +
                std::to_string(r.interior_rows_checked) + " interior rows, " + std::to_string(r.boundary_rows.size()) +
                " boundary rows"};
    if (!r.passed()) c.detail += ", " + r.failures.front();
    return c;
}

Check check_tree_moves(const Tree& tree, const Window& w) {
    Check c{"tree_moves", true, ""};
    std::size_t count = 0;
    for (const auto& u : tree.enumerate(w)) {
        ++count;
        bool ok = tree.is_canonical(u) && tree.canonicalize(u.positive, u.depth) == u;
        for (Letter i = 1; i <= tree.alphabet_size() && ok; ++i)
            ok = tree.left_annihilate(i, tree.left_create(i, u)) == u;
        const auto [letter, parent] = tree.unique_parent(u);
        ok = ok && tree.left_create(letter, parent) == u;
        if (!ok && c.passed) {
            c.passed = false;
            c.detail = "fails at " + to_string(u) + "; ";
        }
    }
    c.detail += std::to_string(count) + " words";
    return c;
}

Check check_partition(const Tree& tree, std::size_t k, const Window& w) {
    const Partition p(tree, k);
    Check c{"partition_k" + std::to_string(k), true, ""};
    const std::size_t bound = (w.max_pos + w.max_neg) / p.v0().size() + 4;
    std::size_t count = 0;
    for (const auto& u : tree.enumerate(w)) {
        ++count;
        const ClassInfo info = p.classify(u);
        bool ok = p.in_principal_component(info.representative) && p.class_representative(info.representative) ==
                                                                         info.representative &&
                  info.remainder < k && p.brute_force_classify(u, bound) == info.component &&
                  tree.right_translate(info.representative, info.component, k) == u;
        for (long long j = -3; j <= 3 && ok; ++j)
            ok = p.component_index(tree.right_translate(u, j, k)) == info.component + j;
        if (!ok && c.passed) {
            c.passed = false;
            c.detail = "fails at " + to_string(u) + "; ";
        }
    }
    c.detail += std::to_string(count) + " words";
    return c;
}

Check check_shift_tail(const SpecConfig& config, const Window& w) {
    const ShiftTail st = shift_tail_normalize(config.omega);
    const Tree target = config.tree();
    const Tree tail(config.n, st.tail);
    Check c{"shift_tail", true, "offset " + std::to_string(st.offset)};
    for (const auto& u : tail.enumerate(w)) {
        const TreeWord mapped = shift_tail_map(u, st.offset, target);
        if (!target.is_canonical(mapped) || shift_tail_unmap(mapped, st.offset, target) != u) {
            c.passed = false;
            c.detail += ", round trip fails at " + to_string(u);
            break;
        }
    }
    return c;
}

json verdict_json(const Verdict& v) {
    if (const auto* red = v.as_reducible()) {
        json certs = json::array();
        certs.push_back({{"name", "k_periodic"}, {"honesty", to_string(*red->periodicity.certified)}});
        certs.push_back({{"name", "v_commutes"},
                         {"honesty", to_string(*red->certificate.certified)},
                         {"edges_checked", red->certificate.edges_checked},
                         {"shift_defect", to_string(red->shift_defect)}});
        certs.push_back({{"name", "projections"},
                         {"count", red->projections.count},
                         {"sums_to_identity", red->projections.sums_to_identity},
                         {"max_v_defect", to_string(red->projections.max_v_defect)}});
        certs.push_back({{"name", "block_layout"}, {"available", red->block_layout_available}});
        return json{{"verdict", "reducible"},
                    {"k", red->k_min},
                    {"honesty", to_string(v.honesty)},
                    {"shift_offset", v.shift_offset},
                    {"certificates", certs}};
    }
    const auto* irr = v.as_irreducible();
    json out{{"verdict", "irreducible"},
             {"reason", to_string(irr->reason)},
             {"kmax", irr->kmax},
             {"honesty", to_string(v.honesty)}};
    if (irr->reason == Irreducible::Reason::NoPeriodUpTo) out["window"] = window_json(irr->window);
    return out;
}

}  // namespace

CommandResult cmd_classify(const SpecConfig& config, const CommandOptions& options) {
    const WordClassification cls = classify_infinite(config.omega);
    const std::size_t n = config.n;
    json j;
    std::string text;
    if (const auto* p = std::get_if<PeriodicWord>(&cls)) {
        j = {{"class", "periodic"}, {"v0", to_string(p->v0, n)}, {"offset", 0}};
        text = "periodic v0=" + to_string(p->v0, n);
    } else if (const auto* e = std::get_if<EventuallyPeriodicWord>(&cls)) {
        j = {{"class", "eventually_periodic"}, {"u", to_string(e->u, n)}, {"v0", to_string(e->v0, n)},
             {"offset", e->u.size()}};
        text = "eventually_periodic u=" + to_string(e->u, n) + " v0=" + to_string(e->v0, n);
    } else {
        const auto& a = std::get<AperiodicWord>(cls);
        j = {{"class", "aperiodic"}, {"name", a.name}, {"certified", a.certified}};
        text = std::string("aperiodic (") + (a.certified ? "certified" : "uncertified") + ")";
    }
    return {Success, options.format == Format::Json ? dump(j) : text + "\n"};
}

CommandResult cmd_tree(const SpecConfig& config, const CommandOptions& options) {
    const ShiftSpec spec = config.spec();
    const Window w = window_of(config, options);
    const RenderedTree r = render_tree(spec.tree, w, &spec.weights);
    if (options.format == Format::Dot) return {Success, r.dot};
    if (options.format == Format::Text) return {Success, r.ascii};

    json vertices = json::array();
    json edges = json::array();
    for (const auto& u : spec.tree.enumerate(w)) {
        vertices.push_back({{"word", to_string(u, config.n)}, {"label", spec.tree.label(u)}});
        for (Letter i = 1; i <= config.n; ++i) {
            const TreeWord t = spec.tree.left_create(i, u);
            if (!w.contains(t)) continue;
            edges.push_back({{"from", to_string(u, config.n)},
                             {"to", to_string(t, config.n)},
                             {"letter", i},
                             {"weight", to_string(spec.weights.evaluate(t))}});
        }
    }
    return {Success, dump(json{{"vertices", vertices}, {"edges", edges}})};
}

CommandResult cmd_partition(const SpecConfig& config, const CommandOptions& options) {
    const Tree tree = config.tree();
    if (!tree.periodic()) throw ConfigError("partition: omega must be purely periodic");
    const Partition p(tree, options.k);
    const std::size_t n = config.n;
    std::ostringstream text;
    json rows = json::array();
    for (const auto& u : tree.enumerate(window_of(config, options))) {
        const ClassInfo info = p.classify(u);
        text << to_string(u, n) << " l=" << info.component << " r=" << info.remainder
             << " rep=" << to_string(info.representative, n) << '\n';
        rows.push_back({{"word", to_string(u, n)},
                        {"l", info.component},
                        {"r", info.remainder},
                        {"rep", to_string(info.representative, n)}});
    }
    return {Success, options.format == Format::Json ? dump(rows) : text.str()};
}

CommandResult cmd_matrices(const SpecConfig& config, const CommandOptions& options) {
    const ShiftSpec spec = config.spec();
    const Window w = window_of(config, options);
    const BasisPtr basis = Basis::of_window(spec.tree, w);
    const auto shifts = build_shift(spec, basis);
    const std::size_t n = config.n;
    const std::size_t layout_depth = std::min<std::size_t>(w.max_pos, 2);

    std::ostringstream text;
    json j{{"k", options.k}, {"window", window_json(w)}, {"generators", json::array()}};
    for (std::size_t g = 0; g < shifts.size(); ++g) {
        text << "# T_" << g + 1 << " (row col value)\n" << shifts[g].to_triples(n);
        json entries = json::array();
        for (const auto& [key, value] : shifts[g].entries())
            entries.push_back({to_string((*basis)[key.first], n), to_string((*basis)[key.second], n), to_string(value)});
        j["generators"].push_back({{"letter", g + 1}, {"entries", entries}});
    }

    std::string unavailable;
    if (!spec.tree.periodic()) {
        unavailable = "omega is not purely periodic";
    } else {
        const Partition p(spec.tree, options.k);
        const PeriodicityResult periodic = is_k_periodic(spec.weights, p, w);
        if (!periodic.ok()) {
            const auto& ce = *periodic.counterexample;
            unavailable = "weights are not " + std::to_string(options.k) + "-periodic: lambda(" +
                          to_string(ce.word, n) + ") = " + to_string(ce.value) + " but lambda(" +
                          to_string(ce.representative, n) + ") = " + to_string(ce.representative_value);
        } else {
            j["block_layout"] = json::array();
            text << "# block layout k=" << options.k << " depth=" << layout_depth << '\n';
            for (const auto& layout : block_layout(spec, p, layout_depth, w)) {
                text << layout.to_text(spec.tree);
                json entries = json::array();
                for (const auto& [key, e] : layout.entries)
                    entries.push_back({{"row", spec.tree.label(layout.index[key.first])},
                                       {"col", spec.tree.label(layout.index[key.second])},
                                       {"kind", kind_name(e.kind)},
                                       {"scalar", to_string(e.scalar)}});
                json index = json::array();
                for (const auto& u : layout.index) index.push_back(spec.tree.label(u));
                j["block_layout"].push_back({{"generator", layout.generator}, {"index", index}, {"entries", entries}});
            }
        }
    }
    if (!unavailable.empty()) {
        text << "# block layout unavailable: " << unavailable << '\n';
        j["block_layout"] = nullptr;
        j["block_layout_note"] = unavailable;
    }
    return {Success, options.format == Format::Json ? dump(j) : text.str()};
}

CommandResult cmd_verdict(const SpecConfig& config, const CommandOptions& options) {
    const Verdict v = verdict(config.spec(), kmax_of(config, options), window_of(config, options));
    return {v.reducible() ? Success : Irreducibility, dump(verdict_json(v))};
}

CommandResult cmd_verify(const SpecConfig& config, const CommandOptions& options) {
    const ShiftSpec spec = config.spec();
    const Window w = window_of(config, options);
    std::vector<Check> checks;

    checks.push_back(check_factorization(spec, w));
    checks.push_back(check_cuntz(spec.tree, w));
    checks.push_back(check_tree_moves(spec.tree, w));

    const bool eventually_periodic = config.omega.is_eventually_periodic();
    if (eventually_periodic && !spec.tree.periodic()) checks.push_back(check_shift_tail(config, w));

    Check verdict_check{"verdict", true, ""};
    std::optional<Verdict> v;
    try {
        v = verdict(spec, kmax_of(config, options), w);
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const std::domain_error*>(&e)) throw;
        verdict_check.passed = false;
        verdict_check.detail = e.what();
    }

    if (v) {
        if (const auto* red = v->as_reducible()) {
            verdict_check.detail = "reducible k=" + std::to_string(red->k_min) + " (" + to_string(v->honesty) + ")";
            const ShiftSpec periodic = normalize_shift_tail(spec);
            checks.push_back(check_partition(periodic.tree, 1, w));
            if (red->k_min > 1) checks.push_back(check_partition(periodic.tree, red->k_min, w));

            Check cert{"v_commutes_k" + std::to_string(red->k_min), true, ""};
            const Partition p(periodic.tree, red->k_min);
            const auto c = v_commutes_certificate(periodic, p, w);
            cert.passed = c.ok() && red->shift_defect == 0;
            cert.detail = std::to_string(c.edges_checked) + " edges, defect " + to_string(red->shift_defect);
            checks.push_back(cert);

            Check proj{"projections", red->projections.sums_to_identity && red->projections.max_v_defect == 0,
                       std::to_string(red->projections.count) + " projections"};
            const RestrictionReport rr = restriction_report(periodic, red->k_min, w);
            std::size_t preserving = 0;
            for (const auto& g : rr.generators) preserving += g.preserves_split ? 1 : 0;
            proj.detail += ", " + std::to_string(preserving) + " generators preserve every P_r";
            checks.push_back(proj);

            Check seeds{"transport_trivial_seeds", true, ""};
            TreeWordSet remainder_zero;
            for (const auto& u : periodic.tree.enumerate(w))
                if (p.remainder_class(u) == 0) remainder_zero.insert(u);
            const auto words = periodic.tree.enumerate(w);
            seeds.passed = transport_unweighted_seed({}, p, w).empty() &&
                           transport_unweighted_seed(remainder_zero, p, w).size() == words.size();
            seeds.detail = "empty and full seeds";
            checks.push_back(seeds);
        } else {
            const auto* irr = v->as_irreducible();
            verdict_check.detail = std::string("irreducible: ") + to_string(irr->reason) + " (" +
                                   to_string(v->honesty) + ")";
            if (irr->reason == Irreducible::Reason::AperiodicWord) {
                const IrreducibilityEvidence ev = irreducibility_evidence(spec, w);
                Check e{"irreducibility_evidence", ev.passed(), ""};
                e.detail = "fixed-set chain reaches phi at m=" +
                           (ev.reaches_root_at ? std::to_string(*ev.reaches_root_at) : std::string("never")) + ", " +
                           std::to_string(ev.reachable) + "/" + std::to_string(ev.window_size) + " words reached";
                checks.push_back(e);
            } else {
                const ShiftSpec periodic = normalize_shift_tail(spec);
                checks.push_back(check_partition(periodic.tree, 1, w));
            }
        }
    }
    checks.push_back(verdict_check);

    bool all = true;
    std::ostringstream text;
    json list = json::array();
    for (const auto& c : checks) {
        all = all && c.passed;
        text << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    text << (all ? "all checks passed" : "verification failed") << '\n';
    return {all ? Success : Counterexample,
            options.format == Format::Json ? dump(json{{"passed", all}, {"checks", list}}) : text.str()};
}

CommandResult run_command(const std::string& command, const SpecConfig& config, const CommandOptions& options) {
    static const std::map<std::string, std::function<CommandResult(const SpecConfig&, const CommandOptions&)>>
        commands{{"classify", cmd_classify}, {"tree", cmd_tree},       {"partition", cmd_partition},
                 {"matrices", cmd_matrices}, {"verdict", cmd_verdict}, {"verify", cmd_verify}};
    auto it = commands.find(command);
    if (it == commands.end()) return {BadConfig, "unknown command '" + command + "'\n"};
    try {
        return it->second(config, options);
    } catch (const ConfigError& e) {
        return {BadConfig, std::string("config error: ") + e.what() + "\n"};
    } catch (const std::domain_error& e) {
        return {BadConfig, std::string("unsupported input: ") + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
        return {BadConfig, std::string("invalid input: ") + e.what() + "\n"};
    }
}

}  // namespace ncshift::cli
