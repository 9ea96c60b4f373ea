#include "ncshift/render.hpp"

#include <map>
#include <sstream>

namespace ncshift {

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

RenderedTree render_tree(const Tree& tree, const Window& window, const WeightRule* labels) {
    const std::vector<TreeWord> words = tree.enumerate(window);
    std::map<TreeWord, std::size_t> id;
    for (std::size_t i = 0; i < words.size(); ++i) id.emplace(words[i], i);

    RenderedTree out;
    out.vertices = words.size();

    std::map<TreeWord, std::vector<std::pair<Letter, TreeWord>>> children;
    std::ostringstream dot;
    dot << "digraph tree {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < words.size(); ++i) {
        dot << "  n" << i << " [label=\"" << dot_escape(tree.label(words[i])) << '"';
        if (words[i].on_main_branch()) dot << ", shape=box, style=bold";
        dot << "];\n";
    }
    for (const auto& u : words) {
        for (Letter l = 1; l <= tree.alphabet_size(); ++l) {
            TreeWord target = tree.left_create(l, u);
            auto it = id.find(target);
            if (it == id.end()) continue;
            ++out.edges;
            std::string edge_label = std::to_string(l);
            if (labels) edge_label += ": " + to_string(labels->evaluate(target));
            dot << "  n" << id.at(u) << " -> n" << it->second << " [label=\"" << dot_escape(edge_label) << "\"];\n";
            children[u].emplace_back(l, std::move(target));
        }
    }
    dot << "}\n";
    out.dot = dot.str();

    std::ostringstream ascii;
    auto draw = [&](auto&& self, const TreeWord& u, const std::string& prefix, const std::string& edge) -> void {
        ascii << prefix << edge << tree.label(u) << (u.on_main_branch() ? " *" : "") << '\n';
        const auto it = children.find(u);
        if (it == children.end()) return;
        const std::string next = prefix + std::string(edge.empty() ? 0 : 2, ' ');
        for (const auto& [l, child] : it->second) {
            std::string e = "-" + std::to_string(l);
            if (labels) e += "(" + to_string(labels->evaluate(child)) + ")";
            self(self, child, next, e + "-> ");
        }
    };
    draw(draw, TreeWord{{}, window.max_neg}, "", "");
    out.ascii = ascii.str();
    return out;
}

}  // namespace ncshift
