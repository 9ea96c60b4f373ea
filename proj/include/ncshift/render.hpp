#pragma once

#include <string>

#include "ncshift/tree.hpp"
#include "ncshift/weights.hpp"

namespace ncshift {

struct RenderedTree {
    std::string ascii;
    std::string dot;
    std::size_t vertices = 0;
    std::size_t edges = 0;
};

// One vertex per window word and one edge u -> iu per letter whose target
// stays in the window. The ASCII view hangs everything from the deepest
// main-branch word; main-branch vertices carry a '*'.
RenderedTree render_tree(const Tree& tree, const Window& window, const WeightRule* labels = nullptr);

}  // namespace ncshift
