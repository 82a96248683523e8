#pragma once

#include <cstdint>
#include <vector>

#include "helix/graph.hpp"

namespace helix {

struct ColorDecision {
    bool colorable = false;
    std::vector<int> coloring; // proper coloring with values < t, when colorable
    std::uint64_t nodes = 0;   // kernel search nodes (deterministic)
};

// Exact decision: does loop-free g admit a proper t-coloring? Low-degree and
// dominated vertices are peeled off first (both preserve t-colorability),
// then the kernel is searched with saturation-ordered branching and canonical
// color classes.
ColorDecision colorable(const Graph& g, int t);

// Deterministic greedy clique; seeds the chromatic lower bound.
std::vector<int> greedy_clique(const Graph& g);

} // namespace helix
