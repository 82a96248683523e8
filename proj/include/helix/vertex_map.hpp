#pragma once

#include <vector>

#include "helix/graph.hpp"

namespace helix {

// Total map between vertex sets. Homomorphism-ness is a property checked by
// is_homomorphism, not an invariant of the type.
struct VertexMap {
    Graph source;
    Graph target;
    std::vector<int> map; // source vertex -> target vertex

    int operator()(int v) const { return map[v]; }
};

// True iff every source edge (loops included) maps to a target edge.
bool is_homomorphism(const VertexMap& f);

} // namespace helix
