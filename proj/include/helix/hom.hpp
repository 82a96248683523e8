#pragma once

#include <cstdint>
#include <optional>

#include "helix/graph.hpp"
#include "helix/vertex_map.hpp"

namespace helix {

enum class HomMode { decide, first, count };

struct HomResult {
    bool found = false;
    std::optional<VertexMap> witness; // mode == first and found
    std::uint64_t count = 0;          // mode == count
    bool count_exact = true;          // false: stopped at limit ("at least limit")
};

// Backtracking search over candidate bitsets with constraint propagation.
//
// Deterministic: in first/count mode the branch order is fixed (descending
// degree, then label/index) and values are tried in ascending label/index
// order, so `first` yields the lexicographically least witness under that
// ordering. decide mode picks the smallest remaining domain first, which is
// faster on refutations and returns the same yes/no answer.
HomResult find_homomorphism(const Graph& g, const Graph& h, HomMode mode,
                            std::uint64_t limit = UINT64_MAX);

bool hom_exists(const Graph& g, const Graph& h);

// Both directions admit a homomorphism.
bool hom_equivalent(const Graph& g, const Graph& h);

// Views f's assignment as a map between the k-th powers and rechecks the edge
// condition. Always true for a valid homomorphism; a false return is a bug
// signal, never a legitimate outcome.
bool power_lift_check(const VertexMap& f, int k);

// From a homomorphism c: power(g, 2k-1) -> KG(m,n) (or SG(m,n)) builds
// f: g -> H(m,n,k) (resp. SGk(m,n,k)) with f(v) = (c(v), c(N_1(v)), ...,
// c(N_{k-1}(v))); isolated vertices go to the lexicographically first tuple.
// The result is validated before being returned.
VertexMap helical_lift(const VertexMap& c, const Graph& g, int k);

// The reverse projection: from f: g -> H(m,n,k)/SGk(m,n,k)/SH(m,n,k) builds
// c(v) = first component of f(v), a homomorphism power(g, 2k-1) -> KG(m,n)
// (resp. SG(m,n)). Validated before being returned.
VertexMap helical_project(const VertexMap& f, int k);

// Explicit coloring of the (2k-1)st power of SG(a,b) by SG(m,n), where
// a = 2(k-1)m(m-2n+2)+m and b = (k-1)m(m-2n+2)+n: the ground set [a] is cut
// into m consecutive blocks, each block's alternating-element subset E_i is
// the marker, and a vertex u is colored by the first n block indices whose
// marker it contains. k = 1 degenerates to the identity on SG(m,n).
struct SchrijverPowerColoring {
    int a = 0, b = 0;
    VertexMap coloring; // power(SG(a,b), 2k-1) -> SG(m,n)
};
SchrijverPowerColoring schrijver_power_coloring(int m, int n, int k);

// From h: g -> C_{2k+1} (odd girth of g at least 2k+1) builds a proper
// 3-coloring of power(subdivide(g,2), 2k+1), as a map into KG(3,1).
VertexMap three_coloring_from_cycle_hom(const Graph& g, int k, const VertexMap& h);

// The converse: from a proper 3-coloring of power(subdivide(g,2), 2k+1)
// builds a homomorphism g -> C_{2k+1}. The helper homomorphism
// C_{6k+3}^(3) -> C_{2k+1} is found by search once per k and cached.
VertexMap cycle_hom_from_three_coloring(const Graph& g, int k, const VertexMap& col);

} // namespace helix
