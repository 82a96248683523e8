#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "helix/graph.hpp"
#include "helix/label.hpp"
#include "helix/vertex_map.hpp"

namespace helix {

// ---- subset utilities over the ground set {1..m} -------------------------

// 2-stable: all distinct x, y satisfy 2 <= |x-y| <= m-2, i.e. circular
// distance at least 2 (the pair {1,m} counts as consecutive).
bool is_two_stable(std::uint64_t mask, int m);

// All 2-stable n-subsets of {1..m} as bit masks (bit e-1 = element e),
// in lexicographic order of their ascending element lists.
std::vector<std::uint64_t> two_stable_subsets(int m, int n);

// S is a union of 2-stable n-subsets iff every element of S lies in some
// 2-stable n-subset contained in S.
bool is_stable_union(std::uint64_t mask, int m, int n);

IntSet mask_to_set(std::uint64_t mask);
std::uint64_t set_to_mask(const IntSet& set);

// ---- tuple vertices of the helical families ------------------------------

// k-tuple (A_1..A_k) of subsets of {1..m} with |A_1| = n, |A_r| >= n,
// consecutive sets disjoint and A_t contained in A_{t+2}.
struct HelicalVertex {
    SetTuple tuple;
    int m = 0, n = 0, k = 0;

    bool valid() const;
};

// ---- family constructors --------------------------------------------------

// Complete graph K_m (m >= 1).
Graph complete_graph(int m);
// Cycle C_n (n >= 3), i ~ i+-1 mod n.
Graph cycle_graph(int n);
// Circular complete graph on n vertices, i ~ j iff d <= |i-j| <= n-d
// (n >= 2d, d >= 1).
Graph circular_complete(int n, int d);

// All n-subsets of {1..m}, adjacency = disjointness; m >= 2n >= 2.
Graph kneser(int m, int n);
// Induced on the 2-stable n-subsets. Enumerates stable subsets directly, so
// large ground sets are fine as long as the stable count stays desk-scale.
Graph schrijver(int m, int n);

// Vertex set = all HelicalVertex tuples; (A) ~ (B) iff A_i and B_i disjoint
// for all i and A_j included in B_{j+1}, B_j in A_{j+1} for all j <= k-1.
Graph helical(int m, int n, int k);
// Induced on tuples whose every component is a union of 2-stable n-subsets.
Graph schrijver_helical(int m, int n, int k);
// Additionally every component's complement is a union of 2-stable n-subsets.
Graph stable_helical(int m, int n, int k);

// ---- descriptors ----------------------------------------------------------

// Grammar: K:m | C:n | Kc:n,d | KG:m,n | SG:m,n | H:m,n,k | SGk:m,n,k | SH:m,n,k
Graph make_family(const std::string& descriptor);
bool looks_like_descriptor(const std::string& text);

// ---- dominated-vertex reduction -------------------------------------------

// One removal step: vertex u went, v's neighborhood contained u's at the time.
struct ReductionTrace {
    std::vector<std::pair<int, int>> removed; // (vertex, witness), input indices
    std::vector<int> survivors;               // ascending input indices
    VertexMap retraction;                     // input graph -> reduced graph
};

struct WhileReduction {
    Graph reduced;
    ReductionTrace trace;
};

// Repeatedly removes a vertex whose (current) open neighborhood is contained
// in another's. Deterministic: pairs scanned in lexicographic label order
// (index order when unlabeled), first qualifying pair acts, the scan restarts
// after each removal; for equal neighborhoods the larger label goes.
WhileReduction while_reduce(const Graph& g);

} // namespace helix
