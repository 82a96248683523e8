#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "helix/label.hpp"

namespace helix {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// Construction parameters of a named family, kept alongside the structure so
// downstream operations (tuple decoding, reduction sweeps) can recover them.
struct FamilyInfo {
    std::string kind; // "K", "C", "Kc", "KG", "SG", "H", "SGk", "SH"
    int a = 0, b = 0, c = 0;
};

// Finite undirected graph, loops allowed, no parallel edges. Adjacency is a
// symmetric relation stored as one bitset row per vertex (a loop is the
// diagonal bit). Optional labels are per-vertex and pairwise distinct.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order) : rows_(order, Bits(order)) {}

    int order() const { return static_cast<int>(rows_.size()); }

    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    void add_edge(int u, int v) {
        rows_[u].set(v);
        rows_[v].set(u);
    }
    const Bits& row(int v) const { return rows_[v]; }

    int degree(int v) const { return static_cast<int>(rows_[v].count()); }
    bool has_loop(int v) const { return rows_[v].test(v); }
    bool any_loops() const;
    long edge_count() const; // loops count once

    // Edges as (i, j) pairs with i <= j, ascending.
    std::vector<std::pair<int, int>> edges() const;

    bool labeled() const { return !labels_.empty(); }
    const Label& label(int v) const { return labels_[v]; }
    const std::vector<Label>& labels() const { return labels_; }
    void set_labels(std::vector<Label> labels);

    // Structural + label equality; name and family info are descriptive only.
    friend bool operator==(const Graph& g, const Graph& h) {
        return g.rows_ == h.rows_ && g.labels_ == h.labels_;
    }

    std::string name;
    std::optional<FamilyInfo> family;

private:
    std::vector<Bits> rows_;
    std::vector<Label> labels_;
};

struct CycleStats {
    std::optional<int> girth;     // empty = no cycle
    std::optional<int> odd_girth; // empty = bipartite (no odd closed walk)
};

std::string length_str(const std::optional<int>& v); // "9" or "inf"

// k-th power: same vertices and labels, u ~ v iff a walk of length exactly k
// joins them (closed walks give loops). k >= 1.
Graph power(const Graph& g, int k);

// t-subdivision: every edge replaced by a path with t inner vertices.
// Rejects loops. t = 0 returns the graph unchanged. When the input is
// labeled, inner vertices get text labels e<i>-<j>:<p>; when it is not, the
// result is unlabeled and inner vertices are identified by their position:
// edges sorted ascending, inner vertices of edge r at order(g) + r*t ...
Graph subdivide(const Graph& g, int t);

// N_i(v): all vertices joined to v by a walk of length exactly i (ascending).
std::vector<int> walk_neighborhood(const Graph& g, int v, int i);
Bits walk_neighborhood_bits(const Graph& g, int v, int i);

// Girth by shortest cycle through each edge; odd girth by shortest path
// between the two layers of the bipartite double cover.
CycleStats cycle_stats(const Graph& g);

// Exact isomorphism on small graphs (orders capped, default 16); prunes on
// degree sequences and cycle stats before searching.
bool is_isomorphic(const Graph& g, const Graph& h);
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

// For a graph that is a single cycle (connected, 2-regular, loop-free):
// vertices in traversal order, starting at vertex 0. Used to identify
// cycle-shaped families with C_n without a capped isomorphism search.
std::vector<int> cycle_order(const Graph& g);

// Subgraph induced on the given vertices (ascending, distinct); labels follow.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

} // namespace helix
