#include "helix/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "helix/caps.hpp"
#include "helix/error.hpp"

namespace helix {

bool Graph::any_loops() const {
    for (int v = 0; v < order(); ++v)
        if (has_loop(v)) return true;
    return false;
}

long Graph::edge_count() const {
    long twice = 0, loops = 0;
    for (int v = 0; v < order(); ++v) {
        twice += degree(v);
        if (has_loop(v)) ++loops;
    }
    return (twice - loops) / 2 + loops;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
        for (auto v = rows_[u].find_first(); v != Bits::npos; v = rows_[u].find_next(v))
            if (static_cast<int>(v) >= u) out.emplace_back(u, static_cast<int>(v));
    return out;
}

void Graph::set_labels(std::vector<Label> labels) {
    require(static_cast<int>(labels.size()) == order(), "label count must equal order");
    std::vector<Label> sorted = labels;
    std::sort(sorted.begin(), sorted.end(), label_less);
    for (size_t i = 1; i < sorted.size(); ++i)
        require(label_less(sorted[i - 1], sorted[i]), "labels must be pairwise distinct");
    labels_ = std::move(labels);
}

std::string length_str(const std::optional<int>& v) {
    return v ? std::to_string(*v) : "inf";
}

Graph power(const Graph& g, int k) {
    require(k >= 1, "power: k must be >= 1");
    const int n = g.order();
    // Boolean relation composition, k-1 times: reach[v] = vertices joined to
    // v by a walk of length exactly i.
    std::vector<Bits> reach(n);
    for (int v = 0; v < n; ++v) reach[v] = g.row(v);
    for (int step = 1; step < k; ++step) {
        std::vector<Bits> next(n, Bits(n));
        for (int v = 0; v < n; ++v)
            for (auto w = reach[v].find_first(); w != Bits::npos; w = reach[v].find_next(w))
                next[v] |= g.row(static_cast<int>(w));
        reach = std::move(next);
    }
    Graph result(n);
    for (int v = 0; v < n; ++v)
        for (auto w = reach[v].find_first(); w != Bits::npos; w = reach[v].find_next(w))
            result.add_edge(v, static_cast<int>(w));
    if (g.labeled()) result.set_labels(g.labels());
    result.name = g.name.empty() ? "" : g.name + "^(" + std::to_string(k) + ")";
    return result;
}

Graph subdivide(const Graph& g, int t) {
    require(t >= 0, "subdivide: t must be >= 0");
    require(!g.any_loops(), "subdivide: graph must be loop-free");
    if (t == 0) return g;
    const auto edge_list = g.edges();
    const int n = g.order();
    Graph result(n + t * static_cast<int>(edge_list.size()));
    int next = n;
    std::vector<Label> labels;
    if (g.labeled()) labels = g.labels();
    for (const auto& [u, v] : edge_list) {
        int prev = u;
        for (int p = 0; p < t; ++p) {
            result.add_edge(prev, next);
            if (g.labeled())
                labels.push_back("e" + std::to_string(u) + "-" + std::to_string(v) + ":" +
                                 std::to_string(p));
            prev = next++;
        }
        result.add_edge(prev, v);
    }
    if (g.labeled()) result.set_labels(std::move(labels));
    result.name = g.name.empty() ? "" : "S" + std::to_string(t) + "(" + g.name + ")";
    return result;
}

Bits walk_neighborhood_bits(const Graph& g, int v, int i) {
    require(v >= 0 && v < g.order(), "walk_neighborhood: vertex out of range");
    require(i >= 0, "walk_neighborhood: length must be >= 0");
    Bits cur(g.order());
    cur.set(v);
    for (int step = 0; step < i; ++step) {
        Bits next(g.order());
        for (auto w = cur.find_first(); w != Bits::npos; w = cur.find_next(w))
            next |= g.row(static_cast<int>(w));
        cur = std::move(next);
    }
    return cur;
}

std::vector<int> walk_neighborhood(const Graph& g, int v, int i) {
    Bits bits = walk_neighborhood_bits(g, v, i);
    std::vector<int> out;
    for (auto w = bits.find_first(); w != Bits::npos; w = bits.find_next(w))
        out.push_back(static_cast<int>(w));
    return out;
}

namespace {

// Shortest u-v distance with one edge removed; npos-ish -1 when disconnected.
int bfs_distance_avoiding_edge(const Graph& g, int src, int dst) {
    std::vector<int> dist(g.order(), -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == dst) return dist[v];
        for (auto w = g.row(v).find_first(); w != Bits::npos; w = g.row(v).find_next(w)) {
            int u = static_cast<int>(w);
            if (v == src && u == dst) continue; // removed edge
            if (u == v) continue;               // loops do not shorten cycles here
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    return -1;
}

} // namespace

CycleStats cycle_stats(const Graph& g) {
    CycleStats stats;
    if (g.any_loops()) {
        stats.girth = 1;
        stats.odd_girth = 1;
        return stats;
    }
    // Girth: min over edges of (shortest path between endpoints avoiding the
    // edge) + 1.
    int best = -1;
    for (const auto& [u, v] : g.edges()) {
        int d = bfs_distance_avoiding_edge(g, u, v);
        if (d >= 0 && (best < 0 || d + 1 < best)) best = d + 1;
    }
    if (best >= 0) stats.girth = best;

    // Odd girth: shortest path from (v, even) to (v, odd) in the bipartite
    // double cover; equals the shortest odd closed walk through v.
    const int n = g.order();
    int odd_best = -1;
    for (int v = 0; v < n; ++v) {
        std::vector<int> dist(2 * n, -1);
        std::deque<int> queue{v};
        dist[v] = 0;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            int base = x % n, layer = x / n;
            for (auto w = g.row(base).find_first(); w != Bits::npos; w = g.row(base).find_next(w)) {
                int y = static_cast<int>(w) + (1 - layer) * n;
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if (dist[v + n] >= 0 && (odd_best < 0 || dist[v + n] < odd_best)) odd_best = dist[v + n];
    }
    if (odd_best >= 0) stats.odd_girth = odd_best;
    return stats;
}

namespace {

struct IsoSearch {
    const Graph& g;
    const Graph& h;
    std::vector<int> image;      // g vertex -> h vertex or -1
    std::vector<char> used;      // h vertex taken
    std::vector<int> order;      // g vertices, branch order

    bool consistent(int gv, int hv) const {
        if (g.has_loop(gv) != h.has_loop(hv)) return false;
        if (g.degree(gv) != h.degree(hv)) return false;
        for (int gu = 0; gu < g.order(); ++gu) {
            if (image[gu] < 0) continue;
            if (g.adjacent(gv, gu) != h.adjacent(hv, image[gu])) return false;
        }
        return true;
    }

    bool extend(size_t depth) {
        if (depth == order.size()) return true;
        int gv = order[depth];
        for (int hv = 0; hv < h.order(); ++hv) {
            if (used[hv] || !consistent(gv, hv)) continue;
            image[gv] = hv;
            used[hv] = 1;
            if (extend(depth + 1)) return true;
            image[gv] = -1;
            used[hv] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.order() > caps().iso || h.order() > caps().iso)
        cap_error("is_isomorphic: order exceeds cap " + std::to_string(caps().iso));
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
    auto degrees = [](const Graph& x) {
        std::vector<int> d(x.order());
        for (int v = 0; v < x.order(); ++v) d[v] = x.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(g) != degrees(h)) return std::nullopt;
    auto sg = cycle_stats(g), sh = cycle_stats(h);
    if (sg.girth != sh.girth || sg.odd_girth != sh.odd_girth) return std::nullopt;

    IsoSearch search{g, h, std::vector<int>(g.order(), -1), std::vector<char>(h.order(), 0), {}};
    search.order.resize(g.order());
    std::iota(search.order.begin(), search.order.end(), 0);
    std::sort(search.order.begin(), search.order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    if (!search.extend(0)) return std::nullopt;
    return search.image;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    return find_isomorphism(g, h).has_value();
}

std::vector<int> cycle_order(const Graph& g) {
    const int n = g.order();
    require(n >= 3, "cycle_order: graph too small to be a cycle");
    for (int v = 0; v < n; ++v)
        require(g.degree(v) == 2 && !g.has_loop(v), "cycle_order: graph is not 2-regular");
    std::vector<int> order{0};
    int prev = -1, cur = 0;
    for (int step = 1; step < n; ++step) {
        int a = static_cast<int>(g.row(cur).find_first());
        int b = static_cast<int>(g.row(cur).find_next(a));
        int next = (a == prev) ? b : a;
        require(next != 0, "cycle_order: graph is not a single cycle");
        prev = cur;
        cur = next;
        order.push_back(cur);
    }
    require(g.adjacent(order.back(), 0), "cycle_order: graph is not a single cycle");
    return order;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    Graph result(static_cast<int>(vertices.size()));
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (i + 1 < vertices.size())
            require(vertices[i] < vertices[i + 1], "induced_subgraph: vertices must ascend");
        require(vertices[i] >= 0 && vertices[i] < g.order(), "induced_subgraph: vertex out of range");
    }
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j])) result.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (g.labeled()) {
        std::vector<Label> labels;
        labels.reserve(vertices.size());
        for (int v : vertices) labels.push_back(g.label(v));
        result.set_labels(std::move(labels));
    }
    return result;
}

} // namespace helix
