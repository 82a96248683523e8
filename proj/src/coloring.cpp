#include "helix/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "helix/error.hpp"

namespace helix {

namespace {

struct PeelStep {
    int vertex;
    int witness; // dominator, or -1 for a low-degree removal
};

// Kernel search: saturation-first branching, colors introduced canonically.
struct KernelSearch {
    const std::vector<Bits>& adj; // kernel adjacency (kernel indexing)
    int t;
    int n;
    std::vector<int> color;
    std::vector<Bits> neighbor_colors; // per vertex, colors adjacent so far
    std::vector<int> saturation;
    std::vector<int> degree;
    int used = 0;
    std::uint64_t nodes = 0;

    KernelSearch(const std::vector<Bits>& adj, int t)
        : adj(adj), t(t), n(static_cast<int>(adj.size())), color(n, -1),
          neighbor_colors(n, Bits(t)), saturation(n, 0), degree(n, 0) {
        for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(adj[v].count());
    }

    int pick() const {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            if (best < 0 || saturation[v] > saturation[best] ||
                (saturation[v] == saturation[best] &&
                 (degree[v] > degree[best] || (degree[v] == degree[best] && v < best))))
                best = v;
        }
        return best;
    }

    bool run() {
        int v = pick();
        if (v < 0) return true;
        ++nodes;
        if (saturation[v] >= t) return false;
        int limit = std::min(used, t - 1); // colors 0..used-1, plus one fresh
        for (int c = 0; c <= limit; ++c) {
            if (neighbor_colors[v].test(c)) continue;
            color[v] = c;
            int prev_used = used;
            used = std::max(used, c + 1);
            std::vector<int> touched;
            for (auto w = adj[v].find_first(); w != Bits::npos; w = adj[v].find_next(w)) {
                int u = static_cast<int>(w);
                if (color[u] >= 0 || neighbor_colors[u].test(c)) continue;
                neighbor_colors[u].set(c);
                ++saturation[u];
                touched.push_back(u);
            }
            if (run()) return true;
            for (int u : touched) {
                neighbor_colors[u].reset(c);
                --saturation[u];
            }
            color[v] = -1;
            used = prev_used;
        }
        return false;
    }
};

} // namespace

ColorDecision colorable(const Graph& g, int t) {
    require(!g.any_loops(), "colorable: graph must be loop-free");
    require(t >= 0, "colorable: t must be >= 0");
    const int n = g.order();
    ColorDecision result;
    if (n == 0) {
        result.colorable = true;
        return result;
    }
    if (t == 0) return result;

    // Peel to a kernel. Removing deg < t is safe (color it last); removing a
    // dominated vertex is safe (reuse its dominator's color).
    Bits alive(n);
    alive.set();
    std::vector<PeelStep> peeled;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (!alive.test(v)) continue;
            if (static_cast<int>((g.row(v) & alive).count()) < t) {
                peeled.push_back({v, -1});
                alive.reset(v);
                changed = true;
            }
        }
        if (changed) continue;
        for (int u = 0; u < n && !changed; ++u) {
            if (!alive.test(u)) continue;
            Bits nu = g.row(u) & alive;
            for (int v = 0; v < n; ++v) {
                if (v == u || !alive.test(v)) continue;
                Bits nv = g.row(v) & alive;
                if (!nu.is_subset_of(nv)) continue;
                int goner = (nu == nv && v > u) ? v : u;
                int witness = (goner == u) ? v : u;
                peeled.push_back({goner, witness});
                alive.reset(goner);
                changed = true;
                break;
            }
        }
    }

    std::vector<int> kernel;
    std::vector<int> kernel_index(n, -1);
    for (auto v = alive.find_first(); v != Bits::npos; v = alive.find_next(v)) {
        kernel_index[v] = static_cast<int>(kernel.size());
        kernel.push_back(static_cast<int>(v));
    }

    std::vector<int> color(n, -1);
    if (!kernel.empty()) {
        std::vector<Bits> adj(kernel.size(), Bits(kernel.size()));
        for (size_t i = 0; i < kernel.size(); ++i)
            for (size_t j = i + 1; j < kernel.size(); ++j)
                if (g.adjacent(kernel[i], kernel[j])) {
                    adj[i].set(j);
                    adj[j].set(i);
                }
        KernelSearch search(adj, t);
        bool ok = search.run();
        result.nodes = search.nodes;
        if (!ok) return result;
        for (size_t i = 0; i < kernel.size(); ++i) color[kernel[i]] = search.color[i];
    }

    // Reconstruct in reverse removal order.
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        if (it->witness >= 0) {
            color[it->vertex] = color[it->witness];
            continue;
        }
        Bits taken(t);
        for (auto w = g.row(it->vertex).find_first(); w != Bits::npos;
             w = g.row(it->vertex).find_next(w))
            if (color[static_cast<int>(w)] >= 0) taken.set(color[static_cast<int>(w)]);
        int c = 0;
        while (c < t && taken.test(c)) ++c;
        if (c >= t) internal_error("colorable: peel reconstruction ran out of colors");
        color[it->vertex] = c;
    }

    for (const auto& [u, v] : g.edges())
        if (color[u] == color[v]) internal_error("colorable: reconstructed coloring improper");

    result.colorable = true;
    result.coloring = std::move(color);
    return result;
}

std::vector<int> greedy_clique(const Graph& g) {
    const int n = g.order();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<int> best;
    for (int start : order) {
        std::vector<int> clique{start};
        for (int v : order) {
            if (v == start) continue;
            bool ok = true;
            for (int u : clique)
                if (!g.adjacent(u, v) || u == v) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(v);
        }
        if (clique.size() > best.size()) best = clique;
    }
    std::sort(best.begin(), best.end());
    return best;
}

} // namespace helix
