#include "helix/hom.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "helix/error.hpp"
#include "helix/families.hpp"

namespace helix {

bool is_homomorphism(const VertexMap& f) {
    if (static_cast<int>(f.map.size()) != f.source.order()) return false;
    for (int v = 0; v < f.source.order(); ++v)
        if (f.map[v] < 0 || f.map[v] >= f.target.order()) return false;
    for (const auto& [u, v] : f.source.edges())
        if (!f.target.adjacent(f.map[u], f.map[v])) return false;
    return true;
}

namespace {

std::vector<int> order_by_label(const Graph& g) {
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    if (g.labeled())
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return label_less(g.label(a), g.label(b)); });
    return order;
}

struct HomSolver {
    const Graph& g;
    const Graph& h;
    HomMode mode;
    std::uint64_t limit;

    std::vector<int> branch_order;  // first/count: fixed order
    std::vector<int> value_order;   // target vertices, ascending label/index
    std::vector<std::vector<int>> neighbors;
    std::uint64_t solutions = 0;
    std::vector<int> witness;
    bool stop = false;

    HomSolver(const Graph& g, const Graph& h, HomMode mode, std::uint64_t limit)
        : g(g), h(h), mode(mode), limit(limit) {
        auto label_rank = order_by_label(g);
        std::vector<int> rank(g.order());
        for (int i = 0; i < g.order(); ++i) rank[label_rank[i]] = i;
        branch_order.resize(g.order());
        std::iota(branch_order.begin(), branch_order.end(), 0);
        std::sort(branch_order.begin(), branch_order.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return rank[a] < rank[b];
        });
        value_order = order_by_label(h);
        neighbors.resize(g.order());
        for (int v = 0; v < g.order(); ++v)
            for (auto w = g.row(v).find_first(); w != Bits::npos; w = g.row(v).find_next(w))
                if (static_cast<int>(w) != v) neighbors[v].push_back(static_cast<int>(w));
    }

    // AC-3 over the adjacency constraints; empties a domain on failure.
    bool propagate(std::vector<Bits>& domain, std::vector<std::pair<int, int>> queue) const {
        std::vector<std::vector<char>> queued(g.order(), std::vector<char>(g.order(), 0));
        for (auto& [u, v] : queue) queued[u][v] = 1;
        size_t head = 0;
        while (head < queue.size()) {
            auto [u, v] = queue[head++];
            queued[u][v] = 0;
            bool shrunk = false;
            for (auto w = domain[u].find_first(); w != Bits::npos; w = domain[u].find_next(w)) {
                if (!h.row(static_cast<int>(w)).intersects(domain[v])) {
                    domain[u].reset(w);
                    shrunk = true;
                }
            }
            if (shrunk) {
                if (domain[u].none()) return false;
                for (int x : neighbors[u])
                    if (x != v && !queued[x][u]) {
                        queued[x][u] = 1;
                        queue.emplace_back(x, u);
                    }
            }
        }
        return true;
    }

    bool assign(std::vector<Bits> domain, int v, int w) {
        Bits single(h.order());
        single.set(w);
        domain[v] = std::move(single);
        std::vector<std::pair<int, int>> queue;
        for (int u : neighbors[v]) queue.emplace_back(u, v);
        if (!propagate(domain, std::move(queue))) return false;
        return search(std::move(domain));
    }

    int pick_branch_vertex(const std::vector<Bits>& domain, const std::vector<char>& done) const {
        if (mode != HomMode::decide) {
            for (int v : branch_order)
                if (!done[v]) return v;
            return -1;
        }
        int best = -1;
        size_t best_size = 0;
        for (int v : branch_order) {
            if (done[v]) continue;
            size_t size = domain[v].count();
            if (best < 0 || size < best_size) {
                best = v;
                best_size = size;
            }
        }
        return best;
    }

    // done/assignment are deduced from singleton domains lazily: a vertex is
    // finished once the search has branched on it.
    std::vector<char> done_flags;
    std::vector<int> assignment;

    bool search(std::vector<Bits> domain) {
        int v = pick_branch_vertex(domain, done_flags);
        if (v < 0) {
            ++solutions;
            if (mode == HomMode::first) {
                witness = assignment;
                stop = true;
            } else if (mode == HomMode::decide) {
                stop = true;
            } else if (solutions >= limit) {
                stop = true;
            }
            return stop || mode != HomMode::count;
        }
        for (int w : value_order) {
            if (!domain[v].test(w)) continue;
            done_flags[v] = 1;
            assignment[v] = w;
            bool found = assign(domain, v, w);
            done_flags[v] = 0;
            assignment[v] = -1;
            if (stop) return true;
            if (found && mode != HomMode::count) return true;
        }
        return false;
    }

    HomResult run() {
        HomResult result;
        if (g.order() == 0) {
            result.found = true;
            result.count = 1;
            if (mode == HomMode::first) result.witness = VertexMap{g, h, {}};
            return result;
        }
        std::vector<Bits> domain(g.order(), Bits(h.order()));
        Bits loops(h.order());
        for (int w = 0; w < h.order(); ++w)
            if (h.has_loop(w)) loops.set(w);
        for (int v = 0; v < g.order(); ++v) {
            domain[v].set();
            if (g.has_loop(v)) domain[v] &= loops;
            if (domain[v].none()) return result;
        }
        // Root propagation over every arc.
        std::vector<std::pair<int, int>> queue;
        for (int v = 0; v < g.order(); ++v)
            for (int u : neighbors[v]) queue.emplace_back(u, v);
        if (!propagate(domain, std::move(queue))) return result;

        done_flags.assign(g.order(), 0);
        assignment.assign(g.order(), -1);
        bool found = search(std::move(domain));
        result.found = found || solutions > 0;
        result.count = solutions;
        result.count_exact = !(mode == HomMode::count && solutions >= limit);
        if (mode == HomMode::first && !witness.empty())
            result.witness = VertexMap{g, h, witness};
        return result;
    }
};

} // namespace

HomResult find_homomorphism(const Graph& g, const Graph& h, HomMode mode, std::uint64_t limit) {
    HomSolver solver(g, h, mode, limit);
    return solver.run();
}

bool hom_exists(const Graph& g, const Graph& h) {
    return find_homomorphism(g, h, HomMode::decide).found;
}

bool hom_equivalent(const Graph& g, const Graph& h) {
    return hom_exists(g, h) && hom_exists(h, g);
}

bool power_lift_check(const VertexMap& f, int k) {
    require(is_homomorphism(f), "power_lift_check: input must be a homomorphism");
    require(k >= 1, "power_lift_check: k must be >= 1");
    return is_homomorphism(VertexMap{power(f.source, k), power(f.target, k), f.map});
}

namespace {

// Label lookup in a family graph whose labels are sorted set tuples.
int tuple_index(const Graph& family_graph, const SetTuple& tuple) {
    int lo = 0, hi = family_graph.order();
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        const auto& at = std::get<SetTuple>(family_graph.label(mid));
        if (set_tuple_less(at, tuple))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < family_graph.order() && std::get<SetTuple>(family_graph.label(lo)) == tuple) return lo;
    return -1;
}

struct SubsetFamilyView {
    int m = 0, n = 0;
    bool stable = false; // SG vs KG
};

SubsetFamilyView subset_family(const Graph& g, const std::string& who) {
    require(g.family.has_value(), who + ": target graph lacks family info");
    const auto& fam = *g.family;
    require(fam.kind == "KG" || fam.kind == "SG",
            who + ": expected a KG:m,n or SG:m,n target, got " + g.name);
    return {fam.a, fam.b, fam.kind == "SG"};
}

void check_odd_girth(const Graph& g, int needed, const std::string& who) {
    auto og = cycle_stats(g).odd_girth;
    if (og && *og < needed)
        usage_error(who + ": odd girth " + std::to_string(*og) + " below required " +
                    std::to_string(needed));
}

} // namespace

VertexMap helical_lift(const VertexMap& c, const Graph& g, int k) {
    require(k >= 1, "helical_lift: k must be >= 1");
    require(g.order() >= 1, "helical_lift: graph must be non-empty");
    auto fam = subset_family(c.target, "helical_lift");
    check_odd_girth(g, 2 * k + 1, "helical_lift");
    Graph pw = power(g, 2 * k - 1);
    require(c.source == pw, "helical_lift: coloring source is not the (2k-1)st power");
    require(is_homomorphism(c), "helical_lift: coloring is not a homomorphism");

    Graph target = fam.stable ? schrijver_helical(fam.m, fam.n, k) : helical(fam.m, fam.n, k);

    std::vector<std::uint64_t> color_mask(c.target.order());
    for (int w = 0; w < c.target.order(); ++w)
        color_mask[w] = set_to_mask(std::get<SetTuple>(c.target.label(w))[0]);

    std::vector<int> assignment(g.order(), 0);
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0) continue; // lexicographically first tuple
        Bits reach(g.order());
        reach.set(v);
        SetTuple tuple;
        for (int i = 0; i < k; ++i) {
            std::uint64_t acc = 0;
            for (auto u = reach.find_first(); u != Bits::npos; u = reach.find_next(u))
                acc |= color_mask[c.map[static_cast<int>(u)]];
            tuple.push_back(mask_to_set(acc));
            if (i + 1 < k) {
                Bits next(g.order());
                for (auto u = reach.find_first(); u != Bits::npos; u = reach.find_next(u))
                    next |= g.row(static_cast<int>(u));
                reach = std::move(next);
            }
        }
        HelicalVertex hv{tuple, fam.m, fam.n, k};
        if (!hv.valid())
            internal_error("helical_lift: constructed tuple " + set_tuple_to_string(tuple) +
                           " violates the vertex constraints at vertex " + std::to_string(v));
        int index = tuple_index(target, tuple);
        if (index < 0)
            internal_error("helical_lift: tuple " + set_tuple_to_string(tuple) +
                           " is not a vertex of " + target.name);
        assignment[v] = index;
    }
    VertexMap f{g, std::move(target), std::move(assignment)};
    if (!is_homomorphism(f))
        internal_error("helical_lift: constructed map is not a homomorphism");
    return f;
}

VertexMap helical_project(const VertexMap& f, int k) {
    require(k >= 1, "helical_project: k must be >= 1");
    require(f.target.family.has_value(), "helical_project: target lacks family info");
    const auto& fam = *f.target.family;
    require(fam.kind == "H" || fam.kind == "SGk" || fam.kind == "SH",
            "helical_project: expected a helical-family target, got " + f.target.name);
    require(fam.c == k, "helical_project: k mismatch with target family");
    require(is_homomorphism(f), "helical_project: input is not a homomorphism");
    check_odd_girth(f.source, 2 * k + 1, "helical_project");

    Graph target = (fam.kind == "H") ? kneser(fam.a, fam.b) : schrijver(fam.a, fam.b);
    std::vector<int> assignment(f.source.order());
    for (int v = 0; v < f.source.order(); ++v) {
        SetTuple first{std::get<SetTuple>(f.target.label(f.map[v]))[0]};
        int index = tuple_index(target, first);
        if (index < 0)
            internal_error("helical_project: first component " + set_tuple_to_string(first) +
                           " is not a vertex of " + target.name);
        assignment[v] = index;
    }
    VertexMap c{power(f.source, 2 * k - 1), std::move(target), std::move(assignment)};
    if (!is_homomorphism(c))
        internal_error("helical_project: projected map is not a homomorphism");
    return c;
}

SchrijverPowerColoring schrijver_power_coloring(int m, int n, int k) {
    require(n >= 1 && m >= 2 * n && k >= 1, "schrijver_power_coloring: need m >= 2n, k >= 1");
    const int spread = m - 2 * n + 2;
    const int a = 2 * (k - 1) * m * spread + m;
    const int b = (k - 1) * m * spread + n;
    Graph small = schrijver(m, n);
    if (k == 1) {
        std::vector<int> identity(small.order());
        std::iota(identity.begin(), identity.end(), 0);
        VertexMap c{small, small, std::move(identity)};
        return {a, b, std::move(c)};
    }
    Graph big = schrijver(a, b); // ground-set cap applies here

    const int block = 2 * (k - 1) * spread + 1; // |D_i|, m of them tiling [a]
    std::vector<std::uint64_t> marker(m, 0);    // E_i: alternating elements of D_i
    for (int i = 0; i < m; ++i)
        for (int off = 0; off < block; off += 2) marker[i] |= 1ull << (i * block + off);

    std::vector<int> assignment(big.order());
    for (int v = 0; v < big.order(); ++v) {
        std::uint64_t u = set_to_mask(std::get<SetTuple>(big.label(v))[0]);
        IntSet chosen;
        for (int i = 0; i < m && static_cast<int>(chosen.size()) < n; ++i)
            if ((marker[i] & ~u) == 0) chosen.push_back(i + 1);
        if (static_cast<int>(chosen.size()) < n)
            internal_error("schrijver_power_coloring: fewer than n qualifying blocks at vertex " +
                           set_tuple_to_string({mask_to_set(u)}));
        std::uint64_t mask = set_to_mask(chosen);
        if (!is_two_stable(mask, m))
            internal_error("schrijver_power_coloring: chosen index set is not 2-stable");
        int index = tuple_index(small, SetTuple{chosen});
        if (index < 0) internal_error("schrijver_power_coloring: color not a Schrijver vertex");
        assignment[v] = index;
    }
    VertexMap c{power(big, 2 * k - 1), std::move(small), std::move(assignment)};
    if (!is_homomorphism(c))
        internal_error("schrijver_power_coloring: map is not a homomorphism on the power");
    return {a, b, std::move(c)};
}

namespace {

Graph retag_as_kneser31(const VertexMap& col) {
    const Graph& t = col.target;
    require(t.order() == 3 && !t.any_loops() && t.edge_count() == 3,
            "expected a 3-vertex complete coloring target");
    return kneser(3, 1);
}

} // namespace

VertexMap three_coloring_from_cycle_hom(const Graph& g, int k, const VertexMap& h) {
    require(k >= 1, "three_coloring_from_cycle_hom: k must be >= 1");
    const int cycle_len = 2 * k + 1;
    require(h.source == g, "three_coloring_from_cycle_hom: map source mismatch");
    require(h.target == cycle_graph(cycle_len),
            "three_coloring_from_cycle_hom: target must be C_" + std::to_string(cycle_len));
    require(is_homomorphism(h), "three_coloring_from_cycle_hom: input is not a homomorphism");
    check_odd_girth(g, cycle_len, "three_coloring_from_cycle_hom");

    const int big_len = 6 * k + 3;
    Graph s2 = subdivide(g, 2);
    std::vector<int> lift(s2.order());
    for (int v = 0; v < g.order(); ++v) lift[v] = 3 * h.map[v];
    auto edge_list = g.edges();
    for (size_t r = 0; r < edge_list.size(); ++r) {
        auto [u, v] = edge_list[r];
        int d = (h.map[v] - h.map[u] + cycle_len) % cycle_len;
        int step = (d == 1) ? 1 : -1;
        lift[g.order() + 2 * r] = ((3 * h.map[u] + step) % big_len + big_len) % big_len;
        lift[g.order() + 2 * r + 1] = ((3 * h.map[u] + 2 * step) % big_len + big_len) % big_len;
    }
    VertexMap lifted{s2, cycle_graph(big_len), std::move(lift)};
    if (!is_homomorphism(lifted))
        internal_error("three_coloring_from_cycle_hom: lift to the long cycle failed");

    // Identify C_{6k+3} with the cycle-shaped helical graph H(3,1,k+1).
    Graph hk = helical(3, 1, k + 1);
    require(hk.order() == big_len, "three_coloring_from_cycle_hom: unexpected helical order");
    auto traversal = cycle_order(hk);
    std::vector<int> assignment(s2.order());
    for (int v = 0; v < s2.order(); ++v) assignment[v] = traversal[lifted.map[v]];
    VertexMap f{std::move(s2), std::move(hk), std::move(assignment)};
    if (!is_homomorphism(f))
        internal_error("three_coloring_from_cycle_hom: helical identification failed");
    return helical_project(f, k + 1);
}

VertexMap cycle_hom_from_three_coloring(const Graph& g, int k, const VertexMap& col) {
    require(k >= 1, "cycle_hom_from_three_coloring: k must be >= 1");
    const int cycle_len = 2 * k + 1;
    const int big_len = 6 * k + 3;
    check_odd_girth(g, cycle_len, "cycle_hom_from_three_coloring");
    Graph s2 = subdivide(g, 2);
    Graph pw = power(s2, cycle_len);
    require(col.source == pw,
            "cycle_hom_from_three_coloring: coloring source is not power(S2(g), 2k+1)");
    Graph kg31 = retag_as_kneser31(col);
    VertexMap retagged{pw, std::move(kg31), col.map};
    require(is_homomorphism(retagged), "cycle_hom_from_three_coloring: coloring is improper");

    VertexMap f = helical_lift(retagged, s2, k + 1);

    Graph hk = f.target;
    auto traversal = cycle_order(hk);
    std::vector<int> position(hk.order());
    for (int i = 0; i < hk.order(); ++i) position[traversal[i]] = i;

    Graph cn3 = power(cycle_graph(big_len), 3);
    std::vector<int> restricted(g.order());
    for (int v = 0; v < g.order(); ++v) restricted[v] = position[f.map[v]];
    VertexMap rho{g, cn3, std::move(restricted)};
    if (!is_homomorphism(rho))
        internal_error("cycle_hom_from_three_coloring: restriction to g failed");

    // Homomorphism C_{6k+3}^(3) -> C_{2k+1}: searched once per k, then cached.
    static std::map<int, std::vector<int>> cache;
    auto it = cache.find(k);
    if (it == cache.end()) {
        auto found = find_homomorphism(cn3, cycle_graph(cycle_len), HomMode::first);
        if (!found.found)
            internal_error("cycle_hom_from_three_coloring: no contraction of the long cycle power");
        it = cache.emplace(k, found.witness->map).first;
    }
    std::vector<int> final_map(g.order());
    for (int v = 0; v < g.order(); ++v) final_map[v] = it->second[rho.map[v]];
    VertexMap result{g, cycle_graph(cycle_len), std::move(final_map)};
    if (!is_homomorphism(result))
        internal_error("cycle_hom_from_three_coloring: composed map is not a homomorphism");
    return result;
}

} // namespace helix
