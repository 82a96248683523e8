#include "helix/families.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>

#include "helix/caps.hpp"
#include "helix/error.hpp"

namespace helix {

bool is_two_stable(std::uint64_t mask, int m) {
    if (mask & (mask >> 1)) return false;                  // linearly consecutive pair
    if ((mask & 1) && (mask >> (m - 1) & 1) && m > 1) return false; // {1, m}
    return true;
}

namespace {

void enumerate_two_stable(int m, int n, int first, int last_allowed, std::uint64_t acc, int size,
                          std::vector<std::uint64_t>& out) {
    if (size == n) {
        out.push_back(acc);
        return;
    }
    for (int e = first; e <= last_allowed - 2 * (n - size - 1); ++e)
        enumerate_two_stable(m, n, e + 2, last_allowed, acc | (1ull << (e - 1)), size + 1, out);
}

} // namespace

std::vector<std::uint64_t> two_stable_subsets(int m, int n) {
    require(m >= 1 && n >= 0, "two_stable_subsets: bad parameters");
    require(m <= caps().ground && m <= 63, "two_stable_subsets: ground set exceeds cap");
    std::vector<std::uint64_t> out;
    if (n == 0) {
        out.push_back(0);
        return out;
    }
    // Elements ascending with gaps >= 2; sets containing 1 must avoid m.
    for (int first = 1; first <= m; ++first) {
        int last_allowed = (first == 1 && n >= 2) ? m - 1 : m;
        enumerate_two_stable(m, n, first + 2, last_allowed, 1ull << (first - 1), 1, out);
    }
    return out;
}

bool is_stable_union(std::uint64_t mask, int m, int n) {
    if (mask == 0) return true;
    auto stable = two_stable_subsets(m, n);
    for (int e = 0; e < m; ++e) {
        if (!(mask >> e & 1)) continue;
        bool covered = false;
        for (std::uint64_t t : stable)
            if ((t & ~mask) == 0 && (t >> e & 1)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

IntSet mask_to_set(std::uint64_t mask) {
    IntSet out;
    for (int e = 0; mask; ++e, mask >>= 1)
        if (mask & 1) out.push_back(e + 1);
    return out;
}

std::uint64_t set_to_mask(const IntSet& set) {
    std::uint64_t mask = 0;
    for (int e : set) mask |= 1ull << (e - 1);
    return mask;
}

bool HelicalVertex::valid() const {
    if (static_cast<int>(tuple.size()) != k || k < 1) return false;
    const std::uint64_t full = (m >= 64) ? ~0ull : (1ull << m) - 1;
    std::vector<std::uint64_t> masks;
    for (const auto& set : tuple) {
        std::uint64_t mask = set_to_mask(set);
        if (mask & ~full) return false;
        masks.push_back(mask);
    }
    if (static_cast<int>(tuple[0].size()) != n) return false;
    for (const auto& set : tuple)
        if (static_cast<int>(set.size()) < n) return false;
    for (int s = 0; s + 1 < k; ++s)
        if (masks[s] & masks[s + 1]) return false;
    for (int t = 0; t + 2 < k; ++t)
        if (masks[t] & ~masks[t + 2]) return false;
    return true;
}

Graph complete_graph(int m) {
    require(m >= 1, "K:m requires m >= 1");
    Graph g(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) g.add_edge(i, j);
    g.name = "K:" + std::to_string(m);
    g.family = FamilyInfo{"K", m, 0, 0};
    return g;
}

Graph cycle_graph(int n) {
    require(n >= 3, "C:n requires n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    g.name = "C:" + std::to_string(n);
    g.family = FamilyInfo{"C", n, 0, 0};
    return g;
}

Graph circular_complete(int n, int d) {
    require(d >= 1 && n >= 2 * d, "Kc:n,d requires n >= 2d, d >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (j - i >= d && j - i <= n - d) g.add_edge(i, j);
    g.name = "Kc:" + std::to_string(n) + "," + std::to_string(d);
    g.family = FamilyInfo{"Kc", n, d, 0};
    return g;
}

namespace {

// n-subsets of {1..m} in lexicographic order of element lists.
void enumerate_subsets(int m, int n, int first, std::uint64_t acc, int size,
                       std::vector<std::uint64_t>& out) {
    if (size == n) {
        out.push_back(acc);
        return;
    }
    for (int e = first; e <= m - (n - size - 1); ++e)
        enumerate_subsets(m, n, e + 1, acc | (1ull << (e - 1)), size + 1, out);
}

long long binomial(int m, int n) {
    if (n < 0 || n > m) return 0;
    long long r = 1;
    for (int i = 1; i <= n; ++i) {
        r = r * (m - n + i) / i;
        if (r > 100'000'000) return 100'000'000; // saturate, only used for cap checks
    }
    return r;
}

Graph subsets_graph(std::vector<std::uint64_t> masks, const std::string& name, FamilyInfo info) {
    if (static_cast<int>(masks.size()) > caps().family)
        cap_error(name + ": vertex count exceeds family cap");
    Graph g(static_cast<int>(masks.size()));
    for (size_t i = 0; i < masks.size(); ++i)
        for (size_t j = i + 1; j < masks.size(); ++j)
            if ((masks[i] & masks[j]) == 0) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    std::vector<Label> labels;
    labels.reserve(masks.size());
    for (std::uint64_t mask : masks) labels.push_back(SetTuple{mask_to_set(mask)});
    g.set_labels(std::move(labels));
    g.name = name;
    g.family = std::move(info);
    return g;
}

} // namespace

Graph kneser(int m, int n) {
    require(n >= 1 && m >= 2 * n, "KG:m,n requires m >= 2n >= 2");
    require(m <= caps().ground && m <= 63, "KG: ground set exceeds cap");
    if (binomial(m, n) > caps().family)
        cap_error("KG: vertex count exceeds family cap");
    std::vector<std::uint64_t> masks;
    enumerate_subsets(m, n, 1, 0, 0, masks);
    return subsets_graph(std::move(masks),
                         "KG:" + std::to_string(m) + "," + std::to_string(n),
                         FamilyInfo{"KG", m, n, 0});
}

Graph schrijver(int m, int n) {
    require(n >= 1 && m >= 2 * n, "SG:m,n requires m >= 2n");
    auto masks = two_stable_subsets(m, n);
    return subsets_graph(std::move(masks),
                         "SG:" + std::to_string(m) + "," + std::to_string(n),
                         FamilyInfo{"SG", m, n, 0});
}

namespace {

enum class TupleFilter { none, stable_union, stable_union_and_complement };

struct TupleEnumerator {
    int m, n, k;
    TupleFilter filter;
    std::uint64_t full;
    std::vector<std::uint64_t> stack;
    std::vector<std::vector<std::uint64_t>> out;

    bool admit(std::uint64_t set) const {
        if (filter == TupleFilter::none) return true;
        if (!is_stable_union(set, m, n)) return false;
        if (filter == TupleFilter::stable_union_and_complement)
            return is_stable_union(full & ~set, m, n);
        return true;
    }

    void emit_or_descend(int level) {
        if (level == k) {
            if (static_cast<int>(out.size()) >= caps().family)
                cap_error("helical family: vertex count exceeds cap");
            out.push_back(stack);
            return;
        }
        // A_{level+1}: disjoint from the previous set, contains the one two
        // back, size >= n (only binding at level 1).
        std::uint64_t base = (level >= 2) ? stack[level - 2] : 0;
        std::uint64_t forbidden = stack[level - 1] | base;
        std::uint64_t free = full & ~forbidden;
        std::vector<int> elems = [&] {
            std::vector<int> e;
            for (int b = 0; b < m; ++b)
                if (free >> b & 1) e.push_back(b);
            return e;
        }();
        const int t = static_cast<int>(elems.size());
        for (std::uint64_t choice = 0; choice < (1ull << t); ++choice) {
            std::uint64_t set = base;
            for (int b = 0; b < t; ++b)
                if (choice >> b & 1) set |= 1ull << elems[b];
            if (std::popcount(set) < n) continue;
            if (!admit(set)) continue;
            stack.push_back(set);
            emit_or_descend(level + 1);
            stack.pop_back();
        }
    }

    std::vector<std::vector<std::uint64_t>> run() {
        std::vector<std::uint64_t> firsts;
        enumerate_subsets(m, n, 1, 0, 0, firsts);
        for (std::uint64_t first : firsts) {
            if (!admit(first)) continue;
            stack.assign(1, first);
            emit_or_descend(1);
        }
        return std::move(out);
    }
};

Graph helical_graph_uncached(int m, int n, int k, TupleFilter filter, const std::string& kind) {
    require(n >= 1 && m >= 2 * n && k >= 1, kind + ":m,n,k requires m >= 2n, k >= 1");
    require(m <= 20, kind + ": ground set exceeds tuple-family bound (20)");
    TupleEnumerator enumerator{m, n, k, filter, (1ull << m) - 1, {}, {}};
    auto tuples = enumerator.run();

    std::vector<std::pair<SetTuple, std::vector<std::uint64_t>>> verts;
    verts.reserve(tuples.size());
    for (auto& masks : tuples) {
        SetTuple tuple;
        tuple.reserve(masks.size());
        for (std::uint64_t mask : masks) tuple.push_back(mask_to_set(mask));
        verts.emplace_back(std::move(tuple), std::move(masks));
    }
    std::sort(verts.begin(), verts.end(),
              [](const auto& a, const auto& b) { return set_tuple_less(a.first, b.first); });

    const int order = static_cast<int>(verts.size());
    Graph g(order);
    for (int i = 0; i < order; ++i) {
        const auto& a = verts[i].second;
        for (int j = i + 1; j < order; ++j) {
            const auto& b = verts[j].second;
            bool adj = true;
            for (int r = 0; adj && r < k; ++r)
                if (a[r] & b[r]) adj = false;
            for (int r = 0; adj && r + 1 < k; ++r)
                if ((a[r] & ~b[r + 1]) || (b[r] & ~a[r + 1])) adj = false;
            if (adj) g.add_edge(i, j);
        }
    }
    std::vector<Label> labels;
    labels.reserve(verts.size());
    for (auto& [tuple, masks] : verts) labels.push_back(std::move(tuple));
    g.set_labels(std::move(labels));
    g.name = kind + ":" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k);
    g.family = FamilyInfo{kind, m, n, k};
    return g;
}

// The lift/transfer operations rebuild their helical targets freely; memoize
// construction so repeated suite iterations stay cheap.
Graph helical_graph(int m, int n, int k, TupleFilter filter, const std::string& kind) {
    static std::mutex mutex;
    static std::map<std::string, Graph> cache;
    std::string key = kind + ":" + std::to_string(m) + "," + std::to_string(n) + "," +
                      std::to_string(k);
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, helical_graph_uncached(m, n, k, filter, kind)).first;
    return it->second;
}

} // namespace

Graph helical(int m, int n, int k) { return helical_graph(m, n, k, TupleFilter::none, "H"); }

Graph schrijver_helical(int m, int n, int k) {
    return helical_graph(m, n, k, TupleFilter::stable_union, "SGk");
}

Graph stable_helical(int m, int n, int k) {
    return helical_graph(m, n, k, TupleFilter::stable_union_and_complement, "SH");
}

namespace {

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        std::string item = text.substr(pos, end - pos);
        require(!item.empty() && std::all_of(item.begin(), item.end(),
                                             [](unsigned char c) { return std::isdigit(c); }),
                what + ": expected integer, got '" + item + "'");
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            usage_error(what + ": integer out of range '" + item + "'");
        }
        pos = end + 1;
        if (end == text.size()) break;
    }
    return out;
}

} // namespace

bool looks_like_descriptor(const std::string& text) {
    size_t colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size()) return false;
    std::string kind = text.substr(0, colon);
    static const char* kinds[] = {"K", "C", "Kc", "KG", "SG", "H", "SGk", "SH"};
    if (std::none_of(std::begin(kinds), std::end(kinds),
                     [&](const char* k) { return kind == k; }))
        return false;
    return std::all_of(text.begin() + colon + 1, text.end(), [](unsigned char c) {
        return std::isdigit(c) || c == ',';
    });
}

Graph make_family(const std::string& descriptor) {
    size_t colon = descriptor.find(':');
    require(colon != std::string::npos, "family descriptor needs ':', got '" + descriptor + "'");
    std::string kind = descriptor.substr(0, colon);
    auto params = parse_int_list(descriptor.substr(colon + 1), descriptor);
    auto arity = [&](size_t want) {
        require(params.size() == want,
                descriptor + ": expected " + std::to_string(want) + " parameter(s)");
    };
    if (kind == "K") { arity(1); return complete_graph(params[0]); }
    if (kind == "C") { arity(1); return cycle_graph(params[0]); }
    if (kind == "Kc") { arity(2); return circular_complete(params[0], params[1]); }
    if (kind == "KG") { arity(2); return kneser(params[0], params[1]); }
    if (kind == "SG") { arity(2); return schrijver(params[0], params[1]); }
    if (kind == "H") { arity(3); return helical(params[0], params[1], params[2]); }
    if (kind == "SGk") { arity(3); return schrijver_helical(params[0], params[1], params[2]); }
    if (kind == "SH") { arity(3); return stable_helical(params[0], params[1], params[2]); }
    usage_error("unknown family kind '" + kind + "'");
}

WhileReduction while_reduce(const Graph& g) {
    require(!g.any_loops(), "while_reduce: graph must be loop-free");
    const int n = g.order();

    std::vector<int> scan(n);
    std::iota(scan.begin(), scan.end(), 0);
    if (g.labeled())
        std::sort(scan.begin(), scan.end(),
                  [&](int a, int b) { return label_less(g.label(a), g.label(b)); });
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[scan[i]] = i;

    Bits alive(n);
    alive.set();
    std::vector<std::pair<int, int>> removed;
    std::vector<int> removed_to(n, -1);

    bool changed = true;
    while (changed) {
        changed = false;
        for (int ui = 0; ui < n && !changed; ++ui) {
            int u = scan[ui];
            if (!alive.test(u)) continue;
            Bits nu = g.row(u) & alive;
            for (int vi = 0; vi < n; ++vi) {
                int v = scan[vi];
                if (v == u || !alive.test(v)) continue;
                Bits nv = g.row(v) & alive;
                if (!nu.is_subset_of(nv)) continue;
                int goner = u, witness = v;
                if (nu == nv && rank[v] > rank[u]) { goner = v; witness = u; }
                removed.emplace_back(goner, witness);
                removed_to[goner] = witness;
                alive.reset(goner);
                changed = true;
                break;
            }
        }
    }

    WhileReduction result;
    std::vector<int> reduced_index(n, -1);
    for (auto v = alive.find_first(); v != Bits::npos; v = alive.find_next(v)) {
        reduced_index[v] = static_cast<int>(result.trace.survivors.size());
        result.trace.survivors.push_back(static_cast<int>(v));
    }
    result.reduced = induced_subgraph(g, result.trace.survivors);
    result.reduced.name = g.name.empty() ? "reduced" : "reduce(" + g.name + ")";

    std::vector<int> assignment(n, -1);
    for (int v = 0; v < n; ++v) {
        int target = v;
        while (removed_to[target] >= 0) target = removed_to[target];
        assignment[v] = reduced_index[target];
    }
    result.trace.removed = std::move(removed);
    result.trace.retraction = VertexMap{g, result.reduced, std::move(assignment)};
    return result;
}

} // namespace helix
