#include "helix/corpus.hpp"

#include <algorithm>

#include "helix/error.hpp"
#include "helix/families.hpp"

namespace helix {

namespace {

Graph sample_gnp(Rng& rng, int n, int edge_percent) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(edge_percent, 100)) g.add_edge(u, v);
    return g;
}

bool odd_girth_at_least(const Graph& g, int floor) {
    auto og = cycle_stats(g).odd_girth;
    return !og || *og >= floor;
}

Graph sample_cubic(Rng& rng, int n) {
    // Pairing model: three points per vertex, match uniformly, reject loops
    // and doubled edges.
    std::vector<int> points(3 * n);
    for (int i = 0; i < 3 * n; ++i) points[i] = i / 3;
    for (int i = 3 * n - 1; i > 0; --i)
        std::swap(points[i], points[rng.below(i + 1)]);
    Graph g(n);
    for (int i = 0; i < 3 * n; i += 2) {
        int u = points[i], v = points[i + 1];
        if (u == v || g.adjacent(u, v)) return Graph(0); // reject
        g.add_edge(u, v);
    }
    return g;
}

std::vector<Graph> family_sweep(const CorpusSpec& spec) {
    std::vector<Graph> out;
    auto push = [&](Graph g) {
        if (g.order() <= spec.max_order && static_cast<int>(out.size()) < spec.count)
            out.push_back(std::move(g));
    };
    for (int m = 3; m <= 6; ++m) push(complete_graph(m));
    for (int n = 5; n <= 9; n += 2) push(cycle_graph(n));
    push(kneser(4, 2));
    push(kneser(5, 2));
    push(kneser(6, 2));
    push(schrijver(5, 2));
    push(schrijver(7, 2));
    push(schrijver(7, 3));
    push(schrijver(9, 4));
    push(helical(3, 1, 2));
    push(helical(3, 1, 3));
    push(helical(4, 1, 2));
    push(helical(5, 2, 2));
    push(schrijver_helical(6, 2, 2));
    push(schrijver_helical(7, 2, 2));
    push(stable_helical(6, 2, 2));
    return out;
}

} // namespace

std::vector<Graph> generate_corpus(const CorpusSpec& spec) {
    require(spec.count >= 0, "corpus: count must be >= 0");
    require(spec.n_min >= 0 && spec.n_min <= spec.n_max, "corpus: bad size bounds");
    if (spec.kind == CorpusKind::family_sweep) return family_sweep(spec);

    Rng rng(spec.seed);
    std::vector<Graph> out;
    long budget = 2000L * std::max(1, spec.count);
    while (static_cast<int>(out.size()) < spec.count) {
        if (--budget < 0)
            throw Error(ErrorKind::check,
                        "corpus: rejection budget exhausted; loosen the bounds");
        if (spec.kind == CorpusKind::gnp_odd_girth) {
            int n = spec.n_min + static_cast<int>(rng.below(spec.n_max - spec.n_min + 1));
            Graph g = sample_gnp(rng, n, spec.edge_percent);
            if (!odd_girth_at_least(g, spec.odd_girth_floor)) continue;
            g.name = corpus_descriptor(spec, static_cast<int>(out.size()));
            out.push_back(std::move(g));
        } else {
            int span = (spec.n_max - spec.n_min) / 2 + 1;
            int n = spec.n_min + 2 * static_cast<int>(rng.below(span));
            if (n % 2) ++n; // pairing model needs 3n even
            if (n < 4) n = 4;
            Graph g = sample_cubic(rng, n);
            if (g.order() == 0) continue;
            g.name = corpus_descriptor(spec, static_cast<int>(out.size()));
            out.push_back(std::move(g));
        }
    }
    return out;
}

std::string corpus_descriptor(const CorpusSpec& spec, int index) {
    std::string kind = spec.kind == CorpusKind::gnp_odd_girth ? "gnp"
                       : spec.kind == CorpusKind::random_cubic ? "cubic"
                                                               : "sweep";
    std::string i = std::to_string(index);
    while (i.size() < 3) i.insert(i.begin(), '0');
    return kind + ":n=" + std::to_string(spec.n_min) + ".." + std::to_string(spec.n_max) +
           ":og>=" + std::to_string(spec.odd_girth_floor) + ":seed=" +
           std::to_string(spec.seed) + ":i=" + i;
}

} // namespace helix
