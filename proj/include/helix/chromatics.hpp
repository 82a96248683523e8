#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "helix/graph.hpp"
#include "helix/rational.hpp"
#include "helix/vertex_map.hpp"

namespace helix {

// Result of an exact chromatic-parameter computation. When exact, the
// certificate (if any) witnesses the upper bound and the log records the
// exhaustive refutation behind the lower bound. When not exact (circular
// scans with a small denominator cap), bounds hold: lower < value <= upper.
struct ChromaticResult {
    Rational value{0};
    bool exact = true;
    Rational lower{0};
    Rational upper{0};
    std::optional<VertexMap> certificate;
    // Fractional cover certificate: (independent set, weight) pairs.
    std::vector<std::pair<std::vector<int>, Rational>> weights;
    std::string log;
};

// Smallest t admitting a proper t-coloring; clique-seeded ascending scan,
// each refutation exhaustive. Loop-free graphs up to the chromatic cap.
ChromaticResult chromatic_number(const Graph& g);

// Scans ratios p/q ascending (gcd 1, q <= min(cap, |V|), 2 <= p/q <= chi) for
// a homomorphism into the circular complete graph; exact when the cap
// reaches |V|, otherwise bounds.
ChromaticResult circular_chromatic(const Graph& g, int denominator_cap);

// Exact optimum of the fractional cover LP over maximal independent sets,
// solved with rational pivoting (Bland's rule); primal and dual certificates
// are revalidated before returning.
ChromaticResult fractional_chromatic(const Graph& g);

// Minimum over proper colorings of the largest closed-neighborhood color
// count; decision search per threshold with canonical color classes.
ChromaticResult local_chromatic(const Graph& g);

struct CriticalityReport {
    int chromatic = 0;
    std::vector<std::pair<int, int>> cases; // (vertex, chromatic number without it)
    bool vertex_critical = false;
};

// chi(g) and chi(g - v) for every v; critical iff all deletions drop chi.
CriticalityReport vertex_critical(const Graph& g);

} // namespace helix
