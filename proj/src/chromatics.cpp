#include "helix/chromatics.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>

#include "helix/caps.hpp"
#include "helix/coloring.hpp"
#include "helix/error.hpp"
#include "helix/families.hpp"
#include "helix/hom.hpp"

namespace helix {

namespace {

using BigRational = boost::multiprecision::cpp_rational;

Rational to_rational(const BigRational& x) {
    auto num = boost::multiprecision::numerator(x);
    auto den = boost::multiprecision::denominator(x);
    if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
        internal_error("rational out of int64 range");
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

} // namespace

ChromaticResult chromatic_number(const Graph& g) {
    require(!g.any_loops(), "chromatic_number: graph must be loop-free");
    if (g.order() > caps().chromatic)
        cap_error("chromatic_number: order exceeds cap " + std::to_string(caps().chromatic));
    ChromaticResult result;
    if (g.order() == 0) {
        result.log = "empty graph";
        return result;
    }
    auto clique = greedy_clique(g);
    int t = std::max<int>(1, static_cast<int>(clique.size()));
    std::string log = "clique=" + std::to_string(clique.size());
    for (;; ++t) {
        ColorDecision d = colorable(g, t);
        if (d.colorable) {
            result.value = Rational(t);
            result.certificate = VertexMap{g, complete_graph(t), std::move(d.coloring)};
            result.log = log;
            return result;
        }
        log += ";refuted t=" + std::to_string(t) + " nodes=" + std::to_string(d.nodes);
    }
}

ChromaticResult circular_chromatic(const Graph& g, int denominator_cap) {
    require(!g.any_loops(), "circular_chromatic: graph must be loop-free");
    require(g.edge_count() > 0, "circular_chromatic: graph needs at least one edge");
    require(denominator_cap >= 1, "circular_chromatic: denominator cap must be >= 1");
    const int chi = static_cast<int>(chromatic_number(g).value.num);
    const int qmax = std::min(denominator_cap, g.order());

    std::vector<std::pair<int, int>> ratios;
    for (int q = 1; q <= qmax; ++q)
        for (int p = 2 * q; p <= chi * q; ++p)
            if (std::gcd(p, q) == 1) ratios.emplace_back(p, q);
    std::sort(ratios.begin(), ratios.end(), [](const auto& a, const auto& b) {
        return static_cast<long>(a.first) * b.second < static_cast<long>(b.first) * a.second;
    });

    ChromaticResult result;
    Rational refuted(0);
    int refutations = 0;
    for (const auto& [p, q] : ratios) {
        Graph target = circular_complete(p, q);
        if (hom_exists(g, target)) {
            result.value = Rational(p, q);
            result.exact = qmax >= g.order();
            result.lower = refuted;
            result.upper = result.value;
            auto witness = find_homomorphism(g, target, HomMode::first);
            result.certificate = std::move(witness.witness);
            result.log = "refuted " + std::to_string(refutations) + " ratios below, last " +
                         refuted.str() + "; qmax=" + std::to_string(qmax);
            return result;
        }
        refuted = Rational(p, q);
        ++refutations;
    }
    internal_error("circular_chromatic: scan ended without the chi/1 fallback");
}

namespace {

// All maximal independent sets, ascending vertex lists, lex order.
void maximal_independent_sets(const Graph& g, Bits candidates, Bits excluded, Bits current,
                              std::vector<std::vector<int>>& out) {
    if (candidates.none() && excluded.none()) {
        std::vector<int> set;
        for (auto v = current.find_first(); v != Bits::npos; v = current.find_next(v))
            set.push_back(static_cast<int>(v));
        out.push_back(std::move(set));
        return;
    }
    Bits cand = candidates;
    for (auto v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
        Bits non_adjacent(g.order());
        non_adjacent.set();
        non_adjacent -= g.row(static_cast<int>(v));
        non_adjacent.reset(v);
        Bits next_current = current;
        next_current.set(v);
        maximal_independent_sets(g, candidates & non_adjacent, excluded & non_adjacent,
                                 next_current, out);
        candidates.reset(v);
        excluded.set(v);
    }
}

struct Simplex {
    // min c.x  s.t.  A x = b, x >= 0, two-phase, Bland's rule.
    int rows, cols;
    std::vector<std::vector<BigRational>> a;
    std::vector<BigRational> rhs;
    std::vector<BigRational> cost;
    std::vector<int> basis;

    void pivot(int r, int c) {
        BigRational inv = a[r][c];
        for (int j = 0; j < cols; ++j) a[r][j] /= inv;
        rhs[r] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            BigRational factor = a[i][c];
            if (factor == 0) continue;
            for (int j = 0; j < cols; ++j) a[i][j] -= factor * a[r][j];
            rhs[i] -= factor * rhs[r];
        }
        basis[r] = c;
    }

    std::vector<BigRational> reduced_costs(const std::vector<BigRational>& c) const {
        std::vector<BigRational> red = c;
        for (int i = 0; i < rows; ++i) {
            const BigRational& cb = c[basis[i]];
            if (cb == 0) continue;
            for (int j = 0; j < cols; ++j) red[j] -= cb * a[i][j];
        }
        return red;
    }

    // Returns false if unbounded (never happens for the cover LP). Only
    // columns below allowed_cols may enter the basis.
    bool solve_phase(const std::vector<BigRational>& c, int allowed_cols) {
        for (;;) {
            auto red = reduced_costs(c);
            int enter = -1;
            for (int j = 0; j < allowed_cols; ++j)
                if (red[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return true;
            int leave = -1;
            BigRational best;
            for (int i = 0; i < rows; ++i) {
                if (a[i][enter] <= 0) continue;
                BigRational ratio = rhs[i] / a[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

} // namespace

ChromaticResult fractional_chromatic(const Graph& g) {
    require(!g.any_loops(), "fractional_chromatic: graph must be loop-free");
    if (g.order() > caps().fractional)
        cap_error("fractional_chromatic: order exceeds cap " + std::to_string(caps().fractional));
    ChromaticResult result;
    if (g.order() == 0) {
        result.log = "empty graph";
        return result;
    }
    const int n = g.order();
    Bits all(n);
    all.set();
    std::vector<std::vector<int>> sets;
    maximal_independent_sets(g, all, Bits(n), Bits(n), sets);
    std::sort(sets.begin(), sets.end());
    const int m = static_cast<int>(sets.size());

    // Columns: m set weights, n surplus, n artificial.
    Simplex lp;
    lp.rows = n;
    lp.cols = m + 2 * n;
    lp.a.assign(n, std::vector<BigRational>(lp.cols, 0));
    lp.rhs.assign(n, 1);
    for (int j = 0; j < m; ++j)
        for (int v : sets[j]) lp.a[v][j] = 1;
    for (int v = 0; v < n; ++v) {
        lp.a[v][m + v] = -1;        // surplus
        lp.a[v][m + n + v] = 1;     // artificial
    }
    lp.basis.resize(n);
    std::iota(lp.basis.begin(), lp.basis.end(), m + n);

    std::vector<BigRational> phase1(lp.cols, 0);
    for (int v = 0; v < n; ++v) phase1[m + n + v] = 1;
    if (!lp.solve_phase(phase1, lp.cols)) internal_error("fractional LP: phase 1 unbounded");
    BigRational infeas = 0;
    for (int i = 0; i < n; ++i)
        if (lp.basis[i] >= m + n) infeas += lp.rhs[i];
    if (infeas != 0) internal_error("fractional LP: infeasible cover system");
    // Pivot any degenerate artificial out of the basis so reduced costs stay
    // meaningful in phase 2 (artificials are barred from re-entering).
    for (int i = 0; i < n; ++i) {
        if (lp.basis[i] < m + n) continue;
        for (int j = 0; j < m + n; ++j)
            if (lp.a[i][j] != 0) {
                lp.pivot(i, j);
                break;
            }
    }

    std::vector<BigRational> phase2(lp.cols, 0);
    for (int j = 0; j < m; ++j) phase2[j] = 1;
    if (!lp.solve_phase(phase2, m + n)) internal_error("fractional LP: phase 2 unbounded");

    std::vector<BigRational> x(m, 0);
    for (int i = 0; i < n; ++i)
        if (lp.basis[i] < m) x[lp.basis[i]] = lp.rhs[i];
    BigRational value = 0;
    for (int j = 0; j < m; ++j) value += x[j];

    // Dual certificate from the reduced costs of the surplus columns.
    auto red = lp.reduced_costs(phase2);
    std::vector<BigRational> y(n);
    for (int v = 0; v < n; ++v) y[v] = red[m + v];

    // Revalidate both certificates exactly.
    for (int v = 0; v < n; ++v) {
        BigRational cover = 0;
        for (int j = 0; j < m; ++j)
            if (std::find(sets[j].begin(), sets[j].end(), v) != sets[j].end()) cover += x[j];
        if (cover < 1) internal_error("fractional LP: primal certificate fails coverage");
        if (y[v] < 0) internal_error("fractional LP: dual certificate negative");
    }
    BigRational dual_value = 0;
    for (int v = 0; v < n; ++v) dual_value += y[v];
    for (int j = 0; j < m; ++j) {
        BigRational s = 0;
        for (int v : sets[j]) s += y[v];
        if (s > 1) internal_error("fractional LP: dual certificate infeasible");
    }
    if (dual_value != value) internal_error("fractional LP: duality gap");

    result.value = to_rational(value);
    for (int j = 0; j < m; ++j)
        if (x[j] != 0) result.weights.emplace_back(sets[j], to_rational(x[j]));
    result.log = "sets=" + std::to_string(m);
    return result;
}

namespace {

// Does a proper coloring exist whose every open neighborhood sees at most
// s - 1 colors? Canonical color classes over a fixed vertex order.
struct LocalSearch {
    const Graph& g;
    int bound; // s - 1
    int palette;
    std::vector<int> color;
    std::vector<Bits> trace; // colors on assigned neighbors

    LocalSearch(const Graph& g, int bound)
        : g(g), bound(bound), palette(g.order()), color(g.order(), -1),
          trace(g.order(), Bits(std::max(1, g.order()))) {}

    bool extend(int v, int used) {
        if (v == g.order()) return true;
        int limit = std::min(used, palette - 1);
        for (int c = 0; c <= limit; ++c) {
            if (trace[v].test(c)) continue; // properness
            bool ok = true;
            std::vector<int> touched;
            for (auto w = g.row(v).find_first(); ok && w != Bits::npos;
                 w = g.row(v).find_next(w)) {
                int u = static_cast<int>(w);
                if (trace[u].test(c)) continue;
                if (static_cast<int>(trace[u].count()) + 1 > bound) {
                    ok = false;
                    break;
                }
                trace[u].set(c);
                touched.push_back(u);
            }
            if (ok) {
                color[v] = c;
                if (extend(v + 1, std::max(used, c + 1))) return true;
                color[v] = -1;
            }
            for (int u : touched) trace[u].reset(c);
        }
        return false;
    }
};

} // namespace

ChromaticResult local_chromatic(const Graph& g) {
    require(!g.any_loops(), "local_chromatic: graph must be loop-free");
    if (g.order() > caps().local)
        cap_error("local_chromatic: order exceeds cap " + std::to_string(caps().local));
    ChromaticResult result;
    if (g.order() == 0) {
        result.log = "empty graph";
        return result;
    }
    int chi = static_cast<int>(chromatic_number(g).value.num);
    int psi = chi; // any chi-coloring has closed neighborhoods within chi colors
    for (int s = chi - 1; s >= 1; --s) {
        LocalSearch search(g, s - 1);
        if (!search.extend(0, 0)) break;
        psi = s;
    }
    result.value = Rational(psi);
    result.log = "chi=" + std::to_string(chi);
    return result;
}

CriticalityReport vertex_critical(const Graph& g) {
    require(!g.any_loops(), "vertex_critical: graph must be loop-free");
    CriticalityReport report;
    report.chromatic = static_cast<int>(chromatic_number(g).value.num);
    report.vertex_critical = true;
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> rest;
        for (int u = 0; u < g.order(); ++u)
            if (u != v) rest.push_back(u);
        int chi = static_cast<int>(chromatic_number(induced_subgraph(g, rest)).value.num);
        report.cases.emplace_back(v, chi);
        if (chi >= report.chromatic) report.vertex_critical = false;
    }
    return report;
}

} // namespace helix
