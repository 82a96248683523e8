#include "helix/verify.hpp"

#include <algorithm>
#include <bit>

#include "helix/caps.hpp"
#include "helix/chromatics.hpp"
#include "helix/coloring.hpp"
#include "helix/corpus.hpp"
#include "helix/error.hpp"
#include "helix/families.hpp"
#include "helix/hom.hpp"

namespace helix {

namespace {

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string map_str(const std::vector<int>& map) {
    std::string out = "[";
    for (size_t i = 0; i < map.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(map[i]);
    }
    return out + "]";
}

int get_int(const SuiteParams& params, const std::string& key, int fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    try {
        return std::stoi(it->second);
    } catch (const std::exception&) {
        usage_error("parameter " + key + ": expected integer, got '" + it->second + "'");
    }
}

std::uint64_t get_seed(const SuiteParams& params, std::uint64_t fallback) {
    auto it = params.find("seed");
    if (it == params.end()) return fallback;
    try {
        return std::stoull(it->second);
    } catch (const std::exception&) {
        usage_error("parameter seed: expected integer, got '" + it->second + "'");
    }
}

void check_keys(const SuiteParams& params, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : params) {
        (void)value;
        if (std::none_of(allowed.begin(), allowed.end(),
                         [&](const char* a) { return key == a; }))
            usage_error("unknown parameter '" + key + "' for this suite");
    }
}

void note_params(Report& report, const SuiteParams& params) {
    for (const auto& [k, v] : params) report.params.emplace_back(k, v);
}

// ---- homb / shomb ---------------------------------------------------------

struct IffConfig {
    int k, m, n;
};

void run_power_iff(Report& report, const std::vector<Graph>& corpus, const IffConfig& cfg,
                   bool stable) {
    Graph small = stable ? schrijver(cfg.m, cfg.n) : kneser(cfg.m, cfg.n);
    Graph big = stable ? schrijver_helical(cfg.m, cfg.n, cfg.k) : helical(cfg.m, cfg.n, cfg.k);
    std::string suffix = ":k=" + std::to_string(cfg.k) + ":m=" + std::to_string(cfg.m) +
                         ":n=" + std::to_string(cfg.n);
    for (const Graph& g : corpus) {
        std::string id = g.name + suffix;
        try {
            Graph pw = power(g, 2 * cfg.k - 1);
            auto left = find_homomorphism(pw, small, HomMode::first);
            auto right = find_homomorphism(g, big, HomMode::first);
            std::string observed = "L=" + yn(left.found) + ",R=" + yn(right.found);
            bool ok = left.found == right.found;
            if (ok && left.found) {
                VertexMap lifted = helical_lift(*left.witness, g, cfg.k);
                VertexMap projected = helical_project(*right.witness, cfg.k);
                observed += ",lift=ok,project=ok";
                (void)lifted;
                (void)projected;
            }
            report.add(id, "L==R", observed, ok);
        } catch (const Error& e) {
            report.add(id, "L==R", std::string("error:") + e.what(), false);
        }
    }
}

Report suite_power_iff(const SuiteParams& params, bool stable) {
    check_keys(params, {"k", "m", "n", "trials", "seed", "nmax"});
    Report report;
    report.suite = stable ? "shomb" : "homb";
    note_params(report, params);
    report.seed = get_seed(params, 42);
    int trials = get_int(params, "trials", 25);
    int nmax = get_int(params, "nmax", 10);

    std::vector<IffConfig> configs;
    if (params.count("m") || params.count("n") || params.count("k")) {
        require(params.count("m") && params.count("n") && params.count("k"),
                "give all of k, m, n or none");
        configs.push_back({get_int(params, "k", 0), get_int(params, "m", 0),
                           get_int(params, "n", 0)});
    } else {
        for (int k : {2, 3})
            for (auto [m, n] : {std::pair{3, 1}, {4, 1}, {5, 1}, {5, 2}, {6, 2}})
                configs.push_back({k, m, n});
    }
    for (const auto& cfg : configs) {
        CorpusSpec spec;
        spec.kind = CorpusKind::gnp_odd_girth;
        spec.n_min = 4;
        spec.n_max = nmax;
        spec.odd_girth_floor = 2 * cfg.k + 1;
        spec.seed = report.seed + cfg.k; // same corpus across (m,n) at fixed k
        spec.count = trials;
        run_power_iff(report, generate_corpus(spec), cfg, stable);
    }
    return report;
}

// ---- chrom ----------------------------------------------------------------

Report suite_chrom(const SuiteParams& params) {
    check_keys(params, {"m", "n", "k"});
    Report report;
    report.suite = "chrom";
    note_params(report, params);

    std::vector<std::pair<std::string, int>> instances;
    if (params.count("m") || params.count("n") || params.count("k")) {
        require(params.count("m") && params.count("n") && params.count("k"),
                "give all of m, n, k or none");
        int m = get_int(params, "m", 0), n = get_int(params, "n", 0), k = get_int(params, "k", 0);
        std::string mnk = std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k);
        instances = {{"H:" + mnk, m - 2 * n + 2}, {"SGk:" + mnk, m - 2 * n + 2}};
    } else {
        instances = {{"KG:5,2", 3},  {"SG:7,3", 3},  {"H:4,1,2", 4}, {"H:5,1,2", 5},
                     {"H:6,2,2", 4}, {"H:4,1,3", 4}, {"SH:6,2,2", 4}};
    }
    for (const auto& [desc, expected] : instances) {
        try {
            auto result = chromatic_number(make_family(desc));
            report.add(desc, "chi=" + std::to_string(expected), "chi=" + result.value.str(),
                       result.value == Rational(expected), result.log);
        } catch (const Error& e) {
            report.add(desc, "chi=" + std::to_string(expected), std::string("error:") + e.what(),
                       false);
        }
    }
    return report;
}

// ---- chrom-coloring -------------------------------------------------------

Report suite_chrom_coloring(const SuiteParams& params) {
    check_keys(params, {"m", "n", "k"});
    Report report;
    report.suite = "chrom-coloring";
    note_params(report, params);
    int m = get_int(params, "m", 4), n = get_int(params, "n", 1), k = get_int(params, "k", 2);
    std::string id = "SGpower:" + std::to_string(m) + "," + std::to_string(n) + "," +
                     std::to_string(k);
    try {
        auto result = schrijver_power_coloring(m, n, k);
        const Graph& source_power = result.coloring.source;
        bool valid = is_homomorphism(result.coloring);
        std::string observed = "a=" + std::to_string(result.a) + ",b=" + std::to_string(result.b) +
                               ",order=" + std::to_string(source_power.order()) +
                               ",hom=" + yn(valid);
        // The construction validates internally; re-check here and pin the
        // (4,1,2) instance size.
        bool ok = valid;
        std::string expected = "hom=yes";
        if (m == 4 && n == 1 && k == 2) {
            expected = "order=324,hom=yes";
            ok = ok && source_power.order() == 324;
        }
        report.add(id, expected, observed, ok);
    } catch (const Error& e) {
        report.add(id, "hom=yes", std::string("error:") + e.what(), false);
    }
    return report;
}

// ---- ocy ------------------------------------------------------------------

void run_ocy(Report& report, const std::vector<Graph>& corpus, int k) {
    Graph odd_cycle = cycle_graph(2 * k + 1);
    for (const Graph& g : corpus) {
        std::string id = g.name + ":k=" + std::to_string(k);
        try {
            auto left = find_homomorphism(g, odd_cycle, HomMode::first);
            Graph pw = power(subdivide(g, 2), 2 * k + 1);
            auto right = colorable(pw, 3);
            bool ok = left.found == right.colorable;
            std::string observed = "hom=" + yn(left.found) + ",col3=" + yn(right.colorable);
            if (ok && left.found) {
                VertexMap coloring = three_coloring_from_cycle_hom(g, k, *left.witness);
                observed += ",transfer=ok";
                (void)coloring;
            }
            if (ok && right.colorable) {
                VertexMap col{pw, complete_graph(3), right.coloring};
                VertexMap back = cycle_hom_from_three_coloring(g, k, col);
                observed += ",back=ok";
                (void)back;
            }
            report.add(id, "hom==col3", observed, ok);
        } catch (const Error& e) {
            report.add(id, "hom==col3", std::string("error:") + e.what(), false);
        }
    }
}

Report suite_ocy(const SuiteParams& params) {
    check_keys(params, {"k", "trials", "seed", "nmax"});
    Report report;
    report.suite = "ocy";
    note_params(report, params);
    report.seed = get_seed(params, 42);
    int trials = get_int(params, "trials", 25);
    int nmax = get_int(params, "nmax", 8);
    std::vector<int> ks;
    if (params.count("k")) ks.push_back(get_int(params, "k", 0));
    else ks = {1, 2};
    for (int k : ks) {
        CorpusSpec spec;
        spec.kind = CorpusKind::gnp_odd_girth;
        spec.n_min = 3;
        spec.n_max = nmax;
        spec.odd_girth_floor = 2 * k + 1;
        spec.seed = report.seed + 10 * k;
        spec.count = trials;
        run_ocy(report, generate_corpus(spec), k);
    }
    return report;
}

// ---- m2 -------------------------------------------------------------------

Report suite_m2(const SuiteParams& params) {
    check_keys(params, {"trials", "seed", "nmax"});
    Report report;
    report.suite = "m2";
    note_params(report, params);
    report.seed = get_seed(params, 42);
    int trials = get_int(params, "trials", 20);
    int nmax = get_int(params, "nmax", 8);

    CorpusSpec spec;
    spec.kind = CorpusKind::gnp_odd_girth;
    spec.n_min = 3;
    spec.n_max = nmax;
    spec.odd_girth_floor = 3;
    spec.seed = report.seed;
    spec.count = trials;
    auto corpus = generate_corpus(spec);

    std::vector<Graph> targets{complete_graph(3), cycle_graph(5), complete_graph(4),
                               kneser(5, 2), cycle_graph(7)};
    for (const Graph& g : corpus)
        for (const Graph& h : targets) {
            std::string id = g.name + ">" + h.name;
            try {
                auto found = find_homomorphism(g, h, HomMode::first);
                if (!found.found) {
                    report.add(id, "lift-held", "hom=no", true);
                    continue;
                }
                bool ok = true;
                std::string observed = "hom=yes";
                for (int k : {2, 3, 5}) {
                    bool lifted = power_lift_check(*found.witness, k);
                    observed += ",k" + std::to_string(k) + "=" + yn(lifted);
                    ok = ok && lifted;
                }
                report.add(id, "lift-held", observed, ok);
            } catch (const Error& e) {
                report.add(id, "lift-held", std::string("error:") + e.what(), false);
            }
        }
    return report;
}

// ---- dist -----------------------------------------------------------------

Report suite_dist(const SuiteParams& params) {
    check_keys(params, {"a", "b", "smax"});
    Report report;
    report.suite = "dist";
    note_params(report, params);
    int smax = get_int(params, "smax", 3);

    std::vector<std::pair<int, int>> instances;
    if (params.count("a") || params.count("b")) {
        require(params.count("a") && params.count("b"), "give both a and b or neither");
        instances.emplace_back(get_int(params, "a", 0), get_int(params, "b", 0));
    } else {
        instances = {{7, 3}, {8, 3}, {9, 4}};
    }
    for (auto [a, b] : instances) {
        try {
            Graph sg = schrijver(a, b);
            std::vector<std::uint64_t> masks(sg.order());
            for (int v = 0; v < sg.order(); ++v)
                masks[v] = set_to_mask(std::get<SetTuple>(sg.label(v))[0]);
            for (int s = 1; s <= smax; ++s) {
                Graph even_power = power(sg, 2 * s);
                long pairs = 0, violations = 0;
                int bound = s * (a - 2 * b + 2);
                for (int u = 0; u < sg.order(); ++u)
                    for (int v = u; v < sg.order(); ++v) {
                        if (!even_power.adjacent(u, v)) continue;
                        ++pairs;
                        if (std::popcount(masks[u] & ~masks[v]) > bound ||
                            std::popcount(masks[v] & ~masks[u]) > bound)
                            ++violations;
                    }
                std::string id = "SG:" + std::to_string(a) + "," + std::to_string(b) +
                                 ":s=" + std::to_string(s);
                report.add(id, "violations=0",
                           "pairs=" + std::to_string(pairs) + ",violations=" +
                               std::to_string(violations),
                           violations == 0);
            }
        } catch (const Error& e) {
            report.add("SG:" + std::to_string(a) + "," + std::to_string(b), "violations=0",
                       std::string("error:") + e.what(), false);
        }
    }
    return report;
}

// ---- while-sh -------------------------------------------------------------

void run_while_sh(Report& report, int m, int n, int k) {
    std::string id = "SGk:" + std::to_string(m) + "," + std::to_string(n) + "," +
                     std::to_string(k);
    try {
        Graph sgk = schrijver_helical(m, n, k);
        Graph sh = stable_helical(m, n, k);
        auto reduction = while_reduce(sgk);

        bool survivors_match = reduction.reduced.labels() == sh.labels() &&
                               reduction.reduced == sh;
        bool retraction_ok = is_homomorphism(reduction.trace.retraction);
        // Inclusion SH -> SGk is a homomorphism because SH is induced; check
        // the reverse direction constructively via the retraction, giving
        // homomorphic equivalence.
        bool no_dominated = true;
        const Graph& r = reduction.reduced;
        for (int u = 0; u < r.order() && no_dominated; ++u)
            for (int v = 0; v < r.order(); ++v) {
                if (u == v) continue;
                if (r.row(u).is_subset_of(r.row(v))) {
                    no_dominated = false;
                    break;
                }
            }
        bool ok = survivors_match && retraction_ok && no_dominated;
        std::string observed = "survivors=" + yn(survivors_match) +
                               ",retraction=" + yn(retraction_ok) +
                               ",irreducible=" + yn(no_dominated) +
                               ",removed=" + std::to_string(reduction.trace.removed.size());

        if (m == 7 && n == 2 && k == 2) {
            // The twice-documented removal: ({1,3},{4,5,6,7}) dominated by
            // ({1,3},{2,4,5,6,7}).
            SetTuple goner{{1, 3}, {4, 5, 6, 7}};
            SetTuple witness{{1, 3}, {2, 4, 5, 6, 7}};
            bool found = false;
            for (const auto& [u, v] : reduction.trace.removed) {
                if (std::get<SetTuple>(sgk.label(u)) == goner &&
                    std::get<SetTuple>(sgk.label(v)) == witness)
                    found = true;
            }
            observed += ",trace-pair=" + yn(found);
            ok = ok && found;
        }
        report.add(id, "survivors=yes,retraction=yes,irreducible=yes", observed, ok);
    } catch (const Error& e) {
        report.add(id, "survivors=yes", std::string("error:") + e.what(), false);
    }
}

Report suite_while_sh(const SuiteParams& params) {
    check_keys(params, {"m", "n", "k", "maxorder"});
    Report report;
    report.suite = "while-sh";
    note_params(report, params);
    int max_order = get_int(params, "maxorder", 300);

    if (params.count("m") || params.count("n") || params.count("k")) {
        require(params.count("m") && params.count("n") && params.count("k"),
                "give all of m, n, k or none");
        run_while_sh(report, get_int(params, "m", 0), get_int(params, "n", 0),
                     get_int(params, "k", 0));
        return report;
    }
    for (int m = 2; m <= 9; ++m)
        for (int n = 1; 2 * n <= m && n <= 4; ++n)
            for (int k = 1; k <= 3; ++k) {
                try {
                    Graph sgk = schrijver_helical(m, n, k);
                    if (sgk.order() > max_order || sgk.order() == 0) continue;
                } catch (const Error&) {
                    continue; // family cap; out of sweep range
                }
                run_while_sh(report, m, n, k);
            }
    return report;
}

// ---- cirhel-partial -------------------------------------------------------

Report suite_cirhel_partial(const SuiteParams& params) {
    check_keys(params, {});
    Report report;
    report.suite = "cirhel-partial";

    try {
        auto result = circular_chromatic(helical(3, 1, 2), 9);
        report.add("H:3,1,2", "chic=9/4,exact=yes",
                   "chic=" + result.value.str() + ",exact=" + yn(result.exact),
                   result.exact && result.value == Rational(9, 4));
    } catch (const Error& e) {
        report.add("H:3,1,2", "chic=9/4", std::string("error:") + e.what(), false);
    }

    for (int r = 1; r <= 5; ++r) {
        int len = 2 * r + 1;
        std::string id = "C:" + std::to_string(len);
        try {
            auto result = circular_chromatic(cycle_graph(len), len);
            report.add(id, "chic=" + Rational(len, r).str(),
                       "chic=" + result.value.str() + ",exact=" + yn(result.exact),
                       result.exact && result.value == Rational(len, r));
        } catch (const Error& e) {
            report.add(id, "chic", std::string("error:") + e.what(), false);
        }
    }

    try {
        Graph sh = stable_helical(6, 2, 2);
        auto partial = circular_chromatic(sh, 3);
        auto chi = chromatic_number(sh);
        bool ok = !partial.exact && partial.value == Rational(4) && chi.value == Rational(4) &&
                  partial.lower >= Rational(11, 3);
        report.add("SH:6,2,2", "chi=4,upper=4,inexact,lower>=11/3",
                   "chi=" + chi.value.str() + ",upper=" + partial.upper.str() +
                       ",lower=" + partial.lower.str() + ",exact=" + yn(partial.exact),
                   ok);
    } catch (const Error& e) {
        report.add("SH:6,2,2", "chi=4", std::string("error:") + e.what(), false);
    }
    return report;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"homb", "shomb", "chrom", "chrom-coloring", "ocy",
            "m2",   "dist",  "while-sh", "cirhel-partial"};
}

Report verify(const std::string& suite, const SuiteParams& params) {
    if (suite == "homb") return suite_power_iff(params, false);
    if (suite == "shomb") return suite_power_iff(params, true);
    if (suite == "chrom") return suite_chrom(params);
    if (suite == "chrom-coloring") return suite_chrom_coloring(params);
    if (suite == "ocy") return suite_ocy(params);
    if (suite == "m2") return suite_m2(params);
    if (suite == "dist") return suite_dist(params);
    if (suite == "while-sh") return suite_while_sh(params);
    if (suite == "cirhel-partial") return suite_cirhel_partial(params);
    usage_error("unknown suite '" + suite + "'");
}

Report pentagon_probe(const Graph& g) {
    Report report;
    report.suite = "pentagon-probe";
    require(!g.any_loops(), "pentagon_probe: graph must be loop-free");

    bool cubic = true;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 3) cubic = false;
    report.add("cubic", "-", yn(cubic), true, cubic ? "-" : "probe-is-for-cubic-graphs");

    auto stats = cycle_stats(g);
    report.add("girth", "-", length_str(stats.girth), true);
    report.add("odd-girth", "-", length_str(stats.odd_girth), true);

    bool hom_c5 = hom_exists(g, cycle_graph(5));
    report.add("hom-C5", "-", yn(hom_c5), true);

    bool col3 = colorable(power(subdivide(g, 2), 5), 3).colorable;
    report.add("power5-S2-3colorable", "-", yn(col3), true);

    bool og_ok = !stats.odd_girth || *stats.odd_girth >= 5;
    if (og_ok)
        report.add("consistency", "hom-C5==3colorable",
                   yn(hom_c5) + std::string("==") + yn(col3), hom_c5 == col3);
    else
        report.cases.push_back({"consistency", "odd-girth>=5-required", "skipped",
                                Verdict::indeterminate, "-"});

    try {
        auto chi3 = chromatic_number(power(g, 3));
        report.add("chi-power3", "-", chi3.value.str(), true);
    } catch (const Error& e) {
        report.cases.push_back({"chi-power3", "-", std::string("error:") + e.what(),
                                Verdict::indeterminate, "-"});
    }
    report.add("hom-H512", "-", yn(hom_exists(g, helical(5, 1, 2))), true);
    report.add("hom-H412", "-", yn(hom_exists(g, helical(4, 1, 2))), true);
    return report;
}

Report subdivision_power_scan(const Graph& g, int k_lo, int k_hi, int t_lo, int t_hi) {
    require(!g.any_loops(), "scan: graph must be loop-free");
    require(k_lo >= 0 && k_lo <= k_hi && t_lo >= 0 && t_lo <= t_hi, "scan: bad ranges");
    Report report;
    report.suite = "subdivision-power-scan";
    report.params.emplace_back("graph", g.name.empty() ? "input" : g.name);

    int chi_g = static_cast<int>(chromatic_number(g).value.num);
    report.add("chi-base", "-", std::to_string(chi_g), true);
    for (int k = k_lo; k <= k_hi; ++k)
        for (int t = t_lo; t <= t_hi; ++t) {
            std::string id = "k=" + std::to_string(k) + ",t=" + std::to_string(t);
            Rational ratio(2 * k + 1, 2 * t + 1);
            try {
                Graph st = subdivide(g, 2 * t);
                if (st.order() > caps().chromatic) {
                    report.cases.push_back({id, "-", "cap-exceeded", Verdict::indeterminate,
                                            "ratio=" + ratio.str()});
                    continue;
                }
                int chi = static_cast<int>(chromatic_number(power(st, 2 * k + 1)).value.num);
                report.add(id, "-",
                           "chi=" + std::to_string(chi) + ",ratio=" + ratio.str() +
                               ",equals-chi=" + yn(chi == chi_g),
                           true);
            } catch (const Error& e) {
                report.cases.push_back({id, "-", std::string("error:") + e.what(),
                                        Verdict::indeterminate, "ratio=" + ratio.str()});
            }
        }
    return report;
}

} // namespace helix
