#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "helix/graph.hpp"

namespace helix {

// Tiny explicit samplers on top of a fixed-algorithm engine so corpora are
// reproducible byte-for-byte across runs.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    bool chance(std::uint64_t numer, std::uint64_t denom) { return below(denom) < numer; }
};

enum class CorpusKind { gnp_odd_girth, random_cubic, family_sweep };

struct CorpusSpec {
    CorpusKind kind = CorpusKind::gnp_odd_girth;
    int n_min = 4, n_max = 10;     // vertex count range (cubic: even values)
    int odd_girth_floor = 3;       // gnp: resample until odd girth >= floor
    int edge_percent = 22;         // gnp: edge probability in percent
    std::uint64_t seed = 1;
    int count = 10;                // number of graphs
    int max_order = 200;           // family_sweep: order bound
};

// Deterministic function of the spec; throws Error(check) when the rejection
// budget runs out (bounds too tight).
std::vector<Graph> generate_corpus(const CorpusSpec& spec);

std::string corpus_descriptor(const CorpusSpec& spec, int index);

} // namespace helix
