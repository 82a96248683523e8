#pragma once

#include <map>
#include <string>
#include <vector>

#include "helix/graph.hpp"
#include "helix/report.hpp"

namespace helix {

using SuiteParams = std::map<std::string, std::string>;

// Suites:
//   homb           power colorability <-> helical homomorphism, iff on a corpus
//   shomb          the Schrijver-family variant of homb
//   chrom          chromatic numbers of the subset families equal m-2n+2
//   chrom-coloring explicit block coloring of a large Schrijver power
//   ocy            3-colorable (2k+1)st power of S2(g) <-> hom to C_{2k+1}
//   m2             homomorphisms survive taking k-th powers
//   dist           walk-distance bound |u\v| <= s(a-2b+2) in Schrijver graphs
//   while-sh       dominated-vertex reduction lands exactly on SH(m,n,k)
//   cirhel-partial circular chromatic spot checks
std::vector<std::string> suite_names();

// Runs a suite with the given parameters (missing keys get the
// version-controlled defaults; unknown keys are rejected).
Report verify(const std::string& suite, const SuiteParams& params);

// Data gathering for cubic-graph questions: girth, hom to C_5, 3-colorability
// of power(S2(g), 5), chi(g^3), homs into H(5,1,2) and H(4,1,2); internal
// consistency between the first two is checked when odd girth allows.
Report pentagon_probe(const Graph& g);

// Table of chi(S_{2t}(g)^(2k+1)) over the requested grid with the ratio
// (2k+1)/(2t+1); entries over the chromatic cap come back indeterminate.
Report subdivision_power_scan(const Graph& g, int k_lo, int k_hi, int t_lo, int t_hi);

} // namespace helix
