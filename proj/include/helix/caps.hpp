#pragma once

#include <string>

namespace helix {

// Size caps for the exact algorithms. Everything here is a guard against
// accidentally feeding an exponential search an instance it cannot finish;
// exceeding a cap raises Error(cap), never a silent approximation.
//
// Overridable through the HELIX_CAPS environment variable, a comma list of
// key=value pairs, e.g.  HELIX_CAPS="iso=20,chromatic=500".
struct Caps {
    int iso = 16;        // is_isomorphic: max order per graph
    int chromatic = 400; // chromatic_number / colorability: max order
    int fractional = 20; // fractional_chromatic: max order
    int local = 12;      // local_chromatic: max order
    int ground = 40;     // max ground-set size [m] for subset families
    int family = 5000;   // max vertex count for constructed families
};

const Caps& caps();

// Parses a HELIX_CAPS-style override string (exposed for tests).
Caps parse_caps(const std::string& overrides);

} // namespace helix
