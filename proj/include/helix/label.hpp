#pragma once

#include <string>
#include <variant>
#include <vector>

namespace helix {

// Structured vertex labels. Subset-family graphs carry tuples of integer
// sets over a 1-based ground set; everything else uses short text labels.
using IntSet = std::vector<int>;     // elements ascending, 1-based
using SetTuple = std::vector<IntSet>;
using Label = std::variant<SetTuple, std::string>;

// Lexicographic order on set tuples: sets compared as ascending element
// sequences, tuples as sequences of sets. Fixes vertex numbering in every
// constructed family.
bool set_tuple_less(const SetTuple& a, const SetTuple& b);

// Rendering used by labels and the graph text format: no spaces,
// e.g. ({1,3},{2,4,5,6,7}).
std::string set_tuple_to_string(const SetTuple& t);
std::string label_to_string(const Label& l);

// Parses a label token; tokens starting with '(' must be well-formed set
// tuples, anything else is kept as text.
Label parse_label(const std::string& token);

bool label_less(const Label& a, const Label& b);

} // namespace helix
