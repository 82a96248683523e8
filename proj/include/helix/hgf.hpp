#pragma once

#include <string>

#include "helix/graph.hpp"

namespace helix {

// HGF text format, bit-exact and diff-friendly:
//   # comment lines anywhere
//   graph <order> [loops]
//   v <index> <label>          (all vertices or none; label has no spaces)
//   e <i> <j>                  (i <= j, ascending, no duplicates; i == j only
//                               when the header says loops)
// LF line endings. Name and family info are not part of the format.
std::string serialize_graph(const Graph& g);
Graph parse_graph(const std::string& text);

Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

} // namespace helix
