#pragma once

#include <iosfwd>
#include <string>

#include "tonelab/graph.hpp"

namespace tonelab {

// Text format: first record `n m`, then m records `u v` (0-based).
// `#` starts a comment running to end of line; blank lines are skipped.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace tonelab
