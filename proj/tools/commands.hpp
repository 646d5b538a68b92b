#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tonelab/graph.hpp"

namespace tonelab::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kUsage = 2, kBudget = 3 };

/// Runs one tonelab command line. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Builds a named family from `NAME PARAMS...`:
///   path N | star K | complete N | multipartite A,B,... | tree DELTA DEPTH |
///   clique-power N B | hypercube B | gnp N P SEED
/// Throws std::invalid_argument on unknown names or bad parameters.
Graph family_graph(const std::vector<std::string>& words);

/// Worker count from TONELAB_THREADS; 1 when unset or malformed.
int threads_from_env();

}  // namespace tonelab::cli
