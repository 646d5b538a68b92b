#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tonelab/coloring.hpp"
#include "tonelab/graph.hpp"

namespace tonelab {

/// Clauses over variables 1..num_vars; a negative literal is a negation.
struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  int new_var() { return ++num_vars; }
  void add(std::vector<int> clause) { clauses.push_back(std::move(clause)); }
};

/// Variable for "vertex v has color c" in the encoding of (G, t, k).
inline int color_var(Vertex v, Color c, int k) { return v * k + c + 1; }

/// Adds sum(lits) <= bound as a sequential counter.
void add_at_most(Cnf& cnf, std::span<const int> lits, int bound);
/// Adds sum(lits) >= bound (at most |lits| - bound negations true).
void add_at_least(Cnf& cnf, std::span<const int> lits, int bound);

/// The decision instance "G has a t-tone coloring from k colors": exactly t
/// color variables per vertex, and for each pair at distance d <= t at most
/// d - 1 colors shared (d = 1 as direct binary clauses, otherwise through
/// one auxiliary "both have c" variable per color and a counter).
Cnf encode_tone_coloring(const Graph& g, int t, int k);

/// Coloring read off the color variables of a satisfying assignment;
/// model[var] for var in 1..num_vars.
ToneColoring decode_assignment(const Graph& g, int t, int k, const std::vector<bool>& model);

/// DIMACS CNF text; each comment line is emitted as `c <text>`.
void write_dimacs(std::ostream& out, const Cnf& cnf, std::span<const std::string> comments = {});
void write_dimacs_file(const std::string& path, const Cnf& cnf,
                       std::span<const std::string> comments = {});

}  // namespace tonelab
