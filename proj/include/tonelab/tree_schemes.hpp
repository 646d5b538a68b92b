#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tonelab/coloring.hpp"
#include "tonelab/graph.hpp"

namespace tonelab {

enum class TreeScheme { T4_3tone, T7_3tone_fano, T3_4tone, T4_4tone };

/// Accepts "T4_3tone", "T7_3tone", "T7_3tone_fano", "T3_4tone", "T4_4tone".
/// Throws std::invalid_argument for anything else.
TreeScheme parse_tree_scheme(std::string_view name);
std::string to_string(TreeScheme scheme);

struct TreeSchemeInfo {
  int delta;
  int t;
  int palette;
};
TreeSchemeInfo scheme_info(TreeScheme scheme);

/// Shared and private colors among N(center), recorded when the 4-tone
/// schemes color the center's grandchildren. members[0..] are u_1, u_2, ...
/// (children ascending, then the parent).
struct NeighborhoodRecord {
  Vertex center = -1;
  std::vector<Vertex> members;
  std::vector<std::vector<Color>> shared;  // shared[k][j] = c_{k,j}; -1 on the diagonal
  std::vector<ColorSet> private_colors;    // c'_k ascending
};

struct TreeSchemeState {
  TreeScheme scheme;
  Graph tree;
  ToneColoring coloring;
  std::vector<Vertex> parent;  // -1 for the root
  std::vector<NeighborhoodRecord> records;
};

/// The scheme's level-by-level coloring of build_truncated_regular_tree
/// (delta, depth). Throws std::logic_error if an inductive invariant the
/// recursion relies on fails to hold.
TreeSchemeState tree_scheme_coloring(TreeScheme scheme, int depth);

/// True iff every record agrees with the intersections of the actual sets.
bool bookkeeping_consistent(const TreeSchemeState& state);

struct ConditionReport {
  bool a = true;  // adjacent vertices share no colors
  bool b = true;  // pairs in each N(x) share exactly one color, none on three
  bool c = true;  // distance-3 pairs share 2 colors (Delta 3) or 1..2 (Delta 4)
  bool d = true;  // distance-4 pairs have different sets
  std::string first_failure;
  bool all() const noexcept { return a && b && c && d; }
};

/// Structural conditions of the 4-tone schemes. `c_min`..`c_max` is the
/// allowed shared count at distance 3.
ConditionReport check_tone4_conditions(const Graph& tree, const ToneColoring& coloring, int c_min,
                                       int c_max);
/// Same, with the distance-3 range the scheme states.
ConditionReport check_tone4_conditions(const TreeSchemeState& state);

}  // namespace tonelab
