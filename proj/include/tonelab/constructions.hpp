#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tonelab/coloring.hpp"
#include "tonelab/graph.hpp"
#include "tonelab/mols.hpp"
#include "tonelab/solver.hpp"

namespace tonelab {

/// A construction's hypothesis does not hold; `required()` is the threshold
/// the input would have to meet.
class HypothesisError : public std::invalid_argument {
 public:
  HypothesisError(const std::string& what, std::int64_t required)
      : std::invalid_argument(what), required_(required) {}
  std::int64_t required() const noexcept { return required_; }

 private:
  std::int64_t required_;
};

/// Colors vertices in index order. Vertex v reuses, for every earlier w,
/// exactly d(v,w) - 1 colors currently held by w alone (lowest first) and
/// takes fresh colors for the rest, so the palette is t*n - sum(d - 1).
/// Needs G connected and t >= (n-1)(D-1); throws HypothesisError otherwise.
ToneColoring greedy_large_t_coloring(const Graph& g, int t);

struct DecompositionCertificate {
  int proper_classes = 0;              // k-hat
  std::vector<int> proper_coloring;    // class per vertex
  std::vector<int> class_counts;       // m_i: colors used on G_i
  std::vector<int> palette_sizes;      // |C_i|
  std::int64_t bound = 0;              // k-hat + sum ceil(sqrt(2 m_i))
};

struct DecompositionResult {
  ToneColoring coloring;
  DecompositionCertificate certificate;
};

/// 2-tone coloring from a greedy proper coloring: class i gets its own
/// palette C_i and each vertex a pair from C_i, with vertices of class i at
/// distance 2 receiving different pairs (a greedy coloring of G_i).
DecompositionResult two_tone_via_decomposition(const Graph& g);

/// Vertex (a, b) of K_n^2 (index a*n + b) gets {i*n + L_i(a,b) : i < t}.
/// Throws std::invalid_argument if the family is unverified or too small.
ToneColoring mols_coloring_knn(const MolsFamily& family, int t);

/// Coloring of S_k: the large-t greedy when t >= k, the exact solver for
/// small stars, the greedy heuristic with a growing cap otherwise.
ToneColoring star_coloring(int k, int t);

/// Part i colored by the leaf sets of star_coloring(a_i, t) on a private
/// palette; parts contiguous as in build_complete_multipartite.
ToneColoring multipartite_coloring(std::span<const int> parts, int t);

/// Vertices in search order, each taking the lexicographically smallest
/// valid t-subset of {0..palette_cap-1}; nullopt when some vertex has none.
std::optional<ToneColoring> greedy_heuristic_coloring(const Graph& g, int t, int palette_cap);

}  // namespace tonelab
