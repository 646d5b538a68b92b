#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "tonelab/coloring.hpp"
#include "tonelab/graph.hpp"

namespace tonelab {

struct SearchBudget {
  static constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

  std::uint64_t max_nodes = 2'000'000'000;
  std::uint64_t max_millis = 600'000;

  /// Throws std::invalid_argument when both caps are unlimited.
  void validate() const;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t wall_millis = 0;
  bool budget_exhausted = false;
};

enum class Verdict { feasible, infeasible, timeout };
std::string to_string(Verdict v);

struct FeasibilityResult {
  Verdict verdict = Verdict::timeout;
  std::optional<ToneColoring> witness;  // present iff feasible
  SearchStats stats;
};

/// Largest palette the search can represent (colors live in a ColorMask).
inline constexpr int kMaxSearchPalette = kMaskWidth;
/// Largest graph the search handles (holder sets are 64-bit vertex masks).
inline constexpr int kMaxSearchVertices = 64;

/// Decides whether G has a t-tone coloring with colors {0..k-1}.
/// `threads` > 1 splits the first branching level across workers; the
/// verdict and witness are merged in branch order.
FeasibilityResult feasible(const Graph& g, int t, int k, const SearchBudget& budget = {},
                           int threads = 1);

enum class SolveStatus { exact, lower_only, timeout };
std::string to_string(SolveStatus s);

struct SolveOutcome {
  SolveStatus status = SolveStatus::timeout;
  std::int64_t lower = 0;  // proven: tau_t(G) >= lower
  std::int64_t upper = 0;  // witnessed: tau_t(G) <= upper
  std::optional<ToneColoring> witness;  // achieves `upper`
  SearchStats stats;

  /// The exact value; throws std::logic_error unless status is exact.
  std::int64_t value() const;
};

/// tau_t(G). Components are solved separately and combined by maximum.
/// For each component k starts at the best closed-form lower bound and
/// increases until the search finds a coloring. `lower_only` is reported when
/// the next k would exceed kMaxSearchPalette or the component exceeds
/// kMaxSearchVertices.
SolveOutcome tau_exact(const Graph& g, int t, const SearchBudget& budget = {}, int threads = 1);

/// Independent oracle: plain enumeration of t-subsets per vertex in index
/// order with early pair rejection, no symmetry breaking. Returns the
/// smallest feasible k in [t, k_max], if any. Intended for n <= 5, k <= 9.
std::optional<int> brute_force_tau(const Graph& g, int t, int k_max);

/// Vertex order used by the search: descending degree, ties broken by BFS
/// rank from a maximum-degree vertex (each further component restarts BFS
/// at its own lowest-index maximum-degree vertex).
std::vector<Vertex> search_order(const Graph& g);

/// Size of a clique found greedily (largest-degree-first seeds).
int greedy_clique_size(const Graph& g);

/// Best closed-form lower bound for a connected graph: max of t * clique,
/// the degree bound and the pair-sum bound.
std::int64_t solver_lower_bound(const Graph& g, int t);

}  // namespace tonelab
