#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tonelab/graph.hpp"

namespace tonelab {

/// floor(sqrt(x)), exact for all 64-bit inputs.
std::uint64_t isqrt(std::uint64_t x);

enum class BoundKind { lower, exact, upper };
std::string to_string(BoundKind kind);

struct BoundReport {
  std::int64_t value = 0;
  BoundKind kind = BoundKind::lower;
  std::string source;
  /// False when the formula's hypothesis fails; `reason` then says why.
  /// A valid lower bound whose equality clause fails stays applicable and
  /// carries the failed condition in `reason`.
  bool applicable = true;
  std::string reason;
};

/// ceil((2t + 1 + sqrt(1 + 4t(t-1)delta)) / 2): the smallest c with
/// delta * C(t,2) <= C(c - t, 2). Requires t >= 2, delta >= 1.
std::int64_t degree_lower_bound(std::int64_t delta, std::int64_t t);

/// t*n - sum over unordered pairs of (d(u,v) - 1); exact when
/// t >= (n-1)(D-1). Throws std::invalid_argument for disconnected graphs.
BoundReport pairsum_bound(const Graph& g, int t);
/// Smallest t for which pairsum_bound is exact: (n-1)(D-1), at least 1.
std::int64_t pairsum_exact_threshold(const Graph& g);

/// Sum over i = 0..n-1 of max(0, t - C(i,2)).
std::int64_t path_formula(std::int64_t n, std::int64_t t);

/// ceil((sqrt(8 delta + 1) + 5) / 2).
std::int64_t tree2tone_formula(std::int64_t delta);

struct MultipartiteBound {
  double real_sum = 0.0;  // sum of sqrt(t(t-1) a_i)
  std::vector<std::int64_t> per_part;  // smallest c with C(c,2) >= C(t,2) a_i
  std::int64_t integer_sum = 0;
};
MultipartiteBound multipartite_lower(std::span<const int> parts, int t);

/// (k+1)t - C(k,2) when t >= k; otherwise not applicable.
BoundReport star_formula(std::int64_t k, std::int64_t t);

/// Every formula that applies to `g`, one report per formula. Bounds needing
/// a connected graph are taken per component and maximized.
std::vector<BoundReport> bound_table(const Graph& g, int t);

}  // namespace tonelab
