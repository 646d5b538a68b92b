#include "tonelab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tonelab/distances.hpp"

namespace tonelab {

std::uint64_t isqrt(std::uint64_t x) {
  if (x < 2) return x;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  // The floating estimate can be off by one near perfect squares; settle it.
  while (r > 0 && (r > x / r)) --r;
  while ((r + 1) <= x / (r + 1)) ++r;
  return r;
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::lower: return "lower";
    case BoundKind::exact: return "exact";
    case BoundKind::upper: return "upper";
  }
  return "?";
}

namespace {

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

/// Smallest c >= 0 with C(c, 2) >= target.
std::int64_t min_pair_palette(std::int64_t target) {
  if (target <= 0) return 0;
  // C(c,2) >= target  <=>  c >= (1 + sqrt(1 + 8 target)) / 2.
  auto c = static_cast<std::int64_t>((1 + isqrt(static_cast<std::uint64_t>(1 + 8 * target))) / 2);
  while (choose2(c) < target) ++c;
  while (c > 0 && choose2(c - 1) >= target) --c;
  return c;
}

struct Component {
  Graph graph;
  std::vector<Vertex> vertices;
};

std::vector<Component> split_components(const Graph& g) {
  auto comp = g.components();
  int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<Vertex>> members(count);
  for (Vertex v = 0; v < g.order(); ++v) members[comp[v]].push_back(v);
  std::vector<Component> out;
  for (auto& m : members) out.push_back({g.induced_subgraph(m), m});
  return out;
}

bool is_path_graph(const Graph& g) {
  return g.is_connected() && g.num_edges() == g.order() - 1 && g.max_degree() <= 2;
}

bool is_tree(const Graph& g) { return g.is_connected() && g.num_edges() == g.order() - 1; }

/// Number of leaves when g is a star S_k with k >= 1, else 0.
int star_leaves(const Graph& g) {
  if (!is_tree(g) || g.order() < 2) return 0;
  return g.max_degree() == g.order() - 1 ? g.order() - 1 : 0;
}

}  // namespace

std::int64_t degree_lower_bound(std::int64_t delta, std::int64_t t) {
  if (t < 2) throw std::invalid_argument("degree_lower_bound needs t >= 2");
  if (delta < 1) throw std::invalid_argument("degree_lower_bound needs delta >= 1");
  // Smallest c with 2c - 2t - 1 >= sqrt(1 + 4t(t-1)delta), found by an exact
  // integer square root and a local correction.
  const auto disc = static_cast<std::uint64_t>(1 + 4 * t * (t - 1) * delta);
  const auto root = isqrt(disc);
  auto satisfies = [&](std::int64_t c) {
    const std::int64_t lhs = 2 * c - 2 * t - 1;
    return lhs >= 0 && static_cast<std::uint64_t>(lhs) * static_cast<std::uint64_t>(lhs) >= disc;
  };
  std::int64_t c = (2 * t + 1 + static_cast<std::int64_t>(root)) / 2;
  while (!satisfies(c)) ++c;
  while (satisfies(c - 1)) --c;
  return c;
}

std::int64_t pairsum_exact_threshold(const Graph& g) {
  const int d = diameter(g);
  if (d < 0) throw std::invalid_argument("pair-sum threshold needs a connected graph");
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(g.order() - 1) * (d - 1));
}

BoundReport pairsum_bound(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("pairsum_bound needs t >= 1");
  if (!g.is_connected()) throw std::invalid_argument("pairsum_bound needs a connected graph");
  const auto dist = all_pairs_distances(g);
  std::int64_t excess = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) excess += dist.at(u, v) - 1;
  }
  const int d = diameter(dist);
  const std::int64_t threshold = static_cast<std::int64_t>(g.order() - 1) * (d - 1);
  BoundReport r;
  r.source = "pair-sum";
  r.value = static_cast<std::int64_t>(t) * g.order() - excess;
  if (t >= threshold) {
    r.kind = BoundKind::exact;
  } else {
    r.kind = BoundKind::lower;
    r.reason = "equality needs t >= (n-1)(D-1) = " + std::to_string(threshold);
  }
  return r;
}

std::int64_t path_formula(std::int64_t n, std::int64_t t) {
  if (n < 1 || t < 1) throw std::invalid_argument("path_formula needs n >= 1, t >= 1");
  std::int64_t total = 0;
  for (std::int64_t i = 0; i < n; ++i) total += std::max<std::int64_t>(0, t - choose2(i));
  return total;
}

std::int64_t tree2tone_formula(std::int64_t delta) {
  if (delta < 1) throw std::invalid_argument("tree2tone_formula needs delta >= 1");
  const auto disc = static_cast<std::uint64_t>(8 * delta + 1);
  const auto root = isqrt(disc);
  // ceil((sqrt(disc) + 5) / 2): smallest c with 2c - 5 >= sqrt(disc).
  auto satisfies = [&](std::int64_t c) {
    const std::int64_t lhs = 2 * c - 5;
    return lhs >= 0 && static_cast<std::uint64_t>(lhs) * static_cast<std::uint64_t>(lhs) >= disc;
  };
  std::int64_t c = (static_cast<std::int64_t>(root) + 5) / 2;
  while (!satisfies(c)) ++c;
  while (satisfies(c - 1)) --c;
  return c;
}

MultipartiteBound multipartite_lower(std::span<const int> parts, int t) {
  if (t < 2) throw std::invalid_argument("multipartite_lower needs t >= 2");
  MultipartiteBound b;
  for (int a : parts) {
    if (a < 1) throw std::invalid_argument("multipartite_lower: part sizes must be >= 1");
    b.real_sum += std::sqrt(static_cast<double>(t) * (t - 1) * a);
    // Within a part every pair is at distance 2, so no color pair repeats.
    const std::int64_t c = std::max<std::int64_t>(t, min_pair_palette(choose2(t) * a));
    b.per_part.push_back(c);
    b.integer_sum += c;
  }
  return b;
}

BoundReport star_formula(std::int64_t k, std::int64_t t) {
  BoundReport r;
  r.source = "star";
  r.kind = BoundKind::exact;
  if (k < 1 || t < 1) {
    r.applicable = false;
    r.reason = "needs k >= 1 and t >= 1";
    return r;
  }
  if (t < k) {
    r.applicable = false;
    r.reason = "needs t >= k = " + std::to_string(k);
    return r;
  }
  r.value = (k + 1) * t - choose2(k);
  return r;
}

std::vector<BoundReport> bound_table(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("bound_table needs t >= 1");
  std::vector<BoundReport> rows;
  const auto comps = split_components(g);
  const int delta = g.max_degree();

  BoundReport degree{0, BoundKind::lower, "degree", true, ""};
  if (t < 2) {
    degree.applicable = false;
    degree.reason = "needs t >= 2";
  } else if (delta < 1) {
    degree.applicable = false;
    degree.reason = "needs an edge";
  } else {
    degree.value = degree_lower_bound(delta, t);
  }
  rows.push_back(degree);

  BoundReport pair{0, BoundKind::exact, "pair-sum", true, ""};
  for (const auto& c : comps) {
    auto r = pairsum_bound(c.graph, t);
    pair.value = std::max(pair.value, r.value);
    if (r.kind != BoundKind::exact) {
      pair.kind = BoundKind::lower;
      if (pair.reason.empty()) pair.reason = r.reason;
    }
  }
  rows.push_back(pair);

  BoundReport path{0, BoundKind::exact, "path", true, ""};
  BoundReport tree{0, BoundKind::exact, "tree-2-tone", true, ""};
  for (const auto& c : comps) {
    if (path.applicable && is_path_graph(c.graph)) {
      path.value = std::max(path.value, path_formula(c.graph.order(), t));
    } else if (path.applicable) {
      path.applicable = false;
      path.reason = "not a disjoint union of paths";
    }
    if (tree.applicable && is_tree(c.graph)) {
      const std::int64_t v = c.graph.order() == 1 ? 2 : tree2tone_formula(c.graph.max_degree());
      tree.value = std::max(tree.value, v);
    } else if (tree.applicable) {
      tree.applicable = false;
      tree.reason = "not a forest";
    }
  }
  if (t != 2 && tree.applicable) {
    tree.applicable = false;
    tree.reason = "needs t = 2";
  }
  rows.push_back(path);
  rows.push_back(tree);

  BoundReport star{0, BoundKind::exact, "star", false, ""};
  if (int k = comps.size() == 1 ? star_leaves(g) : 0; k > 0) {
    star = star_formula(k, t);
  } else {
    star.reason = "not a star";
  }
  rows.push_back(star);

  rows.push_back({static_cast<std::int64_t>(t) * g.order(), BoundKind::upper, "disjoint-sets",
                  true, ""});
  return rows;
}

}  // namespace tonelab
