#include "tonelab/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "tonelab/bounds.hpp"
#include "tonelab/distances.hpp"

namespace tonelab {

namespace {

void check_valid(const Graph& g, const ToneColoring& c, const char* who) {
  if (!verify(g, c).valid) throw std::logic_error(std::string(who) + " produced an invalid coloring");
}

/// Smallest x >= 0 with x*x >= v.
std::int64_t ceil_sqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(v)));
  return r * r == v ? r : r + 1;
}

/// Greedy proper coloring of `vertices` (largest degree first) under the
/// conflict test `conflict(u, v)`. Returns the class per position.
template <typename Conflict>
std::vector<int> greedy_classes(std::vector<Vertex> vertices, const std::vector<int>& degree,
                                Conflict conflict, int& count) {
  std::vector<int> pos_of(vertices.size());
  std::iota(pos_of.begin(), pos_of.end(), 0);
  std::stable_sort(pos_of.begin(), pos_of.end(),
                   [&](int a, int b) { return degree[a] > degree[b]; });
  std::vector<int> cls(vertices.size(), -1);
  count = 0;
  std::vector<char> taken;
  for (int p : pos_of) {
    taken.assign(count + 1, 0);
    for (std::size_t q = 0; q < vertices.size(); ++q) {
      if (cls[q] >= 0 && conflict(vertices[p], vertices[q])) taken[cls[q]] = 1;
    }
    int c = 0;
    while (taken[c]) ++c;
    cls[p] = c;
    count = std::max(count, c + 1);
  }
  return cls;
}

}  // namespace

ToneColoring greedy_large_t_coloring(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  const int n = g.order();
  if (n == 0) return ToneColoring(t, 0, {});
  if (!g.is_connected()) throw std::invalid_argument("large-t construction needs a connected graph");
  const std::int64_t need = pairsum_exact_threshold(g);
  if (t < need) {
    throw HypothesisError("large-t construction needs t >= (n-1)(D-1) = " + std::to_string(need),
                          need);
  }
  const auto dist = all_pairs_distances(g);
  std::vector<ColorSet> sets(n);
  std::vector<int> holders;  // number of vertices holding each color
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = 0; w < v; ++w) {
      int want = dist.at(v, w) - 1;
      for (Color c : sets[w]) {
        if (want == 0) break;
        if (holders[c] == 1) {
          sets[v].push_back(c);
          ++holders[c];
          --want;
        }
      }
      if (want > 0) throw std::logic_error("large-t construction ran out of private colors");
    }
    while (static_cast<int>(sets[v].size()) < t) {
      sets[v].push_back(static_cast<Color>(holders.size()));
      holders.push_back(1);
    }
    std::sort(sets[v].begin(), sets[v].end());
  }
  ToneColoring out(t, static_cast<int>(holders.size()), std::move(sets));
  check_valid(g, out, "large-t construction");
  return out;
}

DecompositionResult two_tone_via_decomposition(const Graph& g) {
  const int n = g.order();
  DecompositionCertificate cert;
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  cert.proper_coloring = greedy_classes(
      all, deg, [&](Vertex u, Vertex v) { return g.adjacent(u, v); }, cert.proper_classes);

  const auto dist = all_pairs_distances_capped(g, 2);
  std::vector<ColorSet> sets(n);
  int offset = 0;
  cert.bound = cert.proper_classes;
  for (int i = 0; i < cert.proper_classes; ++i) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v) {
      if (cert.proper_coloring[v] == i) members.push_back(v);
    }
    // G_i: members at distance exactly 2.
    std::vector<int> gdeg(members.size(), 0);
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = 0; b < members.size(); ++b) {
        if (a != b && dist.at(members[a], members[b]) == 2) ++gdeg[a];
      }
    }
    int m = 0;
    auto cls = greedy_classes(
        members, gdeg, [&](Vertex u, Vertex v) { return dist.at(u, v) == 2; }, m);
    const std::int64_t root = ceil_sqrt(2 * static_cast<std::int64_t>(m));
    int size = static_cast<int>(1 + root);
    while (static_cast<std::int64_t>(size) * (size - 1) / 2 < m) ++size;
    cert.class_counts.push_back(m);
    cert.palette_sizes.push_back(size);
    cert.bound += root;
    // G_i color j takes the j-th pair of C_i in lexicographic order.
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < size && static_cast<int>(pairs.size()) < m; ++a) {
      for (int b = a + 1; b < size && static_cast<int>(pairs.size()) < m; ++b) pairs.push_back({a, b});
    }
    for (std::size_t p = 0; p < members.size(); ++p) {
      const auto [a, b] = pairs[cls[p]];
      sets[members[p]] = {offset + a, offset + b};
    }
    offset += size;
  }
  DecompositionResult out{ToneColoring(2, offset, std::move(sets)), std::move(cert)};
  check_valid(g, out.coloring, "decomposition construction");
  return out;
}

ToneColoring mols_coloring_knn(const MolsFamily& family, int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  if (!family.verified()) throw std::invalid_argument("MOLS family is not pairwise orthogonal");
  if (family.size() < t) {
    throw std::invalid_argument("need " + std::to_string(t) + " MOLS of order " +
                                std::to_string(family.order()) + ", family has " +
                                std::to_string(family.size()));
  }
  const int n = family.order();
  std::vector<ColorSet> sets(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto& s = sets[a * n + b];
      for (int i = 0; i < t; ++i) s.push_back(i * n + family.square(i).at(a, b));
    }
  }
  ToneColoring out(t, t * n, std::move(sets));
  check_valid(cartesian_power(build_complete(n), 2), out, "MOLS construction");
  return out;
}

ToneColoring star_coloring(int k, int t) {
  if (k < 1 || t < 1) throw std::invalid_argument("star_coloring needs k >= 1, t >= 1");
  const Graph star = build_star(k);
  if (t >= k) return greedy_large_t_coloring(star, t);
  if (k <= 12 && t <= 8) {
    auto res = tau_exact(star, t, SearchBudget{50'000'000, 60'000});
    if (res.status == SolveStatus::exact) return *res.witness;
  }
  std::int64_t cap = t >= 2 ? degree_lower_bound(k, t) : t + 1;
  while (true) {
    if (auto c = greedy_heuristic_coloring(star, t, static_cast<int>(cap))) return *c;
    ++cap;
  }
}

ToneColoring multipartite_coloring(std::span<const int> parts, int t) {
  if (parts.empty()) throw std::invalid_argument("multipartite_coloring needs at least one part");
  std::vector<ColorSet> sets;
  int offset = 0;
  for (int a : parts) {
    const ToneColoring star = star_coloring(a, t);
    std::vector<Vertex> leaves(a);
    std::iota(leaves.begin(), leaves.end(), 1);
    const ToneColoring part = compact_palette(restrict_to(star, leaves));
    for (const auto& s : part.sets()) {
      ColorSet shifted = s;
      for (auto& c : shifted) c += offset;
      sets.push_back(std::move(shifted));
    }
    offset += part.palette_size();
  }
  ToneColoring out(t, offset, std::move(sets));
  check_valid(build_complete_multipartite(parts), out, "multipartite construction");
  return out;
}

std::optional<ToneColoring> greedy_heuristic_coloring(const Graph& g, int t, int palette_cap) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  if (palette_cap < t) throw std::invalid_argument("palette_cap must be >= t");
  const int n = g.order();
  const auto dist = all_pairs_distances_capped(g, t);
  const auto order = search_order(g);
  std::vector<ColorSet> sets(n);
  std::vector<char> done(n, 0);
  std::vector<std::vector<int>> holders(palette_cap);  // indices into `near`
  for (Vertex v : order) {
    struct Near {
      Vertex u;
      int room;  // colors v may still share with u
    };
    std::vector<Near> near;
    for (auto& h : holders) h.clear();
    for (Vertex u = 0; u < n; ++u) {
      if (!done[u] || dist.beyond_cap(u, v)) continue;
      const int idx = static_cast<int>(near.size());
      near.push_back({u, dist.at(u, v) - 1});
      for (Color c : sets[u]) holders[c].push_back(idx);
    }
    ColorSet chosen;
    // Lexicographic DFS: extend with the smallest admissible color first.
    auto extend = [&](auto&& self, int from) -> bool {
      if (static_cast<int>(chosen.size()) == t) return true;
      for (int c = from; c <= palette_cap - (t - static_cast<int>(chosen.size())); ++c) {
        const auto& hs = holders[c];
        if (std::any_of(hs.begin(), hs.end(), [&](int i) { return near[i].room == 0; })) continue;
        for (int i : hs) --near[i].room;
        chosen.push_back(c);
        if (self(self, c + 1)) return true;
        chosen.pop_back();
        for (int i : hs) ++near[i].room;
      }
      return false;
    };
    if (!extend(extend, 0)) return std::nullopt;
    sets[v] = chosen;
    done[v] = 1;
  }
  ToneColoring out(t, palette_cap, std::move(sets));
  check_valid(g, out, "greedy heuristic");
  return out;
}

}  // namespace tonelab
