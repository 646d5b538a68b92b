#include "tonelab/distances.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace tonelab {

DistMatrix::DistMatrix(int n, int cap)
    : n_(n), cap_(cap), d_(static_cast<std::size_t>(n) * n, cap + 1) {
  for (Vertex v = 0; v < n; ++v) set(v, v, 0);
}

DistMatrix all_pairs_distances_capped(const Graph& g, int cap) {
  if (cap < 1) throw std::invalid_argument("all_pairs_distances_capped: cap must be >= 1");
  const int n = g.order();
  DistMatrix d(n, cap);
  std::vector<Vertex> frontier, next;
  std::vector<int> seen(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    frontier.assign(1, s);
    seen[s] = s;
    for (int depth = 1; depth <= cap && !frontier.empty(); ++depth) {
      next.clear();
      for (Vertex u : frontier) {
        for (Vertex w : g.neighbors(u)) {
          if (seen[w] == s) continue;
          seen[w] = s;
          d.set(s, w, depth);
          next.push_back(w);
        }
      }
      std::swap(frontier, next);
    }
  }
  return d;
}

DistMatrix all_pairs_distances(const Graph& g) {
  return all_pairs_distances_capped(g, std::max(1, g.order()));
}

int diameter(const DistMatrix& d) {
  int best = 0;
  for (Vertex u = 0; u < d.order(); ++u) {
    for (Vertex v = u + 1; v < d.order(); ++v) {
      if (d.beyond_cap(u, v)) return -1;
      best = std::max(best, d.at(u, v));
    }
  }
  return best;
}

int diameter(const Graph& g) { return diameter(all_pairs_distances(g)); }

}  // namespace tonelab
