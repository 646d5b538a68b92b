#pragma once

#include <cstdint>
#include <vector>

#include "tonelab/graph.hpp"

namespace tonelab {

/// All-pairs distances truncated at `cap`. Entries beyond the cap, including
/// pairs in different components, hold `sentinel() == cap + 1`; this keeps the
/// "distance greater than cap" case an ordinary integer comparison.
class DistMatrix {
 public:
  DistMatrix() = default;
  DistMatrix(int n, int cap);

  int order() const noexcept { return n_; }
  int cap() const noexcept { return cap_; }
  int sentinel() const noexcept { return cap_ + 1; }

  int at(Vertex u, Vertex v) const noexcept {
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }
  bool beyond_cap(Vertex u, Vertex v) const noexcept { return at(u, v) > cap_; }

  void set(Vertex u, Vertex v, int d) noexcept {
    d_[static_cast<std::size_t>(u) * n_ + v] = d;
  }

 private:
  int n_ = 0;
  int cap_ = 0;
  std::vector<std::int32_t> d_;
};

/// BFS from every vertex, truncated at depth `cap` (cap >= 1).
DistMatrix all_pairs_distances_capped(const Graph& g, int cap);

/// Exact distances for a connected graph (cap = n); convenience for the
/// pair-sum formulas.
DistMatrix all_pairs_distances(const Graph& g);

/// Largest finite distance; -1 if the graph is disconnected.
int diameter(const Graph& g);
int diameter(const DistMatrix& d);

}  // namespace tonelab
