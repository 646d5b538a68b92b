#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tonelab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable once constructed. The constructor rejects self-loops, duplicate
/// edges and out-of-range endpoints, so every Graph value satisfies the
/// simple-graph invariants. Edges are stored normalized (u < v) and sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, std::span<const Edge> edges = {},
                 std::vector<std::string> labels = {});

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  int max_degree() const noexcept;
  bool adjacent(Vertex u, Vertex v) const;

  /// Per-vertex display strings; empty when the builder records none.
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool is_connected() const;
  /// Component id per vertex, numbered in order of lowest member.
  std::vector<int> components() const;

  /// Subgraph induced by `keep`; vertex i of the result is keep[i].
  Graph induced_subgraph(std::span<const Vertex> keep) const;
  Graph without_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

// Named families. Canonical numbering: path order; star head = 0;
// multipartite parts contiguous; products row-major in coordinates.
Graph build_path(int n);
Graph build_star(int k);
Graph build_complete(int n);
Graph build_complete_multipartite(std::span<const int> parts);
Graph cartesian_product(const Graph& g, const Graph& h);
Graph cartesian_power(const Graph& g, int b);
/// Root 0 has `delta` children, every other internal vertex `delta - 1`;
/// vertices numbered level by level, children of a vertex contiguous.
Graph build_truncated_regular_tree(int delta, int depth);
/// G(n, p) with a seeded std::mt19937_64 stream. Pairs (u, v), u < v, are
/// visited in lexicographic order and pair u v is an edge iff the top 53 bits
/// of the next draw, as a fraction of 2^53, are below p. Reproducible across
/// platforms because mt19937_64 output is fixed by the standard.
Graph build_gnp(int n, double p, std::uint64_t seed);

/// Level of each vertex in a rooted truncated tree (BFS depth from 0).
std::vector<int> bfs_levels(const Graph& g, Vertex root);

/// Parent of each vertex in the BFS tree from `root`; -1 for the root and
/// for unreachable vertices.
std::vector<Vertex> bfs_parents(const Graph& g, Vertex root);

}  // namespace tonelab
