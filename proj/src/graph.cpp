#include "tonelab/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>

namespace tonelab {

Graph::Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels)
    : adjacency_(n < 0 ? throw std::invalid_argument("negative vertex count") : n),
      labels_(std::move(labels)) {
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge " + std::to_string(dup->first) + " " +
                                std::to_string(dup->second));
  }
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, static_cast<int>(nbrs.size()));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<int> Graph::components() const {
  std::vector<int> comp(order(), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < order(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : adjacency_[u]) {
        if (comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool Graph::is_connected() const {
  auto comp = components();
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

Graph Graph::induced_subgraph(std::span<const Vertex> keep) const {
  std::vector<int> index(order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= order() || index[keep[i]] != -1) {
      throw std::invalid_argument("induced_subgraph: bad or repeated vertex");
    }
    index[keep[i]] = static_cast<int>(i);
  }
  std::vector<Edge> sub;
  for (auto [u, v] : edges_) {
    if (index[u] != -1 && index[v] != -1) sub.emplace_back(index[u], index[v]);
  }
  std::vector<std::string> sub_labels;
  if (!labels_.empty()) {
    for (Vertex v : keep) sub_labels.push_back(labels_[v]);
  }
  return Graph(static_cast<int>(keep.size()), sub, std::move(sub_labels));
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  Edge target{std::min(u, v), std::max(u, v)};
  std::vector<Edge> rest;
  rest.reserve(edges_.size());
  for (const auto& e : edges_) {
    if (e != target) rest.push_back(e);
  }
  if (rest.size() == edges_.size()) throw std::invalid_argument("without_edge: no such edge");
  return Graph(order(), rest, labels_);
}

Graph build_path(int n) {
  if (n < 1) throw std::invalid_argument("build_path: n must be >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph build_star(int k) {
  if (k < 1) throw std::invalid_argument("build_star: k must be >= 1");
  std::vector<Edge> edges;
  for (Vertex leaf = 1; leaf <= k; ++leaf) edges.emplace_back(0, leaf);
  return Graph(k + 1, edges);
}

Graph build_complete(int n) {
  std::vector<int> ones(n, 1);
  return build_complete_multipartite(ones);
}

Graph build_complete_multipartite(std::span<const int> parts) {
  if (parts.empty()) throw std::invalid_argument("build_complete_multipartite: no parts");
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw std::invalid_argument("build_complete_multipartite: empty part");
    part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

namespace {

std::string coordinate_label(const Graph& g, Vertex v) {
  return g.labels().empty() ? std::to_string(v) : g.labels()[v];
}

}  // namespace

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) {
    throw std::invalid_argument("cartesian_product: factors must be nonempty");
  }
  const int nh = h.order();
  auto id = [nh](Vertex a, Vertex b) { return a * nh + b; };
  std::vector<Edge> edges;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (auto [b1, b2] : h.edges()) edges.emplace_back(id(a, b1), id(a, b2));
  }
  for (auto [a1, a2] : g.edges()) {
    for (Vertex b = 0; b < nh; ++b) edges.emplace_back(id(a1, b), id(a2, b));
  }
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(g.order()) * nh);
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = 0; b < nh; ++b) {
      // Flatten nested tuples so G^b reads (x1,...,xb).
      std::string left = coordinate_label(g, a);
      std::string right = coordinate_label(h, b);
      if (left.size() > 1 && left.front() == '(') left = left.substr(1, left.size() - 2);
      if (right.size() > 1 && right.front() == '(') right = right.substr(1, right.size() - 2);
      labels.push_back("(" + left + "," + right + ")");
    }
  }
  return Graph(g.order() * nh, edges, std::move(labels));
}

Graph cartesian_power(const Graph& g, int b) {
  if (b < 1) throw std::invalid_argument("cartesian_power: b must be >= 1");
  if (g.order() == 0) throw std::invalid_argument("cartesian_power: empty factor");
  if (b == 1) return g;
  Graph acc = g;
  for (int i = 1; i < b; ++i) acc = cartesian_product(acc, g);
  return acc;
}

Graph build_truncated_regular_tree(int delta, int depth) {
  if (delta < 2) throw std::invalid_argument("build_truncated_regular_tree: delta must be >= 2");
  if (depth < 0) throw std::invalid_argument("build_truncated_regular_tree: negative depth");
  std::vector<Edge> edges;
  std::vector<Vertex> level{0};
  int n = 1;
  for (int d = 0; d < depth; ++d) {
    std::vector<Vertex> next;
    for (Vertex parent : level) {
      const int children = (parent == 0) ? delta : delta - 1;
      for (int c = 0; c < children; ++c) {
        edges.emplace_back(parent, n);
        next.push_back(n++);
      }
    }
    level = std::move(next);
  }
  return Graph(n, edges);
}

Graph build_gnp(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("build_gnp: p must lie in [0, 1]");
  if (n < 1) throw std::invalid_argument("build_gnp: n must be >= 1");
  std::mt19937_64 rng(seed);
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double x = static_cast<double>(rng() >> 11) * kScale;
      if (x < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

std::vector<Vertex> bfs_parents(const Graph& g, Vertex root) {
  std::vector<Vertex> parent(g.order(), -1);
  std::vector<char> seen(g.order(), 0);
  std::queue<Vertex> q;
  q.push(root);
  seen[root] = 1;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = u;
        q.push(w);
      }
    }
  }
  return parent;
}

std::vector<int> bfs_levels(const Graph& g, Vertex root) {
  std::vector<int> level(g.order(), -1);
  std::queue<Vertex> q;
  q.push(root);
  level[root] = 0;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (level[w] == -1) {
        level[w] = level[u] + 1;
        q.push(w);
      }
    }
  }
  return level;
}

}  // namespace tonelab
