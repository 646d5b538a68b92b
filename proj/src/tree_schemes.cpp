#include "tonelab/tree_schemes.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "tonelab/distances.hpp"

namespace tonelab {

TreeScheme parse_tree_scheme(std::string_view name) {
  if (name == "T4_3tone") return TreeScheme::T4_3tone;
  if (name == "T7_3tone" || name == "T7_3tone_fano") return TreeScheme::T7_3tone_fano;
  if (name == "T3_4tone") return TreeScheme::T3_4tone;
  if (name == "T4_4tone") return TreeScheme::T4_4tone;
  throw std::invalid_argument("unknown tree scheme '" + std::string(name) +
                              "' (expected T4_3tone, T7_3tone, T3_4tone or T4_4tone)");
}

std::string to_string(TreeScheme scheme) {
  switch (scheme) {
    case TreeScheme::T4_3tone: return "T4_3tone";
    case TreeScheme::T7_3tone_fano: return "T7_3tone_fano";
    case TreeScheme::T3_4tone: return "T3_4tone";
    case TreeScheme::T4_4tone: return "T4_4tone";
  }
  return "?";
}

TreeSchemeInfo scheme_info(TreeScheme scheme) {
  switch (scheme) {
    case TreeScheme::T4_3tone: return {4, 3, 9};
    case TreeScheme::T7_3tone_fano: return {7, 3, 10};
    case TreeScheme::T3_4tone: return {3, 4, 13};
    case TreeScheme::T4_4tone: return {4, 4, 14};
  }
  throw std::invalid_argument("unknown tree scheme");
}

namespace {

ColorSet sorted(ColorSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

ColorSet intersect(const ColorSet& a, const ColorSet& b) {
  ColorSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Palette colors outside every set in `used`, ascending.
ColorSet complement(int palette, std::initializer_list<const ColorSet*> used) {
  ColorSet out;
  for (Color c = 0; c < palette; ++c) {
    bool hit = std::any_of(used.begin(), used.end(), [c](const ColorSet* s) {
      return std::binary_search(s->begin(), s->end(), c);
    });
    if (!hit) out.push_back(c);
  }
  return out;
}

struct Layout {
  Graph tree;
  std::vector<Vertex> parent;
  std::vector<int> level;
  std::vector<std::vector<Vertex>> children;
};

Layout make_layout(int delta, int depth) {
  Layout l;
  l.tree = build_truncated_regular_tree(delta, depth);
  l.parent = bfs_parents(l.tree, 0);
  l.level = bfs_levels(l.tree, 0);
  l.children.resize(l.tree.order());
  for (Vertex v = 1; v < l.tree.order(); ++v) l.children[l.parent[v]].push_back(v);
  return l;
}

// Seed sets are transcribed digit by digit; digits() sorts them.
ColorSet digits(std::initializer_list<int> ds) { return sorted(ColorSet(ds)); }

void color_t4_3tone(const Layout& l, std::vector<ColorSet>& sets) {
  // Colors 1..9 of the pattern are stored as 0..8.
  auto shift = [](ColorSet s) {
    for (auto& c : s) c -= 1;
    return sorted(s);
  };
  sets[0] = shift({1, 2, 3});
  const std::array<ColorSet, 4> first{shift({4, 5, 6}), shift({4, 7, 8}), shift({9, 5, 7}),
                                      shift({9, 6, 8})};
  for (std::size_t i = 0; i < l.children[0].size(); ++i) sets[l.children[0][i]] = first[i];
  // With v = (123) and parent u = (456), the children are (478)(957)(968)
  // under the relabeling 123 -> v, 456 -> u, 789 -> the remaining colors.
  const std::array<std::array<int, 3>, 3> pattern{{{4, 7, 8}, {9, 5, 7}, {9, 6, 8}}};
  for (Vertex v = 1; v < l.tree.order(); ++v) {
    if (l.children[v].empty()) continue;
    const ColorSet& vs = sets[v];
    const ColorSet& us = sets[l.parent[v]];
    const ColorSet rest = complement(9, {&vs, &us});
    std::array<Color, 10> pi{};
    for (int i = 0; i < 3; ++i) {
      pi[1 + i] = vs[i];
      pi[4 + i] = us[i];
      pi[7 + i] = rest[i];
    }
    for (std::size_t i = 0; i < l.children[v].size(); ++i) {
      const auto& p = pattern[i];
      sets[l.children[v][i]] = sorted({pi[p[0]], pi[p[1]], pi[p[2]]});
    }
  }
}

void color_t7_fano(const Layout& l, std::vector<ColorSet>& sets) {
  sets[0] = digits({1, 2, 3});
  const std::array<ColorSet, 7> first{digits({4, 5, 6}), digits({4, 7, 8}), digits({5, 7, 9}),
                                      digits({6, 8, 9}), digits({0, 5, 8}), digits({0, 6, 7}),
                                      digits({0, 4, 9})};
  for (std::size_t i = 0; i < l.children[0].size(); ++i) sets[l.children[0][i]] = first[i];
  // Canonical plane on points 1..7; the parent's set is line 124 and the
  // children take the other six lines.
  const std::array<std::array<int, 3>, 6> lines{
      {{2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}}};
  for (Vertex v = 1; v < l.tree.order(); ++v) {
    if (l.children[v].empty()) continue;
    const ColorSet& vs = sets[v];
    const ColorSet& us = sets[l.parent[v]];
    const ColorSet rest = complement(10, {&vs, &us});
    std::array<Color, 8> point{};
    point[1] = us[0];
    point[2] = us[1];
    point[4] = us[2];
    point[3] = rest[0];
    point[5] = rest[1];
    point[6] = rest[2];
    point[7] = rest[3];
    for (std::size_t i = 0; i < l.children[v].size(); ++i) {
      const auto& ln = lines[i];
      sets[l.children[v][i]] = sorted({point[ln[0]], point[ln[1]], point[ln[2]]});
    }
  }
}

/// c_{k,j} and c'_k for `members` (the neighborhood of `center`).
NeighborhoodRecord record_neighborhood(Vertex center, std::vector<Vertex> members,
                                       const std::vector<ColorSet>& sets, int private_count) {
  NeighborhoodRecord r;
  r.center = center;
  r.members = std::move(members);
  const std::size_t m = r.members.size();
  r.shared.assign(m, std::vector<Color>(m, -1));
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < m; ++j) {
      if (k == j) continue;
      const auto both = intersect(sets[r.members[k]], sets[r.members[j]]);
      if (both.size() != 1) {
        throw std::logic_error("neighbors of vertex " + std::to_string(center) +
                               " do not share exactly one color");
      }
      r.shared[k][j] = both.front();
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    ColorSet own;
    for (Color c : sets[r.members[k]]) {
      bool elsewhere = false;
      for (std::size_t j = 0; j < m; ++j) {
        if (j != k && std::binary_search(sets[r.members[j]].begin(), sets[r.members[j]].end(), c)) {
          elsewhere = true;
        }
      }
      if (!elsewhere) own.push_back(c);
    }
    if (static_cast<int>(own.size()) != private_count) {
      throw std::logic_error("unexpected private color count around vertex " +
                             std::to_string(center));
    }
    r.private_colors.push_back(std::move(own));
  }
  return r;
}

void color_t3_4tone(const Layout& l, std::vector<ColorSet>& sets,
                    std::vector<NeighborhoodRecord>& records) {
  // alpha, beta, gamma are 10, 11, 12.
  sets[0] = digits({1, 2, 3, 4});
  const std::array<ColorSet, 3> first{digits({5, 6, 7, 8}), digits({5, 9, 0, 10}),
                                      digits({6, 9, 11, 12})};
  const std::array<std::array<ColorSet, 2>, 3> second{{
      {digits({1, 9, 0, 11}), digits({2, 9, 10, 12})},
      {digits({1, 6, 7, 11}), digits({2, 6, 8, 12})},
      {digits({1, 5, 7, 0}), digits({2, 5, 8, 10})},
  }};
  for (std::size_t i = 0; i < l.children[0].size(); ++i) {
    const Vertex u = l.children[0][i];
    sets[u] = first[i];
    for (std::size_t j = 0; j < l.children[u].size(); ++j) sets[l.children[u][j]] = second[i][j];
  }
  // Grandchildren of v at level >= 1, with u_1, u_2 its children and u_3 its
  // parent. Indices below are 0-based: u[0..2], c'[k][0..1].
  for (Vertex v = 1; v < l.tree.order(); ++v) {
    if (l.children[v].empty() || l.children[l.children[v][0]].empty()) continue;
    std::vector<Vertex> members = l.children[v];
    members.push_back(l.parent[v]);
    auto rec = record_neighborhood(v, members, sets, 2);
    const auto& c = rec.shared;
    const auto& cp = rec.private_colors;
    const Color v0 = sets[v][0];
    const Color v1 = sets[v][1];
    const auto& g1 = l.children[members[0]];
    const auto& g2 = l.children[members[1]];
    sets[g1[0]] = sorted({v0, cp[1][0], cp[2][0], c[1][2]});
    sets[g1[1]] = sorted({v1, cp[1][1], cp[2][1], c[1][2]});
    sets[g2[0]] = sorted({v0, cp[0][0], cp[2][0], c[0][2]});
    sets[g2[1]] = sorted({v1, cp[0][1], cp[2][1], c[0][2]});
    records.push_back(std::move(rec));
  }
}

void color_t4_4tone(const Layout& l, std::vector<ColorSet>& sets,
                    std::vector<NeighborhoodRecord>& records) {
  // alpha, beta, gamma, delta are 10, 11, 12, 13.
  sets[0] = digits({1, 2, 3, 4});
  const std::array<ColorSet, 4> first{digits({5, 6, 7, 8}), digits({5, 9, 0, 10}),
                                      digits({6, 9, 11, 12}), digits({7, 0, 11, 13})};
  const std::array<std::array<ColorSet, 3>, 4> second{{
      {digits({2, 9, 11, 13}), digits({3, 11, 0, 10}), digits({4, 0, 9, 12})},
      {digits({3, 11, 7, 8}), digits({4, 7, 6, 12}), digits({1, 6, 11, 13})},
      {digits({4, 7, 5, 10}), digits({1, 5, 0, 13}), digits({2, 0, 7, 8})},
      {digits({1, 5, 9, 12}), digits({2, 9, 6, 8}), digits({3, 6, 5, 10})},
  }};
  for (std::size_t i = 0; i < l.children[0].size(); ++i) {
    const Vertex u = l.children[0][i];
    sets[u] = first[i];
    for (std::size_t j = 0; j < l.children[u].size(); ++j) sets[l.children[u][j]] = second[i][j];
  }
  // Subscripts run over 1..4 modulo 4 with residue 0 read as 4. u_1..u_3 are
  // v's children, u_4 its parent; the colors 1..4 of v are its sorted set.
  auto m4 = [](int x) { return (x - 1) % 4 + 1; };
  for (Vertex v = 1; v < l.tree.order(); ++v) {
    if (l.children[v].empty() || l.children[l.children[v][0]].empty()) continue;
    std::vector<Vertex> members = l.children[v];
    members.push_back(l.parent[v]);
    auto rec = record_neighborhood(v, members, sets, 1);
    auto c = [&](int s, int j) { return rec.shared[m4(s) - 1][m4(j) - 1]; };
    auto cp = [&](int s) { return rec.private_colors[m4(s) - 1][0]; };
    auto vc = [&](int i) { return sets[v][m4(i) - 1]; };
    for (int k = 1; k <= 3; ++k) {
      const auto& g = l.children[members[k - 1]];
      sets[g[0]] = sorted({vc(k + 1), c(k + 1, k + 2), c(k + 2, k + 3), cp(k + 3)});
      sets[g[1]] = sorted({vc(k + 2), c(k + 3, k + 2), c(k + 1, k + 3), cp(k + 1)});
      sets[g[2]] = sorted({vc(k + 3), c(k + 3, k + 1), c(k + 1, k + 2), cp(k + 2)});
    }
    records.push_back(std::move(rec));
  }
}

}  // namespace

TreeSchemeState tree_scheme_coloring(TreeScheme scheme, int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  const auto info = scheme_info(scheme);
  Layout l = make_layout(info.delta, depth);
  std::vector<ColorSet> sets(l.tree.order());
  std::vector<NeighborhoodRecord> records;
  switch (scheme) {
    case TreeScheme::T4_3tone: color_t4_3tone(l, sets); break;
    case TreeScheme::T7_3tone_fano: color_t7_fano(l, sets); break;
    case TreeScheme::T3_4tone: color_t3_4tone(l, sets, records); break;
    case TreeScheme::T4_4tone: color_t4_4tone(l, sets, records); break;
  }
  TreeSchemeState state{scheme, std::move(l.tree), ToneColoring(info.t, info.palette, std::move(sets)),
                        std::move(l.parent), std::move(records)};
  return state;
}

bool bookkeeping_consistent(const TreeSchemeState& state) {
  const auto& sets = state.coloring.sets();
  for (const auto& r : state.records) {
    const std::size_t m = r.members.size();
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = 0; j < m; ++j) {
        if (k == j) continue;
        if (intersect(sets[r.members[k]], sets[r.members[j]]) != ColorSet{r.shared[k][j]}) return false;
      }
      ColorSet others;
      for (std::size_t j = 0; j < m; ++j) {
        if (j != k) others.insert(others.end(), sets[r.members[j]].begin(), sets[r.members[j]].end());
      }
      std::sort(others.begin(), others.end());
      ColorSet own;
      std::set_difference(sets[r.members[k]].begin(), sets[r.members[k]].end(), others.begin(),
                          others.end(), std::back_inserter(own));
      if (own != r.private_colors[k]) return false;
    }
  }
  return true;
}

ConditionReport check_tone4_conditions(const Graph& tree, const ToneColoring& coloring, int c_min,
                                       int c_max) {
  ConditionReport rep;
  const int n = tree.order();
  const auto dist = all_pairs_distances_capped(tree, 4);
  auto fail = [&](bool& flag, const std::string& why) {
    if (flag && rep.first_failure.empty()) rep.first_failure = why;
    flag = false;
  };
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int d = dist.at(u, v);
      const int s = coloring.shared(u, v);
      const std::string pair = std::to_string(u) + "," + std::to_string(v);
      if (d == 1 && s != 0) fail(rep.a, "(a) adjacent " + pair);
      if (d == 3 && (s < c_min || s > c_max)) fail(rep.c, "(c) distance-3 " + pair);
      if (d == 4 && coloring.colors(u) == coloring.colors(v)) fail(rep.d, "(d) distance-4 " + pair);
    }
  }
  for (Vertex x = 0; x < n; ++x) {
    const auto nb = tree.neighbors(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (coloring.shared(nb[i], nb[j]) != 1) {
          fail(rep.b, "(b) around " + std::to_string(x) + ": pair shares other than one color");
        }
      }
    }
    std::vector<int> count(coloring.palette_size(), 0);
    for (Vertex y : nb) {
      for (Color c : coloring.colors(y)) {
        if (++count[c] == 3) fail(rep.b, "(b) around " + std::to_string(x) + ": color on three");
      }
    }
  }
  return rep;
}

ConditionReport check_tone4_conditions(const TreeSchemeState& state) {
  switch (state.scheme) {
    case TreeScheme::T3_4tone: return check_tone4_conditions(state.tree, state.coloring, 2, 2);
    case TreeScheme::T4_4tone: return check_tone4_conditions(state.tree, state.coloring, 1, 2);
    default: throw std::invalid_argument("conditions (a)-(d) belong to the 4-tone schemes");
  }
}

}  // namespace tonelab
