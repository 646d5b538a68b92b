#include "tonelab/cnf.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

#include "tonelab/distances.hpp"

namespace tonelab {

void add_at_most(Cnf& cnf, std::span<const int> lits, int bound) {
  const int n = static_cast<int>(lits.size());
  if (bound < 0) {
    cnf.add({});
    return;
  }
  if (bound >= n) return;
  if (bound == 0) {
    for (int x : lits) cnf.add({-x});
    return;
  }
  // s[i][j]: at least j+1 of lits[0..i] are true.
  std::vector<std::vector<int>> s(n - 1, std::vector<int>(bound));
  for (auto& row : s) {
    for (auto& v : row) v = cnf.new_var();
  }
  cnf.add({-lits[0], s[0][0]});
  for (int j = 1; j < bound; ++j) cnf.add({-s[0][j]});
  for (int i = 1; i < n - 1; ++i) {
    cnf.add({-lits[i], s[i][0]});
    cnf.add({-s[i - 1][0], s[i][0]});
    for (int j = 1; j < bound; ++j) {
      cnf.add({-lits[i], -s[i - 1][j - 1], s[i][j]});
      cnf.add({-s[i - 1][j], s[i][j]});
    }
    cnf.add({-lits[i], -s[i - 1][bound - 1]});
  }
  cnf.add({-lits[n - 1], -s[n - 2][bound - 1]});
}

void add_at_least(Cnf& cnf, std::span<const int> lits, int bound) {
  std::vector<int> neg(lits.begin(), lits.end());
  for (auto& x : neg) x = -x;
  add_at_most(cnf, neg, static_cast<int>(lits.size()) - bound);
}

Cnf encode_tone_coloring(const Graph& g, int t, int k) {
  if (t < 1 || k < 1) throw std::invalid_argument("encoding needs t >= 1 and k >= 1");
  const int n = g.order();
  Cnf cnf;
  cnf.num_vars = n * k;
  std::vector<int> row(k);
  for (Vertex v = 0; v < n; ++v) {
    for (Color c = 0; c < k; ++c) row[c] = color_var(v, c, k);
    add_at_least(cnf, row, t);
    add_at_most(cnf, row, t);
  }
  const auto dist = all_pairs_distances_capped(g, t);
  std::vector<int> both(k);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int d = dist.at(u, v);
      if (d > t) continue;
      if (d == 1) {
        for (Color c = 0; c < k; ++c) cnf.add({-color_var(u, c, k), -color_var(v, c, k)});
        continue;
      }
      for (Color c = 0; c < k; ++c) {
        both[c] = cnf.new_var();
        cnf.add({-color_var(u, c, k), -color_var(v, c, k), both[c]});
      }
      add_at_most(cnf, both, d - 1);
    }
  }
  return cnf;
}

ToneColoring decode_assignment(const Graph& g, int t, int k, const std::vector<bool>& model) {
  std::vector<ColorSet> sets(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Color c = 0; c < k; ++c) {
      const auto var = static_cast<std::size_t>(color_var(v, c, k));
      if (var < model.size() && model[var]) sets[v].push_back(c);
    }
  }
  return ToneColoring(t, k, std::move(sets));
}

void write_dimacs(std::ostream& out, const Cnf& cnf, std::span<const std::string> comments) {
  for (const auto& line : comments) out << "c " << line << '\n';
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
}

void write_dimacs_file(const std::string& path, const Cnf& cnf,
                       std::span<const std::string> comments) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_dimacs(out, cnf, comments);
}

}  // namespace tonelab
