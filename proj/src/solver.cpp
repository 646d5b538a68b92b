#include "tonelab/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <thread>

#include "tonelab/bounds.hpp"
#include "tonelab/distances.hpp"

namespace tonelab {

void SearchBudget::validate() const {
  if (max_nodes == kUnlimited && max_millis == kUnlimited) {
    throw std::invalid_argument("search budget needs a finite node or time cap");
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::feasible: return "feasible";
    case Verdict::infeasible: return "infeasible";
    case Verdict::timeout: return "timeout";
  }
  return "?";
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::exact: return "exact";
    case SolveStatus::lower_only: return "lower_only";
    case SolveStatus::timeout: return "timeout";
  }
  return "?";
}

std::int64_t SolveOutcome::value() const {
  if (status != SolveStatus::exact) throw std::logic_error("outcome is not exact");
  return lower;
}

std::vector<Vertex> search_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> rank(n, -1);
  int next_rank = 0;
  while (next_rank < n) {
    Vertex seed = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (rank[v] == -1 && (seed == -1 || g.degree(v) > g.degree(seed))) seed = v;
    }
    std::queue<Vertex> q;
    q.push(seed);
    rank[seed] = next_rank++;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (rank[w] == -1) {
          rank[w] = next_rank++;
          q.push(w);
        }
      }
    }
  }
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[rank[v]] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

int greedy_clique_size(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  std::vector<Vertex> by_degree(n);
  for (Vertex v = 0; v < n; ++v) by_degree[v] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  int best = 1;
  for (Vertex seed : by_degree) {
    if (g.degree(seed) + 1 <= best) break;
    std::vector<Vertex> clique{seed};
    for (Vertex cand : by_degree) {
      if (cand == seed || !g.adjacent(seed, cand)) continue;
      bool all = std::all_of(clique.begin(), clique.end(),
                             [&](Vertex c) { return g.adjacent(c, cand); });
      if (all) clique.push_back(cand);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

std::int64_t solver_lower_bound(const Graph& g, int t) {
  std::int64_t lower = static_cast<std::int64_t>(t) * std::max(1, greedy_clique_size(g));
  if (t >= 2 && g.max_degree() >= 1) lower = std::max(lower, degree_lower_bound(g.max_degree(), t));
  if (g.order() > 0 && g.is_connected()) lower = std::max(lower, pairsum_bound(g, t).value);
  return lower;
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ms(Clock::time_point since) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - since).count());
}

struct SharedControl {
  SearchBudget budget;
  Clock::time_point start;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
};

// Backtracking over vertices in search order, one t-subset per vertex.
//
// Symmetry breaking. Call two colors equivalent when exactly the same
// already-colored vertices hold them. Any permutation of colors that maps
// every equivalence class onto itself leaves the partial coloring unchanged,
// and validity is invariant under color permutations. So if some completion
// gives the current vertex a set S, permuting within classes yields another
// valid completion in which S takes the lowest-indexed members of each class.
// It therefore suffices to branch on how many colors to take from each class,
// always taking the lowest ones. The unused colors form one class, which gives
// "introduce new colors in index order"; the first vertex consequently gets
// {0..t-1}. Both restrictions keep the search complete.
class ToneSearch {
 public:
  enum class Outcome { found, exhausted, aborted };

  ToneSearch(const Graph& g, const std::vector<Vertex>& order, int t, int k, SharedControl& ctl)
      : n_(g.order()), t_(t), k_(k), order_(order), ctl_(ctl) {
    const auto dist = all_pairs_distances_capped(g, t);
    lim_.assign(static_cast<std::size_t>(n_) * n_, t);
    adj_.assign(n_, 0);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (i == j) continue;
        const int d = dist.at(order_[i], order_[j]);
        lim(i, j) = d <= t ? d - 1 : t;
        if (d == 1) adj_[i] |= bit(j);
      }
    }
    pair_suffix_.assign(n_ + 1, 0);
    for (int p = n_ - 1; p >= 0; --p) {
      std::int64_t row = 0;
      for (int w = p + 1; w < n_; ++w) row += lim(p, w);
      pair_suffix_[p] = pair_suffix_[p + 1] + row;
    }
    assigned_.assign(n_, ColorMask{});
    holders_.assign(kMaxSearchPalette, 0);
    prev_used_.assign(n_, 0);
    levels_.resize(n_);
  }

  /// Depth-first search from `pos`; positions before it must be applied.
  Outcome search(int pos) {
    if (pos == n_) return Outcome::found;
    Outcome result = Outcome::exhausted;
    for_each_candidate(pos, [&](const ColorMask& mask) {
      if (!count_node()) {
        result = Outcome::aborted;
        return false;
      }
      apply(pos, mask);
      if (lookahead_ok(pos)) {
        Outcome sub = search(pos + 1);
        if (sub != Outcome::exhausted) {
          result = sub;
          if (sub == Outcome::found) return false;
          undo(pos);
          return false;
        }
      }
      undo(pos);
      return true;
    });
    return result;
  }

  /// Candidates at `pos` that survive the lookahead; used to split work.
  std::vector<ColorMask> branches(int pos) {
    std::vector<ColorMask> out;
    for_each_candidate(pos, [&](const ColorMask& mask) {
      apply(pos, mask);
      if (lookahead_ok(pos)) out.push_back(mask);
      undo(pos);
      return true;
    });
    return out;
  }

  void apply(int pos, const ColorMask& mask) {
    prev_used_[pos] = used_;
    assigned_[pos] = mask;
    for (int c = 0; c < k_; ++c) {
      if (!mask.test(c)) continue;
      if (c < used_) {
        holders_[c] |= bit(pos);
      } else {
        holders_[c] = bit(pos);
      }
    }
    for (int c = k_ - 1; c >= used_; --c) {
      if (mask.test(c)) {
        used_ = c + 1;
        break;
      }
    }
  }

  void undo(int pos) {
    for (int c = 0; c < k_; ++c) {
      if (!assigned_[pos].test(c)) continue;
      holders_[c] &= ~bit(pos);
    }
    used_ = prev_used_[pos];
    assigned_[pos].reset();
  }

  std::vector<ColorSet> witness_sets() const {
    std::vector<ColorSet> sets(n_);
    for (int i = 0; i < n_; ++i) sets[order_[i]] = from_mask(assigned_[i]);
    return sets;
  }

 private:
  struct ColorClass {
    std::uint64_t holders = 0;
    std::vector<int> colors;
    int cap = 0;
  };
  struct Level {
    std::vector<ColorClass> classes;
    std::vector<int> suffix_cap;
    std::vector<int> take;
    std::vector<int> remaining;  // remaining shared allowance per earlier position
  };

  static std::uint64_t bit(int i) { return std::uint64_t{1} << i; }
  int& lim(int i, int j) { return lim_[static_cast<std::size_t>(i) * n_ + j]; }
  int lim(int i, int j) const { return lim_[static_cast<std::size_t>(i) * n_ + j]; }

  bool count_node() {
    const auto total = ctl_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (ctl_.exhausted.load(std::memory_order_relaxed)) return false;
    if (total > ctl_.budget.max_nodes) {
      ctl_.exhausted = true;
      return false;
    }
    if ((++local_nodes_ & 1023) == 0 && ctl_.budget.max_millis != SearchBudget::kUnlimited &&
        elapsed_ms(ctl_.start) > ctl_.budget.max_millis) {
      ctl_.exhausted = true;
      return false;
    }
    return true;
  }

  // Calls visit(mask) for each candidate set at `pos`, reuse-heavy sets
  // first. Stops early when visit returns false.
  template <typename Visit>
  void for_each_candidate(int pos, Visit&& visit) {
    Level& lv = levels_[pos];
    lv.classes.clear();
    for (int c = 0; c < used_; ++c) {
      const std::uint64_t h = holders_[c];
      auto it = std::find_if(lv.classes.begin(), lv.classes.end(),
                             [h](const ColorClass& cc) { return cc.holders == h; });
      if (it == lv.classes.end()) {
        lv.classes.push_back({h, {c}, 0});
      } else {
        it->colors.push_back(c);
      }
    }
    lv.remaining.assign(pos, 0);
    for (int j = 0; j < pos; ++j) lv.remaining[j] = lim(pos, j);
    std::erase_if(lv.classes, [&](ColorClass& cc) {
      int cap = std::min(static_cast<int>(cc.colors.size()), t_);
      for (std::uint64_t h = cc.holders; h != 0; h &= h - 1) {
        cap = std::min(cap, lv.remaining[std::countr_zero(h)]);
      }
      cc.cap = cap;
      return cap == 0;
    });
    const int nc = static_cast<int>(lv.classes.size());
    lv.suffix_cap.assign(nc + 1, 0);
    for (int i = nc - 1; i >= 0; --i) lv.suffix_cap[i] = lv.suffix_cap[i + 1] + lv.classes[i].cap;
    lv.take.assign(nc, 0);
    // Reusing fewer than this many colors would overflow the palette.
    const int min_reuse = std::max(0, t_ - (k_ - used_));
    bool keep_going = true;
    choose(lv, 0, 0, min_reuse, keep_going, visit);
  }

  template <typename Visit>
  void choose(Level& lv, int ci, int taken, int min_reuse, bool& keep_going, Visit& visit) {
    if (!keep_going) return;
    const int nc = static_cast<int>(lv.classes.size());
    if (taken + lv.suffix_cap[ci] < min_reuse) return;
    if (ci == nc || taken == t_) {
      if (taken < min_reuse) return;
      ColorMask mask;
      for (int i = 0; i < ci; ++i) {
        for (int x = 0; x < lv.take[i]; ++x) mask.set(lv.classes[i].colors[x]);
      }
      for (int c = used_; c < used_ + (t_ - taken); ++c) mask.set(c);
      keep_going = visit(mask);
      return;
    }
    const ColorClass& cc = lv.classes[ci];
    int most = std::min(cc.cap, t_ - taken);
    for (std::uint64_t h = cc.holders; h != 0; h &= h - 1) {
      most = std::min(most, lv.remaining[std::countr_zero(h)]);
    }
    for (int x = most; x >= 0 && keep_going; --x) {
      lv.take[ci] = x;
      for (std::uint64_t h = cc.holders; h != 0; h &= h - 1) lv.remaining[std::countr_zero(h)] -= x;
      choose(lv, ci + 1, taken + x, min_reuse, keep_going, visit);
      for (std::uint64_t h = cc.holders; h != 0; h &= h - 1) lv.remaining[std::countr_zero(h)] += x;
    }
    lv.take[ci] = 0;
  }

  // Palette lower bound for completions of positions 0..pos. For each
  // uncolored w, at most min(colors not held by a colored neighbor,
  // sum of allowances to colored vertices) of its t colors can be reused;
  // the rest are new. Truncated inclusion-exclusion over the new colors
  // subtracts at most lim(w, w') per uncolored pair.
  bool lookahead_ok(int pos) const {
    if (pos + 1 >= n_) return true;
    std::int64_t sum_need = 0;
    int max_need = 0;
    const std::uint64_t colored = pos + 1 >= 64 ? ~std::uint64_t{0} : (bit(pos + 1) - 1);
    for (int w = pos + 1; w < n_; ++w) {
      ColorMask forbidden;
      for (std::uint64_t h = adj_[w] & colored; h != 0; h &= h - 1) {
        forbidden |= assigned_[std::countr_zero(h)];
      }
      const int allowed = used_ - static_cast<int>(forbidden.count());
      int allowance = 0;
      for (int j = 0; j <= pos && allowance < t_; ++j) allowance += lim(w, j);
      const int reuse = std::min({allowed, allowance, t_});
      const int need = t_ - reuse;
      sum_need += need;
      max_need = std::max(max_need, need);
    }
    if (used_ + max_need > k_) return false;
    return used_ + sum_need - pair_suffix_[pos + 1] <= k_;
  }

  int n_;
  int t_;
  int k_;
  std::vector<Vertex> order_;
  SharedControl& ctl_;
  std::vector<int> lim_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::int64_t> pair_suffix_;
  std::vector<ColorMask> assigned_;
  std::vector<std::uint64_t> holders_;
  std::vector<int> prev_used_;
  std::vector<Level> levels_;
  int used_ = 0;
  std::uint64_t local_nodes_ = 0;
};

ToneColoring disjoint_coloring(int n, int t) {
  std::vector<ColorSet> sets(n);
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < t; ++c) sets[v].push_back(v * t + c);
  }
  return ToneColoring(t, n * t, std::move(sets));
}

FeasibilityResult run_parallel(const Graph& g, const std::vector<Vertex>& order, int t, int k,
                               SharedControl& ctl, int threads) {
  FeasibilityResult result;
  ToneSearch root(g, order, t, k, ctl);
  auto first = root.branches(0);
  // Position 0 has the single candidate {0..t-1}.
  root.apply(0, first.front());
  auto branches = root.branches(1);
  ctl.nodes += 1 + branches.size();
  const int nb = static_cast<int>(branches.size());
  std::vector<ToneSearch::Outcome> outcomes(nb, ToneSearch::Outcome::exhausted);
  std::vector<std::vector<ColorSet>> witnesses(nb);
  std::atomic<int> next{0};
  std::atomic<int> best{nb};
  auto worker = [&]() {
    for (int b = next++; b < nb; b = next++) {
      if (best.load() < b) continue;
      ToneSearch s(g, order, t, k, ctl);
      s.apply(0, first.front());
      s.apply(1, branches[b]);
      outcomes[b] = s.search(2);
      if (outcomes[b] == ToneSearch::Outcome::found) {
        witnesses[b] = s.witness_sets();
        int cur = best.load();
        while (b < cur && !best.compare_exchange_weak(cur, b)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  // Merge in branch order: the lowest feasible branch wins.
  bool aborted = false;
  for (int b = 0; b < nb; ++b) {
    if (outcomes[b] == ToneSearch::Outcome::found) {
      result.verdict = Verdict::feasible;
      result.witness = ToneColoring(t, k, std::move(witnesses[b]));
      return result;
    }
    if (outcomes[b] == ToneSearch::Outcome::aborted) aborted = true;
  }
  result.verdict = aborted ? Verdict::timeout : Verdict::infeasible;
  return result;
}

}  // namespace

FeasibilityResult feasible(const Graph& g, int t, int k, const SearchBudget& budget, int threads) {
  budget.validate();
  if (t < 1) throw std::invalid_argument("feasible: t must be >= 1");
  if (k < t) throw std::invalid_argument("feasible: k must be >= t (each vertex needs t colors)");
  if (k > kMaxSearchPalette) {
    throw std::invalid_argument("feasible: k exceeds the search palette limit " +
                                std::to_string(kMaxSearchPalette));
  }
  if (g.order() > kMaxSearchVertices) {
    throw std::invalid_argument("feasible: graph exceeds " + std::to_string(kMaxSearchVertices) +
                                " vertices");
  }
  SharedControl ctl{budget, Clock::now()};
  FeasibilityResult result;
  const auto order = search_order(g);
  if (threads > 1 && g.order() >= 3) {
    result = run_parallel(g, order, t, k, ctl, threads);
  } else {
    ToneSearch search(g, order, t, k, ctl);
    switch (search.search(0)) {
      case ToneSearch::Outcome::found:
        result.verdict = Verdict::feasible;
        result.witness = ToneColoring(t, k, search.witness_sets());
        break;
      case ToneSearch::Outcome::exhausted:
        result.verdict = Verdict::infeasible;
        break;
      case ToneSearch::Outcome::aborted:
        result.verdict = Verdict::timeout;
        break;
    }
  }
  if (result.witness && !verify(g, *result.witness).valid) {
    throw std::logic_error("feasible: search produced an invalid witness");
  }
  result.stats.nodes = ctl.nodes.load();
  result.stats.wall_millis = elapsed_ms(ctl.start);
  result.stats.budget_exhausted = ctl.exhausted.load();
  return result;
}

namespace {

struct ComponentOutcome {
  SolveStatus status;
  std::int64_t lower;
  std::int64_t upper;
  ToneColoring witness;
};

SearchBudget remaining_budget(const SearchBudget& total, const SearchStats& spent) {
  SearchBudget r = total;
  if (r.max_nodes != SearchBudget::kUnlimited) {
    r.max_nodes = spent.nodes >= r.max_nodes ? 0 : r.max_nodes - spent.nodes;
  }
  if (r.max_millis != SearchBudget::kUnlimited) {
    r.max_millis = spent.wall_millis >= r.max_millis ? 0 : r.max_millis - spent.wall_millis;
  }
  return r;
}

ComponentOutcome solve_component(const Graph& g, int t, const SearchBudget& budget, int threads,
                                 SearchStats& stats) {
  const int n = g.order();
  const std::int64_t trivial = static_cast<std::int64_t>(t) * n;
  std::int64_t k = solver_lower_bound(g, t);
  while (true) {
    if (k >= trivial) return {SolveStatus::exact, trivial, trivial, disjoint_coloring(n, t)};
    if (k > kMaxSearchPalette || n > kMaxSearchVertices) {
      return {SolveStatus::lower_only, k, trivial, disjoint_coloring(n, t)};
    }
    auto res = feasible(g, t, static_cast<int>(k), remaining_budget(budget, stats), threads);
    stats.nodes += res.stats.nodes;
    stats.wall_millis += res.stats.wall_millis;
    stats.budget_exhausted = stats.budget_exhausted || res.stats.budget_exhausted;
    switch (res.verdict) {
      case Verdict::feasible:
        return {SolveStatus::exact, k, k, std::move(*res.witness)};
      case Verdict::infeasible:
        ++k;
        break;
      case Verdict::timeout:
        return {SolveStatus::timeout, k, trivial, disjoint_coloring(n, t)};
    }
  }
}

}  // namespace

SolveOutcome tau_exact(const Graph& g, int t, const SearchBudget& budget, int threads) {
  budget.validate();
  if (t < 1) throw std::invalid_argument("tau_exact: t must be >= 1");
  SolveOutcome out;
  out.status = SolveStatus::exact;
  const int n = g.order();
  if (n == 0) {
    out.witness = ToneColoring(t, 0, {});
    return out;
  }
  const auto comp = g.components();
  const int count = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<ColorSet> sets(n);
  bool any_timeout = false;
  bool any_lower_only = false;
  for (int c = 0; c < count; ++c) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v) {
      if (comp[v] == c) members.push_back(v);
    }
    const Graph sub = g.induced_subgraph(members);
    auto res = solve_component(sub, t, budget, threads, out.stats);
    out.lower = std::max(out.lower, res.lower);
    out.upper = std::max(out.upper, res.upper);
    any_timeout = any_timeout || res.status == SolveStatus::timeout;
    any_lower_only = any_lower_only || res.status == SolveStatus::lower_only;
    for (std::size_t i = 0; i < members.size(); ++i) sets[members[i]] = res.witness.colors(i);
  }
  if (any_timeout) {
    out.status = SolveStatus::timeout;
  } else if (any_lower_only) {
    out.status = SolveStatus::lower_only;
  }
  out.witness = ToneColoring(t, static_cast<int>(out.upper), std::move(sets));
  return out;
}

std::optional<int> brute_force_tau(const Graph& g, int t, int k_max) {
  const int n = g.order();
  if (t < 1) throw std::invalid_argument("brute_force_tau: t must be >= 1");
  if (k_max > 64) throw std::invalid_argument("brute_force_tau: k_max must be <= 64");
  // Own Floyd-Warshall so the oracle shares no distance code with the search.
  constexpr int kInf = 1 << 20;
  std::vector<int> dist(static_cast<std::size_t>(n) * n, kInf);
  for (int v = 0; v < n; ++v) dist[v * n + v] = 0;
  for (auto [u, v] : g.edges()) dist[u * n + v] = dist[v * n + u] = 1;
  for (int m = 0; m < n; ++m) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        dist[i * n + j] = std::min(dist[i * n + j], dist[i * n + m] + dist[m * n + j]);
      }
    }
  }
  for (int k = t; k <= k_max; ++k) {
    std::vector<std::uint64_t> subsets;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
      if (std::popcount(s) == t) subsets.push_back(s);
    }
    std::vector<std::uint64_t> chosen(n, 0);
    // Iterative odometer over per-vertex subset indices.
    std::vector<int> idx(n, -1);
    int v = 0;
    bool found = n == 0;
    while (v >= 0 && !found) {
      ++idx[v];
      if (idx[v] >= static_cast<int>(subsets.size())) {
        idx[v] = -1;
        --v;
        continue;
      }
      chosen[v] = subsets[idx[v]];
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        const int d = dist[u * n + v];
        if (d >= kInf) continue;
        ok = std::popcount(chosen[u] & chosen[v]) < d;
      }
      if (!ok) continue;
      if (v + 1 == n) {
        found = true;
      } else {
        ++v;
      }
    }
    if (found) return k;
  }
  return std::nullopt;
}

}  // namespace tonelab
