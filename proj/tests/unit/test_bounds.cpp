#include <doctest.h>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "tonelab/bounds.hpp"
#include "tonelab/distances.hpp"
#include "tonelab/solver.hpp"

using namespace tonelab;

namespace {

/// Smallest c with delta * C(t,2) <= C(c - t, 2) and c > t, by bisection
/// over 128-bit products.
std::int64_t degree_bound_by_search(std::int64_t delta, std::int64_t t) {
  const __int128 need = static_cast<__int128>(t) * (t - 1) * delta;
  std::int64_t lo = 1, hi = 1;
  while (static_cast<__int128>(hi) * (hi - 1) < need) hi *= 2;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (static_cast<__int128>(mid) * (mid - 1) >= need) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return t + lo;
}

const BoundReport& row(const std::vector<BoundReport>& rows, const std::string& source) {
  for (const auto& r : rows) {
    if (r.source == source) return r;
  }
  FAIL("missing bound row " << source);
  return rows.front();
}

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("integer square root") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(120) == 10);
    CHECK(isqrt(121) == 11);
    CHECK(isqrt(122) == 11);
    const std::uint64_t big = 4294967295ull * 4294967295ull;
    CHECK(isqrt(big) == 4294967295ull);
    CHECK(isqrt(big - 1) == 4294967294ull);
    CHECK(isqrt(~0ull) == 4294967295ull);
  }

  TEST_CASE("degree bound examples") {
    CHECK(degree_lower_bound(3, 2) == 5);
    CHECK(degree_lower_bound(5, 3) == 9);
    CHECK(degree_lower_bound(4, 2) == 6);
    CHECK_THROWS(degree_lower_bound(3, 1));
    CHECK_THROWS(degree_lower_bound(0, 2));
    for (int t = 2; t <= 8; ++t) {
      for (int delta = 1; delta <= 50; ++delta) {
        CHECK(static_cast<double>(degree_lower_bound(delta, t)) >
              std::sqrt(static_cast<double>(t) * (t - 1) * delta));
      }
    }
  }

  TEST_CASE("degree bound matches an integer search on random inputs") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::int64_t> delta_dist(1, 1'000'000);
    std::uniform_int_distribution<std::int64_t> t_dist(2, 1000);
    int mismatches = 0;
    for (int i = 0; i < 1'000'000; ++i) {
      const std::int64_t delta = delta_dist(rng);
      const std::int64_t t = t_dist(rng);
      mismatches += degree_lower_bound(delta, t) != degree_bound_by_search(delta, t);
    }
    CHECK(mismatches == 0);
    // Perfect squares under the root: 1 + 4t(t-1)delta = 121 at (5, 3).
    for (std::int64_t t = 2; t <= 60; ++t) {
      for (std::int64_t delta = 1; delta <= 400; ++delta) {
        const auto disc = static_cast<std::uint64_t>(1 + 4 * t * (t - 1) * delta);
        const auto r = isqrt(disc);
        if (r * r == disc) CHECK(degree_lower_bound(delta, t) == degree_bound_by_search(delta, t));
      }
    }
  }

  TEST_CASE("2-tone tree formula equals the degree bound at t = 2") {
    CHECK(tree2tone_formula(3) == 5);
    CHECK(tree2tone_formula(1) == 4);
    CHECK_THROWS(tree2tone_formula(0));
    int mismatches = 0;
    for (std::int64_t delta = 1; delta <= 1'000'000; ++delta) {
      mismatches += tree2tone_formula(delta) != degree_lower_bound(delta, 2);
    }
    CHECK(mismatches == 0);
  }

  TEST_CASE("pair-sum examples") {
    const auto s3 = pairsum_bound(build_star(3), 5);
    CHECK(s3.value == 17);
    CHECK(s3.kind == BoundKind::exact);
    const auto s4 = pairsum_bound(build_star(4), 4);
    CHECK(s4.value == 14);
    CHECK(s4.kind == BoundKind::exact);
    const auto s5 = pairsum_bound(build_star(5), 3);
    CHECK(s5.value == 8);
    CHECK(s5.kind == BoundKind::lower);
    CHECK_FALSE(s5.reason.empty());
    const std::vector<Edge> e{{0, 1}};
    CHECK_THROWS(pairsum_bound(Graph(3, e), 2));
    CHECK(pairsum_exact_threshold(build_complete(4)) == 1);
    CHECK(pairsum_exact_threshold(build_path(5)) == 12);
  }

  TEST_CASE("path formula examples") {
    CHECK(path_formula(3, 3) == 8);
    CHECK(path_formula(4, 4) == 12);
    CHECK(path_formula(3, 4) == 11);
    CHECK(path_formula(6, 4) == 12);
    CHECK(path_formula(1, 5) == 5);
    CHECK_THROWS(path_formula(0, 1));
  }

  TEST_CASE("multipartite bounds") {
    for (int a : {1, 2, 5, 9}) {
      const std::vector<int> one{a};
      CHECK(multipartite_lower(one, 2).real_sum == doctest::Approx(std::sqrt(2.0 * a)));
    }
    const std::vector<int> p44{4, 4};
    const auto b = multipartite_lower(p44, 2);
    CHECK(b.real_sum == doctest::Approx(2 * std::sqrt(8.0)));
    CHECK(b.per_part == std::vector<std::int64_t>{4, 4});
    CHECK(b.integer_sum == 8);
    for (int t = 2; t <= 5; ++t) {
      for (int parts = 1; parts <= 5; ++parts) {
        const std::vector<int> ones(parts, 1);
        const auto k = multipartite_lower(ones, t);
        CHECK(k.integer_sum == t * parts);
        CHECK(k.real_sum <= t * parts);
      }
    }
    CHECK_THROWS(multipartite_lower(p44, 1));
  }

  TEST_CASE("star formula") {
    CHECK(star_formula(3, 5).value == 17);
    CHECK(star_formula(3, 4).value == 13);
    CHECK_FALSE(star_formula(5, 3).applicable);
    CHECK_FALSE(star_formula(5, 3).reason.empty());
    for (int k = 1; k <= 50; ++k) {
      const Graph s = build_star(k);
      for (int t = k; t <= 200; ++t) {
        const auto f = star_formula(k, t);
        const auto p = pairsum_bound(s, t);
        REQUIRE(f.applicable);
        CHECK(f.value == p.value);
        CHECK(f.value == (k + 1) * t - k * (k - 1) / 2);
        CHECK(p.kind == BoundKind::exact);
      }
    }
  }

  TEST_CASE("bound table") {
    const auto rows = bound_table(build_star(5), 3);
    CHECK(row(rows, "degree").value == 9);
    CHECK(row(rows, "pair-sum").value == 8);
    CHECK(row(rows, "pair-sum").kind == BoundKind::lower);
    CHECK_FALSE(row(rows, "star").applicable);
    CHECK_FALSE(row(rows, "path").applicable);
    CHECK(row(rows, "disjoint-sets").value == 18);

    const auto path = bound_table(build_path(6), 4);
    CHECK(row(path, "path").value == 12);
    CHECK(row(path, "path").kind == BoundKind::exact);
    CHECK_FALSE(row(path, "tree-2-tone").applicable);

    // Disconnected: per component, maximized.
    const std::vector<Edge> e{{0, 1}, {2, 3}, {3, 4}};
    const auto split = bound_table(Graph(5, e), 2);
    CHECK(row(split, "path").value == 5);
    CHECK(row(split, "pair-sum").value == 5);
    CHECK(row(split, "tree-2-tone").value == 5);
    for (const auto& r : split) {
      if (!r.applicable) CHECK_FALSE(r.reason.empty());
    }
  }

  TEST_CASE("closed-form bounds never exceed the solver value") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 5);
      const Graph g = oracle::random_connected_graph(rng, n, 0.5);
      const int t = 1 + static_cast<int>(rng() % 3);
      const auto exact = tau_exact(g, t);
      REQUIRE(exact.status == SolveStatus::exact);
      if (t >= 2) CHECK(degree_lower_bound(g.max_degree(), t) <= exact.value());
      CHECK(pairsum_bound(g, t).value <= exact.value());
    }
  }

  TEST_CASE("path formula matches the solver") {
    for (int n = 1; n <= 6; ++n) {
      for (int t = 1; t <= 4; ++t) {
        const auto r = tau_exact(build_path(n), t);
        REQUIRE(r.status == SolveStatus::exact);
        CHECK_MESSAGE(r.value() == path_formula(n, t), "n=" << n << " t=" << t);
      }
    }
  }

  TEST_CASE("pair-sum is exact on small trees at the threshold") {
    int trees = 0;
    for (int n = 1; n <= 6; ++n) {
      for (const Graph& g : oracle::connected_graphs(n)) {
        if (g.num_edges() != n - 1) continue;
        ++trees;
        const int t = static_cast<int>(pairsum_exact_threshold(g));
        const auto p = pairsum_bound(g, t);
        CHECK(p.kind == BoundKind::exact);
        const auto r = tau_exact(g, t);
        REQUIRE(r.status == SolveStatus::exact);
        CHECK(r.value() == p.value);
      }
    }
    CHECK(trees == 1 + 1 + 1 + 2 + 3 + 6);
  }
}
