#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "support/oracles.hpp"
#include "tonelab/coloring.hpp"
#include "tonelab/errors.hpp"
#include "tonelab/graph.hpp"

using namespace tonelab;

namespace {

ToneColoring s3_nine() {
  return ToneColoring(3, 9, {{0, 1, 2}, {3, 4, 5}, {3, 6, 7}, {4, 6, 8}});
}

}  // namespace

TEST_SUITE("coloring") {
  TEST_CASE("coloring construction checks every set") {
    CHECK_THROWS_AS(ToneColoring(0, 3, {{}}), std::invalid_argument);
    CHECK_THROWS_AS(ToneColoring(2, 4, {{0}}), std::invalid_argument);
    CHECK_THROWS_AS(ToneColoring(2, 4, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(ToneColoring(2, 4, {{0, 4}}), std::invalid_argument);
    const ToneColoring c(2, 4, {{3, 1}});
    CHECK(c.colors(0) == ColorSet{1, 3});
    CHECK(c.has_masks());
    CHECK_FALSE(ToneColoring(1, 200, {{150}}).has_masks());
  }

  TEST_CASE("verify examples") {
    const auto k2 = verify(build_complete(2), ToneColoring(2, 4, {{0, 1}, {2, 3}}));
    CHECK(k2.valid);
    CHECK(k2.colors_used == 4);

    const auto s3 = verify(build_star(3), s3_nine());
    CHECK(s3.valid);
    CHECK(s3.colors_used == 9);
    CHECK(oracle::naive_violations(build_star(3), s3_nine()).empty());

    const auto p3 = verify(build_path(3), ToneColoring(2, 4, {{0, 1}, {2, 3}, {0, 1}}));
    CHECK_FALSE(p3.valid);
    REQUIRE(p3.violations.size() == 1);
    CHECK(p3.violations[0] == Violation{0, 2, 2, 2});
  }

  TEST_CASE("verify reports all violations in pair order") {
    const ToneColoring same(2, 2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}});
    const auto r = verify(build_path(4), same);
    CHECK_FALSE(r.valid);
    // Distances 1,1,1 and 2,2 are violated; 0-3 at distance 3 shares 2 < 3.
    REQUIRE(r.violations.size() == 5);
    CHECK(r.violations[0] == Violation{0, 1, 1, 2});
    CHECK(r.violations[1] == Violation{0, 2, 2, 2});
    CHECK(r.violations[4] == Violation{2, 3, 1, 2});
    for (const auto& v : r.violations) CHECK(v.shared >= v.distance);
  }

  TEST_CASE("pairs beyond t and disconnected pairs are unconstrained") {
    // Distance 3 > t = 2: equal sets allowed.
    CHECK(verify(build_path(4), ToneColoring(2, 6, {{0, 1}, {2, 3}, {4, 5}, {0, 1}})).valid);
    const Graph two(2);
    CHECK(verify(two, ToneColoring(3, 3, {{0, 1, 2}, {0, 1, 2}})).valid);
  }

  TEST_CASE("verify rejects a coloring of the wrong size") {
    CHECK_THROWS_AS(verify(build_path(3), ToneColoring(1, 2, {{0}, {1}})), std::invalid_argument);
  }

  TEST_CASE("colors used") {
    CHECK(colors_used(ToneColoring(3, 10, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}})) == 3);
    std::vector<ColorSet> disjoint;
    for (int v = 0; v < 5; ++v) disjoint.push_back({2 * v, 2 * v + 1});
    CHECK(colors_used(ToneColoring(2, 10, disjoint)) == 10);
    CHECK(colors_used(s3_nine()) == 9);
  }

  TEST_CASE("verify agrees with a naive reference scan") {
    std::mt19937_64 rng(17);
    int invalid_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 14);
      const int t = 1 + static_cast<int>(rng() % 4);
      const Graph g = oracle::random_graph(rng, n, 0.3);
      const int palette = t + static_cast<int>(rng() % (2 * t + 4));
      std::vector<ColorSet> sets(n);
      std::vector<int> pool(palette);
      std::iota(pool.begin(), pool.end(), 0);
      for (auto& s : sets) {
        std::shuffle(pool.begin(), pool.end(), rng);
        s.assign(pool.begin(), pool.begin() + t);
      }
      const ToneColoring c(t, palette, sets);
      const auto report = verify(g, c);
      const auto ref = oracle::naive_violations(g, c);
      REQUIRE(report.violations.size() == ref.size());
      for (std::size_t i = 0; i < ref.size(); ++i) {
        const auto& v = report.violations[i];
        CHECK(std::tuple(v.u, v.v, v.distance, v.shared) == ref[i]);
      }
      CHECK(report.valid == ref.empty());
      invalid_seen += !report.valid;
    }
    CHECK(invalid_seen > 20);
  }

  TEST_CASE("permutation invariance") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
      const int t = 1 + static_cast<int>(rng() % 3);
      const Graph g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 8), 0.4);
      const ToneColoring c = oracle::random_valid_coloring(rng, g, t);
      REQUIRE(verify(g, c).valid);
      std::vector<Color> perm(c.palette_size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const ToneColoring p = permute_colors(c, perm);
      CHECK(verify(g, p).valid);
      CHECK(colors_used(p) == colors_used(c));
    }
    const std::vector<Color> not_perm{0, 0, 1};
    CHECK_THROWS(permute_colors(ToneColoring(1, 3, {{0}}), not_perm));
  }

  TEST_CASE("restriction and compaction") {
    const ToneColoring c = s3_nine();
    const std::vector<Vertex> keep{1, 2};
    const ToneColoring r = restrict_to(c, keep);
    CHECK(r.num_vertices() == 2);
    CHECK(r.colors(1) == ColorSet{3, 6, 7});
    const ToneColoring compact = compact_palette(r);
    CHECK(compact.palette_size() == 5);
    CHECK(compact.colors(0) == ColorSet{0, 1, 2});
    CHECK(compact.colors(1) == ColorSet{0, 3, 4});
  }

  TEST_CASE("coloring text round trip") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
      const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.3);
      const ToneColoring c = oracle::random_valid_coloring(rng, g, 1 + static_cast<int>(rng() % 3));
      std::stringstream ss;
      write_coloring(ss, c);
      const std::string text = ss.str();
      const ToneColoring back = read_coloring(ss);
      CHECK(back == c);
      CHECK(to_string(back) == text);
    }
    CHECK(to_string(s3_nine()) == "3 9\n0: 0 1 2\n1: 3 4 5\n2: 3 6 7\n3: 4 6 8\n");
  }

  TEST_CASE("coloring parser rejects malformed input") {
    for (const char* bad : {"", "2\n", "2 1\n0: 0 1\n", "2 4\n0: 0\n", "2 4\n1: 0 1\n",
                            "2 4\n0: 1 0\n", "2 4\n0: 0 4\n", "2 4\n0 0 1\n", "0 4\n0: 0\n",
                            "2 4\n0: 0 0\n"}) {
      std::stringstream in(bad);
      CHECK_THROWS_AS(read_coloring(in), ParseError);
    }
  }
}
