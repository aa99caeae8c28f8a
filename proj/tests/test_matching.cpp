#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "cmatch/extremal.hpp"
#include "cmatch/matching.hpp"
#include "oracles.hpp"

using namespace cmatch;

namespace {

// 5-cycle 0-1-2-3-4-0 as color 1 inside a 2-colored K_5
ColoredMultipartiteGraph five_cycle() {
  auto spec = MultipartiteSpec::singletons(5);
  return ColoredMultipartiteGraph::build_complete(spec, 2, false, [](int u, int v) {
    bool cycle = (v == u + 1) || (u == 0 && v == 4);
    return cycle ? color_bit(1) : color_bit(2);
  });
}

}  // namespace

TEST_CASE("max matching on small named graphs") {
  auto c5 = five_cycle();
  CHECK(max_matching(c5, 1).size == 2);

  auto fig1 = figure1_coloring(3);  // blue = K_5 + K_2
  auto blue = max_matching(fig1, 2);
  CHECK(blue.size == 3);
  CHECK(validate_matching(fig1, 2, blue));

  auto empty_color = ColoredMultipartiteGraph::build_complete(
      MultipartiteSpec({2, 1}), 2, false, [](int, int) { return color_bit(1); });
  auto cert = max_matching(empty_color, 2);
  CHECK(cert.size == 0);
  CHECK(cert.edges.empty());
}

TEST_CASE("alpha_star separates components") {
  // two disjoint color-1 edges in different components of G_1
  auto g = ColoredMultipartiteGraph::build_complete(
      MultipartiteSpec::singletons(4), 2, false, [](int u, int v) {
        bool red = (u == 0 && v == 1) || (u == 2 && v == 3);
        return red ? color_bit(1) : color_bit(2);
      });
  CHECK(max_matching(g, 1).size == 2);
  auto star = alpha_star(g, 1);
  CHECK(star.size == 1);
  CHECK(star.component_id == 0);  // ties go to the lowest component id
  CHECK(validate_matching(g, 1, star));

  auto fig1 = figure1_coloring(2);
  CHECK(alpha_star(fig1, 1).size == 1);
  CHECK(alpha_star(fig1, 2).size == 1);

  auto fig2 = figure2_coloring(2, 2);
  CHECK(alpha_star(fig2, 1).size == 1);
  CHECK(alpha_star(fig2, 2).size == 1);

  auto no_edges = ColoredMultipartiteGraph::build_complete(
      MultipartiteSpec({2, 1}), 2, false, [](int, int) { return color_bit(1); });
  auto empty = alpha_star(no_edges, 2);
  CHECK(empty.size == 0);
  CHECK(empty.edges.empty());
}

TEST_CASE("certificate validation catches corruption") {
  auto fig1 = figure1_coloring(3);
  auto cert = max_matching(fig1, 1);
  CHECK(validate_matching(fig1, 1, cert));

  auto wrong_color = cert;
  CHECK_FALSE(validate_matching(fig1, 2, wrong_color));

  auto overlapping = cert;
  if (overlapping.edges.size() >= 2) {
    overlapping.edges[1].first = overlapping.edges[0].first;
    CHECK_FALSE(validate_matching(fig1, 1, overlapping));
  }
}

TEST_CASE("konig cover on named bipartite views") {
  auto k32 = ColoredMultipartiteGraph::build_complete(
      MultipartiteSpec({3, 2}), 2, false, [](int, int) { return color_bit(1); });
  std::vector<int> left{0, 1, 2}, right{3, 4};
  auto [m, c] = konig_cover(k32, 1, left, right);
  CHECK(m.size == 2);
  CHECK(c.size == 2);

  // path 0-3-1-4 across the bipartition
  auto p4 = ColoredMultipartiteGraph::build_complete(
      MultipartiteSpec({3, 2}), 2, false, [](int u, int v) {
        bool on_path = (u == 0 && v == 3) || (u == 1 && v == 3) || (u == 1 && v == 4);
        return on_path ? color_bit(1) : color_bit(2);
      });
  auto [pm, pc] = konig_cover(p4, 1, left, right);
  CHECK(pm.size == 2);
  CHECK(pc.size == 2);

  CHECK_THROWS_AS(konig_cover(k32, 1, left, std::vector<int>{2, 3}), invalid_input);
}

TEST_CASE("deficiency form on K_{3,2} minus a perfect matching") {
  // remove matching edges (0,3) and (1,4) from color 1
  auto g = ColoredMultipartiteGraph::build_complete(
      MultipartiteSpec({3, 2}), 2, false, [](int u, int v) {
        bool removed = (u == 0 && v == 3) || (u == 1 && v == 4);
        return removed ? color_bit(2) : color_bit(1);
      });
  std::vector<int> left{0, 1, 2}, right{3, 4};
  auto [m, c] = konig_cover(g, 1, left, right);

  int deficiency_min = 1000;
  for (std::uint32_t sub = 0; sub < 8; ++sub) {  // all 2^3 subsets of the left side
    std::uint32_t nbhd = 0;
    int taken = 0;
    for (int i = 0; i < 3; ++i) {
      if (!(sub >> i & 1)) continue;
      ++taken;
      for (int j = 0; j < 2; ++j) {
        std::int64_t id = g.spec().edge_id(left[i], right[j]);
        if (g.has_color(id, 1)) nbhd |= 1u << j;
      }
    }
    deficiency_min = std::min(deficiency_min, 3 - taken + std::popcount(nbhd));
  }
  CHECK(deficiency_min == m.size);
  CHECK(m.size == 2);
  CHECK(c.size == 2);
}

TEST_CASE("konig equality and cover validity on random views") {
  std::uint64_t rng = 2024;
  for (int t = 0; t < 1000; ++t) {
    int a = 1 + static_cast<int>(oracle::splitmix(rng) % 8);
    int b = 1 + static_cast<int>(oracle::splitmix(rng) % 8);
    MultipartiteSpec spec({std::max(a, b), std::min(a, b)});
    auto g = ColoredMultipartiteGraph::build_complete(spec, 2, false, [&rng](int, int) {
      return oracle::splitmix(rng) % 3 == 0 ? color_bit(1) : color_bit(2);
    });
    std::vector<int> left, right;
    for (int v = 0; v < spec.part_end(0); ++v) left.push_back(v);
    for (int v = spec.part_end(0); v < spec.total(); ++v) right.push_back(v);
    auto [m, c] = konig_cover(g, 1, left, right);
    REQUIRE(m.size == c.size);
    // the cover really covers every color-1 cross edge
    std::set<int> cover(c.vertices.begin(), c.vertices.end());
    for (int u : left)
      for (int v : right)
        if (g.has_color(g.spec().edge_id(u, v), 1))
          REQUIRE((cover.count(u) || cover.count(v)));
  }
}

TEST_CASE("multipartite matching bound formula and tightness") {
  CHECK(multipartite_matching_bound(std::vector<int>{2, 2, 3}, 0) == 3);
  CHECK(multipartite_matching_bound(std::vector<int>{5, 1}, 0) == 1);
  CHECK(multipartite_matching_bound(std::vector<int>{2, 2, 3}, 2) == 1);
  CHECK_THROWS_AS(multipartite_matching_bound(std::vector<int>{2, 0}, 0), invalid_input);
  CHECK_THROWS_AS(multipartite_matching_bound(std::vector<int>{2, 2}, -1), invalid_input);

  auto k223 = ColoredMultipartiteGraph::build_complete(
      MultipartiteSpec({3, 2, 2}), 2, false, [](int, int) { return color_bit(1); });
  CHECK(max_matching(k223, 1).size == 3);  // bound met with equality
}

TEST_CASE("blossom agrees with the DP oracle on random 8-vertex graphs") {
  std::uint64_t rng = 555;
  for (int t = 0; t < 2000; ++t) {
    std::uint64_t mask = oracle::splitmix(rng) & ((1u << 28) - 1);  // C(8,2)=28 pairs
    auto g = oracle::embed_graph(8, mask);
    oracle::DpMatcher dp(oracle::color_nbr(g, 1));
    auto cert = max_matching(g, 1);
    REQUIRE(cert.size == dp.full());
    REQUIRE(validate_matching(g, 1, cert));
    auto star = alpha_star(g, 1);
    REQUIRE(star.size == oracle::brute_alpha_star(dp));
    REQUIRE(star.size <= cert.size);
    REQUIRE(cert.size <= g.num_vertices() / 2);
  }
}

TEST_CASE("adding a color edge never lowers alpha_star") {
  std::uint64_t rng = 31337;
  for (int t = 0; t < 300; ++t) {
    std::uint64_t mask = oracle::splitmix(rng) & ((1u << 21) - 1);  // 7 vertices
    auto g = oracle::embed_graph(7, mask);
    int before = alpha_star(g, 1).size;
    std::int64_t absent = -1;
    for (std::int64_t id = 0; id < g.num_edges(); ++id)
      if (!g.has_color(id, 1)) {
        absent = id;
        break;
      }
    if (absent < 0) continue;
    auto bigger = oracle::embed_graph(7, mask | (std::uint64_t(1) << absent));
    CHECK(alpha_star(bigger, 1).size >= before);
  }
}
