#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "cmatch/extremal.hpp"
#include "cmatch/multipartite.hpp"
#include "oracles.hpp"

using namespace cmatch;

TEST_CASE("spec validation and vertex layout") {
  CHECK_THROWS_AS(MultipartiteSpec({}), invalid_input);
  CHECK_THROWS_AS(MultipartiteSpec({2, 0}), invalid_input);
  CHECK_THROWS_AS(MultipartiteSpec({1, 2}), invalid_input);

  MultipartiteSpec spec({3, 2, 2});
  CHECK(spec.total() == 7);
  CHECK(spec.part_count() == 3);
  CHECK(spec.part_of(0) == 0);
  CHECK(spec.part_of(2) == 0);
  CHECK(spec.part_of(3) == 1);
  CHECK(spec.part_of(6) == 2);
  CHECK(spec.same_part(0, 2));
  CHECK_FALSE(spec.same_part(2, 3));
  CHECK(spec.cross_pair_count() == 16);  // C(7,2)=21 minus 3+1+1 internal pairs
}

TEST_CASE("edge ids are a lexicographic bijection over cross pairs") {
  MultipartiteSpec spec({2, 2, 1});
  std::set<std::int64_t> seen;
  std::int64_t expect = 0;
  for (int u = 0; u < spec.total(); ++u)
    for (int v = u + 1; v < spec.total(); ++v) {
      std::int64_t id = spec.edge_id(u, v);
      if (spec.same_part(u, v)) {
        CHECK(id == -1);
        continue;
      }
      CHECK(id == expect);  // lexicographic rank order
      ++expect;
      CHECK(seen.insert(id).second);
      CHECK(spec.edge_endpoints(id) == std::pair{u, v});
      CHECK(spec.edge_id(v, u) == id);
    }
  CHECK(expect == spec.cross_pair_count());
}

TEST_CASE("build_complete on the smallest hosts") {
  auto k2 = ColoredMultipartiteGraph::build_complete(MultipartiteSpec({1, 1}), 2, false,
                                                     [](int, int) { return color_bit(1); });
  CHECK(k2.num_edges() == 1);
  CHECK(k2.edge_colors(0, 1) == color_bit(1));
  CHECK(k2.color_edge_count(1) == 1);
  CHECK(k2.color_edge_count(2) == 0);

  auto g = ColoredMultipartiteGraph::build_complete(
      MultipartiteSpec({2, 1, 1}), 2, false,
      [](int u, int v) { return color_bit(1 + (u + v) % 2); });
  CHECK(g.num_edges() == 5);
  CHECK(g.edge_colors(0, 1) == 0);  // same part: structurally absent

  CHECK_THROWS_AS(ColoredMultipartiteGraph::build_complete(MultipartiteSpec({1, 1}), 2, false,
                                                           [](int, int) { return ColorSet{0}; }),
                  invalid_input);
  CHECK_THROWS_AS(
      ColoredMultipartiteGraph::build_complete(MultipartiteSpec({1, 1}), 2, false,
                                               [](int, int) { return ColorSet{0x4}; }),
      invalid_input);
  // overlapping set under overlap_allowed=false
  CHECK_THROWS_AS(
      ColoredMultipartiteGraph::build_complete(MultipartiteSpec({1, 1}), 2, false,
                                               [](int, int) { return ColorSet{0x3}; }),
      invalid_input);
  CHECK_NOTHROW(ColoredMultipartiteGraph::build_complete(MultipartiteSpec({1, 1}), 2, true,
                                                         [](int, int) { return ColorSet{0x3}; }));
}

TEST_CASE("components of the figure colorings and degenerate colors") {
  auto fig1 = figure1_coloring(2);  // K_4, blue = triangle on U1 plus the U2 singleton
  auto blue = components(fig1, 2);
  std::multiset<int> sizes(blue.component_sizes.begin(), blue.component_sizes.end());
  CHECK(sizes == std::multiset<int>{3, 1});

  auto one_color = ColoredMultipartiteGraph::build_complete(
      MultipartiteSpec({2, 1, 1}), 2, false, [](int, int) { return color_bit(1); });
  auto reds = components(one_color, 1);
  CHECK(reds.count() == 1);
  CHECK(reds.component_sizes[0] == 4);
  auto blues = components(one_color, 2);
  CHECK(blues.count() == 4);  // no edges: all singletons
  for (int s : blues.component_sizes) CHECK(s == 1);

  CHECK_THROWS_AS(components(one_color, 3), invalid_input);

  // ids are stable under repeated calls
  auto again = components(fig1, 2);
  CHECK(again.component_of == blue.component_of);
}

TEST_CASE("enumeration counts and lexicographic order") {
  EnumerateOptions opts;

  std::vector<std::vector<std::uint8_t>> words;
  auto count = enumerate_colorings(MultipartiteSpec({1, 1}), 2, opts,
                                   [&](const ColoredMultipartiteGraph&,
                                       const std::vector<std::uint8_t>& w) {
                                     words.push_back(w);
                                     return true;
                                   });
  CHECK(count == 2);
  CHECK(words.front() == std::vector<std::uint8_t>{1});
  CHECK(words.back() == std::vector<std::uint8_t>{2});

  count = enumerate_colorings(MultipartiteSpec({2, 1, 1}), 2, opts,
                              [](const ColoredMultipartiteGraph&,
                                 const std::vector<std::uint8_t>&) { return true; });
  CHECK(count == 32);  // m = 5 cross pairs

  std::set<std::vector<std::uint8_t>> distinct;
  count = enumerate_colorings(MultipartiteSpec({1, 1, 1, 1}), 3, opts,
                              [&](const ColoredMultipartiteGraph&,
                                  const std::vector<std::uint8_t>& w) {
                                distinct.insert(w);
                                return true;
                              });
  CHECK(count == 729);  // 3^6
  CHECK(distinct.size() == 729);
  // lexicographic: every word is strictly above its predecessor
  CHECK(std::is_sorted(distinct.begin(), distinct.end()));
}

TEST_CASE("enumeration budget and early stop") {
  EnumerateOptions opts;
  opts.budget = 10;
  CHECK_THROWS_AS(enumerate_colorings(MultipartiteSpec({1, 1, 1, 1}), 2, opts,
                                      [](const ColoredMultipartiteGraph&,
                                         const std::vector<std::uint8_t>&) { return true; }),
                  budget_exceeded);

  opts.budget = 100;
  auto count = enumerate_colorings(MultipartiteSpec({1, 1, 1}), 2, opts,
                                   [](const ColoredMultipartiteGraph&,
                                      const std::vector<std::uint8_t>&) { return false; });
  CHECK(count == 1);
}

TEST_CASE("first-edge symmetry breaking halves the stream") {
  EnumerateOptions opts;
  opts.fix_first_edge_color = true;
  std::vector<std::vector<std::uint8_t>> words;
  auto count = enumerate_colorings(MultipartiteSpec({1, 1, 1}), 2, opts,
                                   [&](const ColoredMultipartiteGraph&,
                                       const std::vector<std::uint8_t>& w) {
                                     words.push_back(w);
                                     return true;
                                   });
  CHECK(count == 4);  // 2^(3-1)
  for (const auto& w : words) CHECK(w[0] == 1);
}

TEST_CASE("enumeration count equals num_colors^m across small hosts") {
  // all partition shapes of up to 6 vertices for 2 colors, up to 5 for 3
  std::vector<std::vector<int>> shapes = {
      {1, 1},       {2, 1},          {1, 1, 1},    {2, 2},       {3, 1},    {2, 1, 1},
      {1, 1, 1, 1}, {3, 2},          {2, 2, 1},    {4, 1},       {3, 1, 1}, {2, 1, 1, 1},
      {1, 1, 1, 1, 1}, {3, 3},       {2, 2, 2},    {4, 2},       {3, 2, 1}, {2, 2, 1, 1},
      {1, 1, 1, 1, 1, 1}};
  EnumerateOptions opts;
  for (const auto& shape : shapes) {
    MultipartiteSpec spec(shape);
    for (int k : {2, 3}) {
      if (k == 3 && spec.cross_pair_count() > 10) continue;
      auto expected = coloring_count(spec.cross_pair_count(), k);
      auto count = enumerate_colorings(spec, k, opts,
                                       [](const ColoredMultipartiteGraph&,
                                          const std::vector<std::uint8_t>&) { return true; });
      CHECK(count == static_cast<std::uint64_t>(expected));
    }
  }
}

TEST_CASE("every cross pair lands in exactly one subgraph when colors are singletons") {
  std::uint64_t rng = 7;
  auto g = ColoredMultipartiteGraph::build_complete(
      MultipartiteSpec({3, 2, 2}), 3, false,
      [&rng](int, int) { return color_bit(1 + static_cast<int>(oracle::splitmix(rng) % 3)); });
  for (std::int64_t id = 0; id < g.num_edges(); ++id) {
    int owners = 0;
    for (int c = 1; c <= 3; ++c)
      if (g.has_color(id, c)) ++owners;
    CHECK(owners == 1);
  }
}

TEST_CASE("relabeling inside a part preserves component structure") {
  std::uint64_t rng = 99;
  MultipartiteSpec spec({3, 2, 2});
  std::vector<ColorSet> colors(spec.cross_pair_count());
  for (auto& cs : colors) cs = color_bit(1 + static_cast<int>(oracle::splitmix(rng) % 2));
  auto g = ColoredMultipartiteGraph::from_edge_colors(spec, 2, false, colors);

  // swap the two vertices of part 1 (vertices 3 and 4)
  auto permuted = ColoredMultipartiteGraph::build_complete(
      spec, 2, false, [&](int u, int v) {
        auto swap34 = [](int w) { return w == 3 ? 4 : w == 4 ? 3 : w; };
        int pu = swap34(u), pv = swap34(v);
        return g.edge_colors(std::min(pu, pv), std::max(pu, pv));
      });

  for (int c = 1; c <= 2; ++c) {
    auto a = components(g, c), b = components(permuted, c);
    std::multiset<int> sa(a.component_sizes.begin(), a.component_sizes.end());
    std::multiset<int> sb(b.component_sizes.begin(), b.component_sizes.end());
    CHECK(sa == sb);
  }
}
