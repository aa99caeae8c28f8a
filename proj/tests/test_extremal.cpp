#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmatch/extremal.hpp"
#include "cmatch/matching.hpp"

using namespace cmatch;

TEST_CASE("figure 1 hits exactly n-1 in both colors") {
  auto k1 = figure1_coloring(1);
  CHECK(k1.num_vertices() == 1);
  CHECK(k1.num_edges() == 0);
  CHECK(alpha_star(k1, 1).size == 0);
  CHECK(alpha_star(k1, 2).size == 0);

  for (int n = 2; n <= 5; ++n) {
    auto g = figure1_coloring(n);
    CHECK(g.num_vertices() == 3 * n - 2);
    CHECK(alpha_star(g, 1).size == n - 1);
    CHECK(alpha_star(g, 2).size == n - 1);
  }
}

TEST_CASE("figure 2 hits exactly n-1 in both colors") {
  auto degenerate = figure2_coloring(1, 3);
  CHECK(degenerate.num_vertices() == 3);
  CHECK(degenerate.num_edges() == 0);  // one independent part, no singletons
  CHECK(alpha_star(degenerate, 1).size == 0);

  CHECK(alpha_star(figure2_coloring(2, 2), 1).size == 1);
  CHECK(alpha_star(figure2_coloring(2, 2), 2).size == 1);
  CHECK(alpha_star(figure2_coloring(3, 5), 1).size == 2);
  CHECK(alpha_star(figure2_coloring(3, 5), 2).size == 2);

  for (int n = 2; n <= 4; ++n)
    for (int n1 : {n, 2 * n}) {
      auto g = figure2_coloring(n, n1);
      CHECK(g.num_vertices() == n1 + 2 * (n - 1));
      CHECK(alpha_star(g, 1).size == n - 1);
      CHECK(alpha_star(g, 2).size == n - 1);
    }
}

TEST_CASE("bad partition witnesses certify themselves") {
  MultipartiteSpec host({10, 10, 10});

  auto w1 = bad_partition_witness(1, 10, host);
  CHECK(w1.certificate.kind == 1);
  CHECK(w1.certificate.color_i == 2);
  CHECK(w1.certificate.measured.cross_edges_color_i == 0);
  CHECK(w1.certificate.measured.inside_w1_other_color == 0);
  CHECK(check_bad_partition(w1.graph, 10, w1.certificate).pass);

  auto w2 = bad_partition_witness(2, 10, host);
  CHECK(w2.certificate.kind == 2);
  CHECK(w2.certificate.color_i == 1);
  CHECK(w2.certificate.measured.vj_u1_color_i == 0);
  CHECK(w2.certificate.measured.vj_u2_other_color == 0);
  CHECK(check_bad_partition(w2.graph, 10, w2.certificate).pass);
}

TEST_CASE("witness rejects undersized hosts") {
  CHECK_THROWS_AS(bad_partition_witness(1, 10, MultipartiteSpec({1, 1})), invalid_input);
  CHECK_THROWS_AS(bad_partition_witness(2, 10, MultipartiteSpec({1, 1})), invalid_input);
  // big enough for kind 1 but bipartite, so kind 2 has no third block
  MultipartiteSpec bipartite({20, 20});
  CHECK_NOTHROW(bad_partition_witness(1, 10, bipartite));
  CHECK_THROWS_AS(bad_partition_witness(2, 10, bipartite), invalid_input);
}

TEST_CASE("witness on an uneven host still certifies at its reported lambda") {
  MultipartiteSpec host({11, 10, 9});  // N = 30, S1/S2 hold for n = 10
  for (int kind : {1, 2}) {
    auto w = bad_partition_witness(kind, 10, host);
    CHECK(check_bad_partition(w.graph, 10, w.certificate).pass);
    CHECK(w.certificate.lambda > 0);
  }
}

TEST_CASE("3-color search: vacuous, found, and budget-zero cases") {
  auto vac = search_3color_lower_bound(1);
  CHECK(vac.coloring.has_value());
  CHECK(vac.exhausted);

  Search3Options opts;
  auto found = search_3color_lower_bound(2, opts);
  REQUIRE(found.coloring.has_value());
  CHECK(found.alpha_star_values.size() == 3);
  for (int c = 1; c <= 3; ++c) CHECK(alpha_star(*found.coloring, c).size <= 1);
  CHECK(found.coloring->num_vertices() == 5);

  Search3Options empty;
  empty.budget = 0;
  auto miss = search_3color_lower_bound(2, empty);
  CHECK_FALSE(miss.coloring.has_value());
  CHECK_FALSE(miss.exhausted);  // nothing was scanned, so nothing is proven
}

TEST_CASE("annealing path finds a K_5 coloring under a tight budget") {
  Search3Options opts;
  opts.budget = 50'000;  // below 3^10, forcing the annealing route
  opts.seed = 7;
  auto result = search_3color_lower_bound(2, opts);
  if (result.coloring) {  // best-effort: validate whatever it claims
    for (int c = 1; c <= 3; ++c) CHECK(alpha_star(*result.coloring, c).size <= 1);
  }
  CHECK(result.examined <= 50'000);
}
