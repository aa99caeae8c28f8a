#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmatch/json_io.hpp"

using namespace cmatch;

TEST_CASE("graph JSON round-trips losslessly") {
  for (auto g : {figure1_coloring(3), figure2_coloring(3, 4)}) {
    auto j = graph_to_json(g);
    auto back = graph_from_json(j);
    CHECK(back.spec() == g.spec());
    CHECK(back.num_colors() == g.num_colors());
    CHECK(back.overlap_allowed() == g.overlap_allowed());
    for (std::int64_t id = 0; id < g.num_edges(); ++id)
      CHECK(back.edge_colors_by_id(id) == g.edge_colors_by_id(id));
    CHECK(graph_to_json(back) == j);
  }

  auto overlapping = ColoredMultipartiteGraph::build_complete(
      MultipartiteSpec({2, 1}), 2, true, [](int, int) { return ColorSet{0x3}; });
  auto j = graph_to_json(overlapping);
  CHECK(graph_from_json(j).edge_colors(0, 2) == ColorSet{0x3});
}

TEST_CASE("graph JSON loading rejects malformed inputs") {
  auto good = graph_to_json(figure1_coloring(2));

  auto missing = good;
  missing["edges"].erase(0);
  CHECK_THROWS_WITH_AS(graph_from_json(missing),
                       doctest::Contains("missing from graph JSON"), invalid_input);

  auto same_part = graph_to_json(ColoredMultipartiteGraph::build_complete(
      MultipartiteSpec({2, 1}), 2, false, [](int, int) { return color_bit(1); }));
  same_part["edges"].push_back({{"u", 0}, {"v", 1}, {"colors", {1}}});
  CHECK_THROWS_WITH_AS(graph_from_json(same_part), doctest::Contains("same part"),
                       invalid_input);

  auto dup = good;
  dup["edges"].push_back(dup["edges"][0]);
  CHECK_THROWS_WITH_AS(graph_from_json(dup), doctest::Contains("duplicate"), invalid_input);

  auto empty_colors = good;
  empty_colors["edges"][0]["colors"] = json::array();
  CHECK_THROWS_WITH_AS(graph_from_json(empty_colors), doctest::Contains("empty color set"),
                       invalid_input);

  auto bad_color = good;
  bad_color["edges"][0]["colors"] = {5};
  CHECK_THROWS_AS(graph_from_json(bad_color), invalid_input);

  auto overlap_violation = good;  // overlap on a graph declaring singleton colors
  overlap_violation["edges"][0]["colors"] = {1, 2};
  CHECK_THROWS_AS(graph_from_json(overlap_violation), invalid_input);
}

TEST_CASE("certificate JSON round-trips") {
  auto g = figure1_coloring(3);
  auto cert = alpha_star(g, 2);
  auto back = matching_from_json(matching_to_json(cert));
  CHECK(back.size == cert.size);
  CHECK(back.edges == cert.edges);
  CHECK(back.component_id == cert.component_id);

  auto global = max_matching(g, 1);
  global.component_id.reset();
  auto j = matching_to_json(global);
  CHECK(j["component"].is_null());
  CHECK_FALSE(matching_from_json(j).component_id.has_value());
}

TEST_CASE("bad partition certificates keep exact rationals through JSON") {
  MultipartiteSpec host({10, 10, 10});
  for (int kind : {1, 2}) {
    auto w = bad_partition_witness(kind, 10, host);
    auto j = bad_partition_to_json(w.certificate);
    auto back = bad_partition_from_json(j);
    CHECK(back.kind == w.certificate.kind);
    CHECK(back.lambda == w.certificate.lambda);
    CHECK(back.color_i == w.certificate.color_i);
    if (kind == 1) {
      CHECK(back.w1 == w.certificate.w1);
      CHECK(back.w2 == w.certificate.w2);
    } else {
      CHECK(back.part_j == w.certificate.part_j);
      CHECK(back.u1 == w.certificate.u1);
      CHECK(back.u2 == w.certificate.u2);
    }
    CHECK(check_bad_partition(w.graph, 10, back).pass);
  }
}

TEST_CASE("verification report JSON carries the counterexample graph") {
  VerifyOptions opts;
  opts.force = true;
  auto rep = verify_thm2(MultipartiteSpec({1, 1, 1, 1}), 2, 2, opts);
  auto j = verification_to_json(rep);
  CHECK(j["outcome"] == "counterexample");
  CHECK(j["total_colorings"] == 64);
  auto g = graph_from_json(j["counterexample"]["graph"]);
  CHECK(alpha_star(g, 1).size == 1);
  CHECK(alpha_star(g, 2).size == 1);
  CHECK_FALSE(j.contains("wall_ms"));
  CHECK(verification_to_json(rep, true).contains("wall_ms"));
}

TEST_CASE("decomposition and report JSON shapes") {
  auto g = figure1_coloring(2);
  auto dec = ge_decompose(g, 2);
  auto j = ge_to_json(dec);
  CHECK(j.contains("A"));
  CHECK(j.contains("C"));
  CHECK(j.contains("D_components"));
  CHECK(j.size() == 3);  // exactly the documented keys

  auto nj = necessity_to_json(necessity_sweep(2, 1));
  CHECK(nj["confirmed"] == true);
  CHECK(nj["entries"][0]["alpha_star"] == json::array({1, 1}));

  auto s3 = search3_to_json(search_3color_lower_bound(1));
  CHECK(s3["found"] == true);
}
