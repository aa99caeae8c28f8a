#include "cmatch/json_io.hpp"

#include <algorithm>

namespace cmatch {

namespace {

json u128_to_json(unsigned __int128 v) {
  if (v <= (std::uint64_t(1) << 53)) return static_cast<std::uint64_t>(v);
  std::string digits;
  while (v) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::vector<int> colors_of(ColorSet cs, int num_colors) {
  std::vector<int> out;
  for (int c = 1; c <= num_colors; ++c)
    if (cs & color_bit(c)) out.push_back(c);
  return out;
}

}  // namespace

json graph_to_json(const ColoredMultipartiteGraph& g) {
  json edges = json::array();
  for (std::int64_t id = 0; id < g.num_edges(); ++id) {
    auto [u, v] = g.spec().edge_endpoints(id);
    edges.push_back(
        {{"u", u}, {"v", v}, {"colors", colors_of(g.edge_colors_by_id(id), g.num_colors())}});
  }
  return {{"parts", g.spec().part_sizes()},
          {"num_colors", g.num_colors()},
          {"overlap_allowed", g.overlap_allowed()},
          {"edges", std::move(edges)}};
}

ColoredMultipartiteGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw invalid_input("graph JSON must be an object");
  for (const char* key : {"parts", "num_colors", "overlap_allowed", "edges"})
    if (!j.contains(key)) throw invalid_input(std::string("graph JSON missing '") + key + "'");
  MultipartiteSpec spec(j.at("parts").get<std::vector<int>>());
  int num_colors = j.at("num_colors").get<int>();
  bool overlap = j.at("overlap_allowed").get<bool>();
  if (num_colors < 1 || num_colors > kMaxColors) throw invalid_input("num_colors must be in 1..3");

  std::vector<ColorSet> edge_colors(spec.cross_pair_count(), 0);
  std::vector<bool> present(spec.cross_pair_count(), false);
  for (const auto& e : j.at("edges")) {
    int u = e.at("u").get<int>();
    int v = e.at("v").get<int>();
    if (u < 0 || v < 0 || u >= spec.total() || v >= spec.total() || u == v)
      throw invalid_input("edge endpoints out of range: (" + std::to_string(u) + "," +
                          std::to_string(v) + ")");
    std::int64_t id = spec.edge_id(u, v);
    if (id < 0)
      throw invalid_input("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") joins vertices of the same part");
    if (present[id])
      throw invalid_input("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    present[id] = true;
    ColorSet cs = 0;
    for (int c : e.at("colors").get<std::vector<int>>()) {
      if (c < 1 || c > num_colors)
        throw invalid_input("color " + std::to_string(c) + " out of range on edge (" +
                            std::to_string(u) + "," + std::to_string(v) + ")");
      cs |= color_bit(c);
    }
    edge_colors[id] = cs;
  }
  for (std::int64_t id = 0; id < spec.cross_pair_count(); ++id)
    if (!present[id]) {
      auto [u, v] = spec.edge_endpoints(id);
      throw invalid_input("cross-part edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") missing from graph JSON");
    }
  return ColoredMultipartiteGraph::from_edge_colors(std::move(spec), num_colors, overlap,
                                                    edge_colors);
}

json matching_to_json(const MatchingCertificate& cert) {
  json edges = json::array();
  for (auto [u, v] : cert.edges) edges.push_back({u, v});
  json out = {{"size", cert.size}, {"edges", std::move(edges)}};
  out["component"] = cert.component_id ? json(*cert.component_id) : json(nullptr);
  return out;
}

MatchingCertificate matching_from_json(const json& j) {
  MatchingCertificate cert;
  cert.size = j.at("size").get<int>();
  for (const auto& e : j.at("edges")) {
    int u = e.at(0).get<int>();
    int v = e.at(1).get<int>();
    cert.edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (j.contains("component") && !j.at("component").is_null())
    cert.component_id = j.at("component").get<int>();
  return cert;
}

json cover_to_json(const CoverCertificate& cert) { return {{"cover", cert.vertices}}; }

json ge_to_json(const GEDecomposition& dec) {
  return {{"A", dec.A}, {"C", dec.C}, {"D_components", dec.d_components}};
}

json ge_verify_to_json(const GEVerifyReport& rep) {
  return {{"pass", rep.pass},
          {"first_violation", rep.first_violation},
          {"subset_check_sampled", rep.subset_check_sampled}};
}

json suitability_to_json(const SuitabilityReport& rep) {
  return {{"s1_ok", rep.s1_ok},
          {"s2_ok", rep.s2_ok},
          {"s3_ok", rep.s3_ok},
          {"tilde_sets", rep.tilde_sets},
          {"tilde_total", rep.tilde_total},
          {"suitable", rep.suitable()}};
}

namespace {

json measured_to_json(int kind, const BadPartitionMeasured& m) {
  if (kind == 1)
    return {{"w1_size", m.w1_size},
            {"w2_size", m.w2_size},
            {"cross_edges_color_i", m.cross_edges_color_i},
            {"inside_w1_other_color", m.inside_w1_other_color}};
  return {{"vj_size", m.vj_size},
          {"u1_size", m.u1_size},
          {"u2_size", m.u2_size},
          {"vj_u1_color_i", m.vj_u1_color_i},
          {"vj_u2_other_color", m.vj_u2_other_color}};
}

BadPartitionMeasured measured_from_json(int kind, const json& j) {
  BadPartitionMeasured m;
  if (kind == 1) {
    m.w1_size = j.value("w1_size", 0);
    m.w2_size = j.value("w2_size", 0);
    m.cross_edges_color_i = j.value("cross_edges_color_i", std::int64_t(0));
    m.inside_w1_other_color = j.value("inside_w1_other_color", std::int64_t(0));
  } else {
    m.vj_size = j.value("vj_size", 0);
    m.u1_size = j.value("u1_size", 0);
    m.u2_size = j.value("u2_size", 0);
    m.vj_u1_color_i = j.value("vj_u1_color_i", std::int64_t(0));
    m.vj_u2_other_color = j.value("vj_u2_other_color", std::int64_t(0));
  }
  return m;
}

}  // namespace

json bad_partition_to_json(const BadPartitionCertificate& cert) {
  json out = {{"kind", cert.kind},
              {"lambda", rational_to_string(cert.lambda)},
              {"i", cert.color_i}};
  if (cert.kind == 1) {
    out["W1"] = cert.w1;
    out["W2"] = cert.w2;
  } else {
    out["j"] = cert.part_j + 1;  // 1-based in the wire format
    out["U1"] = cert.u1;
    out["U2"] = cert.u2;
  }
  out["measured"] = measured_to_json(cert.kind, cert.measured);
  return out;
}

BadPartitionCertificate bad_partition_from_json(const json& j) {
  BadPartitionCertificate cert;
  cert.kind = j.at("kind").get<int>();
  if (cert.kind != 1 && cert.kind != 2) throw invalid_input("certificate kind must be 1 or 2");
  cert.lambda = parse_rational(j.at("lambda").is_string()
                                   ? j.at("lambda").get<std::string>()
                                   : j.at("lambda").dump());
  cert.color_i = j.at("i").get<int>();
  if (cert.kind == 1) {
    cert.w1 = j.at("W1").get<std::vector<int>>();
    cert.w2 = j.at("W2").get<std::vector<int>>();
  } else {
    cert.part_j = j.at("j").get<int>() - 1;
    cert.u1 = j.at("U1").get<std::vector<int>>();
    cert.u2 = j.at("U2").get<std::vector<int>>();
  }
  if (j.contains("measured")) cert.measured = measured_from_json(cert.kind, j.at("measured"));
  return cert;
}

json bad_partition_check_to_json(const BadPartitionCheck& check) {
  json clauses = json::array();
  for (const auto& c : check.clauses)
    clauses.push_back({{"clause", c.clause}, {"ok", c.ok}, {"detail", c.detail}});
  return {{"pass", check.pass}, {"clauses", std::move(clauses)}};
}

json stability_search_to_json(const StabilitySearchResult& result) {
  json out = {{"found", result.certificate.has_value()},
              {"exhaustive", result.exhaustive},
              {"examined", result.examined}};
  if (result.certificate) out["certificate"] = bad_partition_to_json(*result.certificate);
  return out;
}

json audit_to_json(const AuditReport& rep) {
  json out = {{"strict_mode_ok", rep.strict_mode.ok},
              {"strict_violations", rep.strict_mode.violations},
              {"non_probative", rep.non_probative},
              {"suitability", suitability_to_json(rep.suitability)},
              {"alpha_star", {rep.alpha_star_1, rep.alpha_star_2}},
              {"hypothesis_met", rep.hypothesis_met}};
  if (rep.large_matching) out["matching"] = matching_to_json(*rep.large_matching);
  if (rep.hypothesis_met) {
    out["lambda"] = rational_to_string(rep.lambda);
    out["search"] = stability_search_to_json(rep.search);
  }
  return out;
}

json verification_to_json(const VerificationReport& rep, bool include_timing) {
  json params = {{"x", rep.x}};
  if (rep.statement == Statement::Thm2Multipartite)
    params["parts"] = rep.parts;
  else
    params["N"] = static_cast<int>(rep.parts.size());
  json out = {{"statement", to_string(rep.statement)},
              {"params", std::move(params)},
              {"mode", to_string(rep.mode)},
              {"total_colorings", u128_to_json(rep.total_colorings)},
              {"colorings_checked", rep.colorings_checked},
              {"outcome", to_string(rep.outcome)},
              {"partial", rep.partial},
              {"forced", rep.forced},
              {"seed", rep.seed},
              {"symmetry_break", rep.symmetry_break}};
  if (!rep.precondition_violations.empty())
    out["precondition_violations"] = rep.precondition_violations;
  if (rep.mode == VerifyMode::Random) out["samples"] = rep.samples;
  if (rep.counterexample) {
    out["counterexample"] = {{"graph", graph_to_json(*rep.counterexample)},
                             {"alpha_star", rep.counterexample_alpha_star},
                             {"rank", rep.counterexample_rank}};
  }
  if (include_timing) out["wall_ms"] = rep.wall_seconds * 1000.0;
  return out;
}

json necessity_to_json(const NecessityReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json entry = {{"alpha_star", e.alpha_star_values}, {"below_n", e.below_n}};
    if (rep.which == 2) entry["n1"] = e.n1;
    entries.push_back(std::move(entry));
  }
  return {{"which", rep.which}, {"n", rep.n}, {"entries", std::move(entries)},
          {"confirmed", rep.confirmed}};
}

json search3_to_json(const Search3Result& result) {
  json out = {{"found", result.coloring.has_value()},
              {"exhausted", result.exhausted},
              {"examined", result.examined}};
  if (result.coloring) {
    out["graph"] = graph_to_json(*result.coloring);
    out["alpha_star"] = result.alpha_star_values;
  }
  return out;
}

}  // namespace cmatch
