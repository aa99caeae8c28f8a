// Command-line front end: every subcommand reads/writes the JSON formats of
// the library and reports through exit codes (0 success/holds/pass,
// 1 counterexample/fail, 2 inconclusive, 3 usage or malformed input).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "cmatch/json_io.hpp"

namespace {

using namespace cmatch;

struct GlobalFlags {
  int threads = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 100'000'000;
  std::uint64_t samples = 10'000;
  bool force = false;
  bool verbose = false;
  bool timing = false;
};

ColoredMultipartiteGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open graph file: " + path);
  json j = json::parse(in);  // parse errors carry the byte position
  return graph_from_json(j);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open file: " + path);
  return json::parse(in);
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

void note(const GlobalFlags& flags, const std::string& text) {
  if (flags.verbose) std::cerr << text << "\n";
}

int verify_exit_code(const VerificationReport& rep) {
  switch (rep.outcome) {
    case VerifyOutcome::Holds:
      return 0;
    case VerifyOutcome::Counterexample:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"connected-matching toolkit: matchings, decompositions, extremal colorings,"
               " exhaustive theorem checks and stability audits on complete multipartite hosts"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--threads", flags.threads, "worker threads (0 = hardware default)");
  app.add_option("--seed", flags.seed, "seed for all randomized operations");
  app.add_option("--budget", flags.budget, "cap on exhaustively examined colorings");
  app.add_option("--samples", flags.samples, "sample count for random mode");
  app.add_flag("--force", flags.force, "run verifications despite failed size conditions");
  app.add_flag("--verbose", flags.verbose, "human-readable summary on stderr");
  app.add_flag("--timing", flags.timing, "include wall-clock fields in JSON output");

  int exit_code = 0;

  // alpha-star / matching ----------------------------------------------------
  std::string graph_path;
  int color = 1;
  auto* alpha_cmd = app.add_subcommand("alpha-star", "largest connected matching in one color")->fallthrough();
  alpha_cmd->add_option("--graph", graph_path)->required();
  alpha_cmd->add_option("--color", color)->required();
  alpha_cmd->callback([&] {
    auto g = load_graph(graph_path);
    auto cert = alpha_star(g, color);
    note(flags, "alpha'_* = " + std::to_string(cert.size));
    emit(matching_to_json(cert));
  });

  auto* match_cmd = app.add_subcommand("matching", "maximum matching in one color")->fallthrough();
  match_cmd->add_option("--graph", graph_path)->required();
  match_cmd->add_option("--color", color)->required();
  match_cmd->callback([&] {
    auto g = load_graph(graph_path);
    auto cert = max_matching(g, color);
    note(flags, "alpha' = " + std::to_string(cert.size));
    emit(matching_to_json(cert));
  });

  // konig ---------------------------------------------------------------------
  std::vector<int> w1, w2;
  auto* konig_cmd = app.add_subcommand("konig", "matching + minimum cover of a bipartite view")->fallthrough();
  konig_cmd->add_option("--graph", graph_path)->required();
  konig_cmd->add_option("--color", color)->required();
  konig_cmd->add_option("--w1", w1)->required()->delimiter(',');
  konig_cmd->add_option("--w2", w2)->required()->delimiter(',');
  konig_cmd->callback([&] {
    auto g = load_graph(graph_path);
    auto [mc, cc] = konig_cover(g, color, w1, w2);
    note(flags, "matching " + std::to_string(mc.size) + ", cover " + std::to_string(cc.size));
    emit(json{{"matching", matching_to_json(mc)}, {"cover", cover_to_json(cc)}});
  });

  // ge --------------------------------------------------------------------------
  std::vector<int> restrict_set;
  bool ge_verify_flag = false;
  auto* ge_cmd = app.add_subcommand("ge", "Gallai-Edmonds decomposition of a color subgraph")->fallthrough();
  ge_cmd->add_option("--graph", graph_path)->required();
  ge_cmd->add_option("--color", color)->required();
  ge_cmd->add_option("--restrict", restrict_set, "vertex subset to decompose")->delimiter(',');
  ge_cmd->add_flag("--check", ge_verify_flag, "also run the structural checks");
  ge_cmd->callback([&] {
    auto g = load_graph(graph_path);
    std::optional<std::vector<int>> restrict_opt;
    if (!restrict_set.empty()) restrict_opt = restrict_set;
    auto dec = ge_decompose(g, color, restrict_opt, flags.threads);
    if (ge_verify_flag) {
      GEOptions opts;
      opts.threads = flags.threads;
      opts.seed = flags.seed;
      auto rep = verify_ge(dec, g, color, restrict_opt, opts);
      note(flags, rep.pass ? "checks pass" : "violation: " + rep.first_violation);
      emit(json{{"decomposition", ge_to_json(dec)}, {"verify", ge_verify_to_json(rep)}});
      if (!rep.pass) exit_code = 1;
    } else {
      emit(ge_to_json(dec));
    }
  });

  // bound -----------------------------------------------------------------------
  std::vector<int> bound_parts;
  std::int64_t defect = 0;
  auto* bound_cmd = app.add_subcommand("bound", "complete-multipartite matching lower bound")->fallthrough();
  bound_cmd->add_option("--parts", bound_parts)->required()->delimiter(',');
  bound_cmd->add_option("--defect", defect);
  bound_cmd->callback([&] {
    emit(json{{"value", multipartite_matching_bound(bound_parts, defect)}});
  });

  // extremal ----------------------------------------------------------------------
  auto* extremal_cmd = app.add_subcommand("extremal", "lower-bound constructions and searches")->fallthrough();
  extremal_cmd->require_subcommand(1);
  int ex_n = 1, ex_n1 = 1, ex_kind = 1;
  std::vector<int> ex_parts;

  auto* fig1_cmd = extremal_cmd->add_subcommand("fig1", "two-coloring of K_{3n-2} below M_n")->fallthrough();
  fig1_cmd->add_option("--n", ex_n)->required();
  fig1_cmd->callback([&] { emit(graph_to_json(figure1_coloring(ex_n))); });

  auto* fig2_cmd = extremal_cmd->add_subcommand("fig2", "two-coloring with one big part below M_n")->fallthrough();
  fig2_cmd->add_option("--n", ex_n)->required();
  fig2_cmd->add_option("--n1", ex_n1)->required();
  fig2_cmd->callback([&] { emit(graph_to_json(figure2_coloring(ex_n, ex_n1))); });

  auto* bad_cmd = extremal_cmd->add_subcommand("bad", "bad-partition witness coloring")->fallthrough();
  bad_cmd->add_option("--kind", ex_kind)->required();
  bad_cmd->add_option("--n", ex_n)->required();
  bad_cmd->add_option("--parts", ex_parts)->required()->delimiter(',');
  bad_cmd->callback([&] {
    auto result = bad_partition_witness(ex_kind, ex_n, MultipartiteSpec(ex_parts));
    emit(json{{"graph", graph_to_json(result.graph)},
              {"certificate", bad_partition_to_json(result.certificate)}});
  });

  auto* search3_cmd = extremal_cmd->add_subcommand("search3", "3-coloring of K_{4n-3} below M_n")->fallthrough();
  search3_cmd->add_option("--n", ex_n)->required();
  search3_cmd->callback([&] {
    Search3Options opts;
    opts.budget = flags.budget;
    opts.threads = flags.threads;
    opts.seed = flags.seed;
    auto result = search_3color_lower_bound(ex_n, opts);
    emit(search3_to_json(result));
    if (!result.coloring) exit_code = result.exhausted ? 1 : 2;
  });

  // verify ---------------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "theorem checks on concrete instances")->fallthrough();
  verify_cmd->require_subcommand(1);
  std::vector<int> v_parts, v_x, v_n1s;
  std::string v_mode = "exhaustive";
  int v_n = 1, v_which = 1;
  bool v_symmetry = false;

  auto make_opts = [&] {
    VerifyOptions opts;
    opts.mode = v_mode == "random" ? VerifyMode::Random : VerifyMode::Exhaustive;
    opts.budget = flags.budget;
    opts.samples = flags.samples;
    opts.seed = flags.seed;
    opts.threads = flags.threads;
    opts.force = flags.force;
    opts.symmetry_break = v_symmetry;
    return opts;
  };

  auto* thm2_cmd = verify_cmd->add_subcommand("thm2", "two colors on a multipartite host")->fallthrough();
  thm2_cmd->add_option("--parts", v_parts)->required()->delimiter(',');
  thm2_cmd->add_option("--x", v_x)->required()->delimiter(',');
  thm2_cmd->add_option("--mode", v_mode)->check(CLI::IsMember({"exhaustive", "random"}));
  thm2_cmd->add_flag("--symmetry-break", v_symmetry);
  thm2_cmd->callback([&] {
    if (v_x.size() != 2) throw invalid_input("thm2 needs --x x1,x2");
    auto rep = verify_thm2(MultipartiteSpec(v_parts), v_x[0], v_x[1], make_opts());
    note(flags, to_string(rep.outcome) + " after " + std::to_string(rep.colorings_checked) +
                    " colorings (" + std::to_string(rep.wall_seconds) + " s)");
    emit(verification_to_json(rep, flags.timing));
    exit_code = verify_exit_code(rep);
  });

  auto* thm3_cmd = verify_cmd->add_subcommand("thm3", "three colors on a complete host")->fallthrough();
  thm3_cmd->add_option("--x", v_x)->required()->delimiter(',');
  thm3_cmd->add_option("--mode", v_mode)->check(CLI::IsMember({"exhaustive", "random"}));
  thm3_cmd->add_flag("--symmetry-break", v_symmetry);
  thm3_cmd->callback([&] {
    if (v_x.size() != 3) throw invalid_input("thm3 needs --x x1,x2,x3");
    auto rep = verify_thm3(v_x[0], v_x[1], v_x[2], make_opts());
    note(flags, to_string(rep.outcome) + " after " + std::to_string(rep.colorings_checked) +
                    " colorings (" + std::to_string(rep.wall_seconds) + " s)");
    emit(verification_to_json(rep, flags.timing));
    exit_code = verify_exit_code(rep);
  });

  auto* necessity_cmd = verify_cmd->add_subcommand("necessity", "measure the figure colorings")->fallthrough();
  necessity_cmd->add_option("--n", v_n)->required();
  necessity_cmd->add_option("--which", v_which)->required()->check(CLI::IsMember({1, 2}));
  necessity_cmd->add_option("--n1", v_n1s)->delimiter(',');
  necessity_cmd->callback([&] {
    auto rep = necessity_sweep(v_n, v_which, v_n1s);
    emit(necessity_to_json(rep));
    exit_code = rep.confirmed ? 0 : 1;
  });

  // stability --------------------------------------------------------------------
  auto* stability_cmd = app.add_subcommand("stability", "suitability, bad partitions, audits")->fallthrough();
  stability_cmd->require_subcommand(1);
  std::string eps_text = "1/100", gamma_text = "1/10", lambda_text = "1/10";
  std::string cert_path, lambda_factor_text = "68";
  int st_n = 1;
  std::vector<int> st_colors{1, 2}, st_kinds{1, 2};
  bool count_exclusive = false;

  auto search_opts = [&] {
    StabilitySearchOptions opts;
    opts.threads = flags.threads;
    opts.seed = flags.seed;
    opts.counting = count_exclusive ? OverlapCounting::ExclusiveOnly : OverlapCounting::PerColor;
    for (int kind : st_kinds)
      for (int i : st_colors) opts.targets.emplace_back(i, kind);
    return opts;
  };

  auto* suitable_cmd = stability_cmd->add_subcommand("suitable", "size + degree conditions")->fallthrough();
  suitable_cmd->add_option("--graph", graph_path)->required();
  suitable_cmd->add_option("--n", st_n)->required();
  suitable_cmd->add_option("--eps", eps_text)->required();
  suitable_cmd->callback([&] {
    auto rep = check_suitability(load_graph(graph_path), st_n, parse_rational(eps_text));
    emit(suitability_to_json(rep));
    exit_code = rep.suitable() ? 0 : 1;
  });

  auto* check_cmd = stability_cmd->add_subcommand("check", "evaluate a certificate's clauses")->fallthrough();
  check_cmd->add_option("--graph", graph_path)->required();
  check_cmd->add_option("--n", st_n)->required();
  check_cmd->add_option("--cert", cert_path)->required();
  check_cmd->add_flag("--count-exclusive", count_exclusive,
                      "overlapping edges count for neither single color");
  check_cmd->callback([&] {
    auto g = load_graph(graph_path);
    auto cert = bad_partition_from_json(load_json(cert_path));
    auto check = check_bad_partition(
        g, st_n, cert,
        count_exclusive ? OverlapCounting::ExclusiveOnly : OverlapCounting::PerColor);
    emit(bad_partition_check_to_json(check));
    exit_code = check.pass ? 0 : 1;
  });

  auto* search_cmd = stability_cmd->add_subcommand("search", "look for a bad partition")->fallthrough();
  search_cmd->add_option("--graph", graph_path)->required();
  search_cmd->add_option("--n", st_n)->required();
  search_cmd->add_option("--lambda", lambda_text)->required();
  search_cmd->add_option("--colors", st_colors)->delimiter(',');
  search_cmd->add_option("--kinds", st_kinds)->delimiter(',');
  search_cmd->add_flag("--count-exclusive", count_exclusive);
  search_cmd->callback([&] {
    auto result = search_bad_partition(load_graph(graph_path), st_n, parse_rational(lambda_text),
                                       search_opts());
    emit(stability_search_to_json(result));
    if (!result.certificate) exit_code = result.exhaustive ? 1 : 2;
  });

  auto* audit_cmd = stability_cmd->add_subcommand("audit", "stability-theorem shaped audit")->fallthrough();
  audit_cmd->add_option("--graph", graph_path)->required();
  audit_cmd->add_option("--n", st_n)->required();
  audit_cmd->add_option("--gamma", gamma_text)->required();
  audit_cmd->add_option("--eps", eps_text)->required();
  audit_cmd->add_option("--lambda-factor", lambda_factor_text);
  audit_cmd->add_flag("--count-exclusive", count_exclusive);
  audit_cmd->callback([&] {
    auto rep = audit_stability(load_graph(graph_path), st_n, parse_rational(gamma_text),
                               parse_rational(eps_text), parse_rational(lambda_factor_text),
                               search_opts());
    if (rep.non_probative)
      note(flags, "relaxed constants: this run is not probative for the theorem");
    emit(audit_to_json(rep));
    if (rep.hypothesis_met && !rep.search.certificate)
      exit_code = rep.search.exhaustive ? 1 : 2;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;  // --help exits cleanly
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const budget_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
