#pragma once

#include "cmatch/matching.hpp"
#include "cmatch/multipartite.hpp"

namespace cmatch {

enum class Statement { Thm2Multipartite, Thm3Complete };
enum class VerifyMode { Exhaustive, Random };
enum class VerifyOutcome { Holds, Counterexample, SampledNoCounterexample, PartialNoCounterexample };

struct PreconditionCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

// N >= 2*x1 + x2 - 1 and N - n_i >= x1 + x2 - 1 for every part; x1 >= x2 >= 1
// and s >= 2 are hard preconditions.
PreconditionCheck check_preconditions_thm2(const MultipartiteSpec& spec, int x1, int x2);

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Exhaustive;
  std::uint64_t budget = 100'000'000;  // exhaustive cap on colorings
  std::uint64_t samples = 10'000;      // random mode
  std::uint64_t seed = 0;
  int threads = 0;
  bool force = false;           // run despite failed displayed conditions
  bool symmetry_break = false;  // pin edge 0 to color 1; needs equal x_i
};

struct VerificationReport {
  Statement statement = Statement::Thm2Multipartite;
  std::vector<int> parts;
  std::vector<int> x;
  VerifyMode mode = VerifyMode::Exhaustive;
  VerifyOutcome outcome = VerifyOutcome::Holds;
  unsigned __int128 total_colorings = 0;
  // Deterministic regardless of thread count: the lexicographic rank + 1 of
  // the reported counterexample, or the number of words scanned.
  std::uint64_t colorings_checked = 0;
  std::optional<ColoredMultipartiteGraph> counterexample;
  std::vector<int> counterexample_alpha_star;
  std::uint64_t counterexample_rank = 0;
  bool partial = false;  // exhaustive scan cut short by the budget
  bool forced = false;
  std::vector<std::string> precondition_violations;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  bool symmetry_break = false;
  double wall_seconds = 0.0;  // informational; not part of canonical output

  bool holds() const { return outcome == VerifyOutcome::Holds; }
};

// Scans every 2-coloring of the host (or samples, in random mode) for one
// with alpha'_*(G_i) < x_i in both colors. "Holds" is only reported from a
// completed exhaustive scan.
VerificationReport verify_thm2(const MultipartiteSpec& spec, int x1, int x2,
                               const VerifyOptions& opts = {});

// Same over 3-colorings of K_N with N = 2*x1 + x2 + x3 - 2.
VerificationReport verify_thm3(int x1, int x2, int x3, const VerifyOptions& opts = {});

// Plain single-threaded scans over enumerate_colorings with the certified
// alpha_star engine; no mask cache, no pruning. Kept as the reference the
// kernels are tested against.
VerificationReport verify_thm2_reference(const MultipartiteSpec& spec, int x1, int x2,
                                         std::uint64_t budget = 100'000'000, bool force = false);
VerificationReport verify_thm3_reference(int x1, int x2, int x3,
                                         std::uint64_t budget = 100'000'000);

struct NecessityEntry {
  int n1 = 0;  // 0 for figure 1 entries
  std::vector<int> alpha_star_values;
  bool below_n = false;
};

struct NecessityReport {
  int which = 1;
  int n = 1;
  std::vector<NecessityEntry> entries;
  bool confirmed = false;  // every entry below n in both colors
};

// which=1 measures figure1_coloring(n); which=2 measures figure2_coloring
// over the given n1 values (default n, 2n, 3n).
NecessityReport necessity_sweep(int n, int which, std::vector<int> n1_values = {});

std::string to_string(Statement s);
std::string to_string(VerifyMode m);
std::string to_string(VerifyOutcome o);

}  // namespace cmatch
