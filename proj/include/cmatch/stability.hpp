#pragma once

#include <boost/rational.hpp>

#include "cmatch/matching.hpp"

namespace cmatch {

// All boundary inequalities in this module are decided in exact rational
// arithmetic; nothing here touches floating point.
using Rational = boost::rational<long long>;

Rational parse_rational(const std::string& text);   // accepts "p/q", "3", "0.25"
std::string rational_to_string(const Rational& r);  // canonical "p/q" or "p"

// Size conditions of suitability, exposed for boundary tests. S1 and S2 are
// non-strict; S3 is strict, exactly as displayed.
bool suitability_s1(const MultipartiteSpec& spec, int n);  // N >= 3n-1
bool suitability_s2(const MultipartiteSpec& spec, int n);  // n_2+...+n_s >= 2n-1
bool suitability_s3(int tilde_total, const Rational& eps, int n);
// degree <= N - eps*n - n_i, decided exactly; degree is taken in the union
// graph over all colors.
bool low_degree(int degree, int total, int part_size, const Rational& eps, int n);

struct SuitabilityReport {
  bool s1_ok = false;
  bool s2_ok = false;
  bool s3_ok = false;
  std::vector<std::vector<int>> tilde_sets;  // low-degree vertices per part
  int tilde_total = 0;
  bool suitable() const { return s1_ok && s2_ok && s3_ok; }
};

SuitabilityReport check_suitability(const ColoredMultipartiteGraph& g, int n, const Rational& eps);

// How |E(G_i[...])| treats an edge carrying both colors: PerColor counts it
// for each color it carries (the counts as written); ExclusiveOnly counts it
// for neither single color, so an overlapping edge is never double charged.
enum class OverlapCounting {
  PerColor,
  ExclusiveOnly,
};

struct BadPartitionMeasured {
  // kind 1
  int w1_size = 0;
  int w2_size = 0;
  std::int64_t cross_edges_color_i = 0;    // |E(G_i[W1,W2])|
  std::int64_t inside_w1_other_color = 0;  // |E(G_{3-i}[W1])|
  // kind 2
  int vj_size = 0;
  int u1_size = 0;
  int u2_size = 0;
  std::int64_t vj_u1_color_i = 0;      // |E(G_i[Vj,U1])|
  std::int64_t vj_u2_other_color = 0;  // |E(G_{3-i}[Vj,U2])|
};

// Kind 1 is the two-block shape (W1, W2); kind 2 fixes one spec part V_j and
// splits the rest into U1 and U2.
struct BadPartitionCertificate {
  int kind = 1;  // 1 or 2
  Rational lambda{0};
  int color_i = 1;
  std::vector<int> w1, w2;  // kind 1
  int part_j = 0;           // kind 2, 0-based
  std::vector<int> u1, u2;  // kind 2
  BadPartitionMeasured measured;
};

struct ClauseResult {
  std::string clause;
  bool ok = true;
  std::string detail;
};

struct BadPartitionCheck {
  bool pass = false;
  std::vector<ClauseResult> clauses;
  BadPartitionMeasured measured;  // recomputed from the graph
  std::string first_failed() const;
};

// Evaluates every inequality of the definition the certificate names. The
// blocks must partition V(G) (and V_j must be exactly part j for kind 2);
// violations of that precondition throw, failed inequalities are reported.
BadPartitionCheck check_bad_partition(const ColoredMultipartiteGraph& g, int n,
                                      const BadPartitionCertificate& cert,
                                      OverlapCounting counting = OverlapCounting::PerColor);

struct StabilitySearchOptions {
  int threads = 0;
  // (color i, kind j) pairs to try, in order; empty = all four, kind-major.
  std::vector<std::pair<int, int>> targets;
  std::uint64_t heuristic_iters = 20'000;
  std::uint64_t seed = 0;
  OverlapCounting counting = OverlapCounting::PerColor;
  int exhaustive_max_n = 16;
};

struct StabilitySearchResult {
  std::optional<BadPartitionCertificate> certificate;
  bool exhaustive = false;  // the whole space was scanned; a miss is definitive
  std::uint64_t examined = 0;
};

// Exhaustive over all block choices when N <= exhaustive_max_n (first find in
// canonical order: kind, color, block mask); best-effort local search beyond.
// Every returned certificate passes check_bad_partition.
StabilitySearchResult search_bad_partition(const ColoredMultipartiteGraph& g, int n,
                                           const Rational& lambda,
                                           const StabilitySearchOptions& opts = {});

struct StrictModeCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

// The theorem's regime: 0 < eps < gamma/1000 < 10^-6 and n > 100/gamma.
StrictModeCheck check_strict_regime(int n, int s, const Rational& eps, const Rational& gamma);

struct AuditReport {
  StrictModeCheck strict_mode;
  bool non_probative = false;  // set whenever the strict regime fails
  SuitabilityReport suitability;
  int alpha_star_1 = 0;
  int alpha_star_2 = 0;
  bool hypothesis_met = false;  // max alpha'_* <= n(1+gamma)
  std::optional<MatchingCertificate> large_matching;
  Rational lambda{0};
  StabilitySearchResult search;
};

// Measures both connected-matching numbers; when the hypothesis fails the
// certificate of the large matching is reported, otherwise a bad partition is
// searched at lambda = lambda_factor * gamma.
AuditReport audit_stability(const ColoredMultipartiteGraph& g, int n, const Rational& gamma,
                            const Rational& eps, const Rational& lambda_factor = Rational(68),
                            const StabilitySearchOptions& opts = {});

}  // namespace cmatch
