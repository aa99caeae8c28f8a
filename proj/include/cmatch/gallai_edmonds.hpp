#pragma once

#include "cmatch/matching.hpp"

namespace cmatch {

// (A, C, D) partition of a color subgraph: D = vertices missed by at least
// one maximum matching, A = vertices outside D with a neighbor in D, C = the
// rest. d_components lists the components of G[D], largest first, ties by
// lowest vertex.
struct GEDecomposition {
  std::vector<int> A, C, D;  // ascending
  std::vector<std::vector<int>> d_components;
  int a = 0;  // |A|
  int k = 0;  // number of components of G[D]
  int matching_size = 0;
};

struct GEOptions {
  int threads = 0;               // 0 = library default
  int subset_cap = 12;           // exhaustive cap on |A| for the neighborhood clause
  std::uint64_t seed = 0;        // sampling seed beyond the cap
  std::uint64_t samples = 4096;  // sampled subsets beyond the cap
};

// Classifies each vertex by re-running the matching with it deleted; the
// per-vertex loop is parallel, merged in vertex order.
GEDecomposition ge_decompose(const ColoredMultipartiteGraph& g, int color,
                             std::optional<std::vector<int>> restrict_to = std::nullopt,
                             int threads = 0);

// No perfect matching, but deleting any single vertex leaves one. A single
// vertex is factor-critical (the empty matching is perfect after deletion).
bool is_factor_critical(const ColoredMultipartiteGraph& g, int color,
                        std::span<const int> vertices);

struct GEVerifyReport {
  bool pass = true;
  std::string first_violation;  // empty when pass
  bool subset_check_sampled = false;
};

// Checks, for one computed maximum matching: (a) it covers C and matches A
// into distinct D-components; (b) each D-component is factor-critical and
// near-perfectly matched; (c) every nonempty S within A touches at least
// |S|+1 components (sampled and flagged when |A| exceeds the cap).
GEVerifyReport verify_ge(const GEDecomposition& dec, const ColoredMultipartiteGraph& g, int color,
                         std::optional<std::vector<int>> restrict_to = std::nullopt,
                         const GEOptions& opts = {});

}  // namespace cmatch
