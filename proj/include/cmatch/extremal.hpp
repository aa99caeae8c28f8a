#pragma once

#include "cmatch/multipartite.hpp"
#include "cmatch/stability.hpp"

namespace cmatch {

// K_{3n-2} split into U1 (2n-1 vertices) and U2 (n-1 vertices); the edges
// between U1 and U2 are color 1 (red), everything else color 2 (blue). Both
// colors end up with connected-matching number n-1.
ColoredMultipartiteGraph figure1_coloring(int n);

// Host with one independent part U1 of size n1 plus 2(n-1) singletons split
// into U2 and U3. Edges incident with U2 are color 1 (red), the rest color 2
// (blue); edges inside U2 exist and are red. Both colors stay below n.
ColoredMultipartiteGraph figure2_coloring(int n, int n1);

struct WitnessResult {
  ColoredMultipartiteGraph graph;
  BadPartitionCertificate certificate;
};

// Transplants the figure colorings onto `host` and emits a certificate that
// passes check_bad_partition at the reported lambda. Kind 1 colors the
// (W1, W2) cut red and the rest blue; kind 2 colors the edges incident with
// U2 red and the rest blue. The host must satisfy the suitability size
// conditions (N >= 3n-1 and N - n_1 >= 2n-1).
WitnessResult bad_partition_witness(int kind, int n, const MultipartiteSpec& host);

struct Search3Options {
  std::uint64_t budget = 10'000'000;  // colorings examined, exhaustive or annealed
  int threads = 0;
  std::uint64_t seed = 0;
};

struct Search3Result {
  std::optional<ColoredMultipartiteGraph> coloring;
  std::vector<int> alpha_star_values;  // per color, for the found coloring
  bool exhausted = false;              // whole space scanned; a miss is definitive
  std::uint64_t examined = 0;
};

// Looks for a 3-coloring of K_{4n-3} with alpha'_*(G_i) <= n-1 for all i:
// exhaustive in lexicographic word order when 3^m fits the budget, simulated
// annealing over colorings otherwise. A not-found under annealing is
// inconclusive, not a nonexistence proof.
Search3Result search_3color_lower_bound(int n, const Search3Options& opts = {});

}  // namespace cmatch
