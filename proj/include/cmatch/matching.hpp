#pragma once

#include <optional>
#include <span>
#include <utility>

#include "cmatch/multipartite.hpp"

namespace cmatch {

// A set of vertex-disjoint edges; component_id, when present, names the
// component of the color subgraph that contains every matched vertex.
struct MatchingCertificate {
  std::vector<std::pair<int, int>> edges;  // u < v, sorted
  int size = 0;
  std::optional<int> component_id;
};

struct CoverCertificate {
  std::vector<int> vertices;  // sorted
  int size = 0;
};

// Maximum matching on an explicit adjacency list (general graphs, blossom
// contraction). Returns the mate array (-1 = unmatched). Deterministic for a
// fixed adjacency order.
std::vector<int> blossom_max_matching(const std::vector<std::vector<int>>& adj);

// alpha'(G_i): maximum matching over the whole color subgraph.
MatchingCertificate max_matching(const ColoredMultipartiteGraph& g, int color);

// Restriction to an arbitrary vertex subset.
MatchingCertificate max_matching_on(const ColoredMultipartiteGraph& g, int color,
                                    std::span<const int> vertices);

// alpha'_*(G_i): the best matching within a single component; ties resolved
// toward the lowest component id.
MatchingCertificate alpha_star(const ColoredMultipartiteGraph& g, int color);

// Koenig-Egervary pair on the bipartite subgraph G_i[W1, W2]: a maximum
// matching and a minimum vertex cover of equal size. The two vertex sets must
// be disjoint; only color-i edges with one endpoint in each set are used.
std::pair<MatchingCertificate, CoverCertificate> konig_cover(const ColoredMultipartiteGraph& g,
                                                             int color, std::span<const int> w1,
                                                             std::span<const int> w2);

// min{floor(S/2), S - max part} - defect for a complete multipartite graph
// with the given part counts. The defect is an integer; callers pass
// ceil(eps*n) when they come from the epsilon-defect form.
std::int64_t multipartite_matching_bound(std::span<const int> part_counts, std::int64_t defect);

// True when the certificate's edges are pairwise disjoint, all carry the
// color, and (if component_id is set) all matched vertices lie in it.
bool validate_matching(const ColoredMultipartiteGraph& g, int color,
                       const MatchingCertificate& cert);

}  // namespace cmatch
