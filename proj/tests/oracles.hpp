#pragma once

// Brute-force oracles for the test suites: a DP matcher over vertex bitmasks
// and the decomposition definitions evaluated literally. Deliberately
// independent of the engine code paths they are used to check.

#include <bit>
#include <cstdint>
#include <vector>

#include "cmatch/multipartite.hpp"

namespace oracle {

// Maximum matching by memoized recursion over the vertex set (n <= 20).
class DpMatcher {
 public:
  explicit DpMatcher(std::vector<std::uint32_t> nbr)
      : nbr_(std::move(nbr)), memo_(std::size_t(1) << nbr_.size(), -1) {}

  int solve(std::uint32_t mask) {
    if (!mask) return 0;
    auto& slot = memo_[mask];
    if (slot >= 0) return slot;
    int v = std::countr_zero(mask);
    std::uint32_t rest = mask & ~(1u << v);
    int best = solve(rest);  // leave v unmatched
    std::uint32_t cands = nbr_[v] & rest;
    while (cands) {
      int u = std::countr_zero(cands);
      cands &= cands - 1;
      best = std::max(best, 1 + solve(rest & ~(1u << u)));
    }
    return slot = static_cast<std::int8_t>(best);
  }

  int full() { return solve(all()); }

  std::uint32_t all() const {
    return nbr_.size() >= 32 ? ~0u : (1u << nbr_.size()) - 1;
  }

  const std::vector<std::uint32_t>& nbr() const { return nbr_; }

 private:
  std::vector<std::uint32_t> nbr_;
  std::vector<std::int8_t> memo_;
};

// Largest matching within a single connected component.
inline int brute_alpha_star(DpMatcher& dp) {
  const auto& nbr = dp.nbr();
  std::uint32_t unseen = dp.all();
  int best = 0;
  while (unseen) {
    int root = std::countr_zero(unseen);
    std::uint32_t comp = 0, frontier = 1u << root;
    while (frontier) {
      comp |= frontier;
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f;) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= nbr[v];
      }
      frontier = next & ~comp;
    }
    unseen &= ~comp;
    best = std::max(best, dp.solve(comp));
  }
  return best;
}

// D by definition: vertices whose deletion keeps the matching number.
inline std::vector<int> brute_d_set(DpMatcher& dp) {
  int alpha = dp.full();
  std::vector<int> d;
  for (std::size_t v = 0; v < dp.nbr().size(); ++v)
    if (dp.solve(dp.all() & ~(1u << v)) == alpha) d.push_back(static_cast<int>(v));
  return d;
}

// Adjacency bitmasks of one color class.
inline std::vector<std::uint32_t> color_nbr(const cmatch::ColoredMultipartiteGraph& g, int color) {
  std::vector<std::uint32_t> nbr(g.num_vertices(), 0);
  for (std::int64_t id = 0; id < g.num_edges(); ++id) {
    if (!g.has_color(id, color)) continue;
    auto [u, v] = g.spec().edge_endpoints(id);
    nbr[u] |= 1u << v;
    nbr[v] |= 1u << u;
  }
  return nbr;
}

// Embeds an arbitrary graph on n vertices (given by its K_n edge-subset mask,
// pairs (u,v) u<v in lexicographic order) as color 1 of a 2-colored K_n.
inline cmatch::ColoredMultipartiteGraph embed_graph(int n, std::uint64_t edge_mask) {
  auto spec = cmatch::MultipartiteSpec::singletons(n);
  std::vector<cmatch::ColorSet> colors(spec.cross_pair_count());
  for (std::int64_t id = 0; id < spec.cross_pair_count(); ++id)
    colors[id] = (edge_mask >> id & 1) ? cmatch::color_bit(1) : cmatch::color_bit(2);
  return cmatch::ColoredMultipartiteGraph::from_edge_colors(spec, 2, false, colors);
}

inline std::uint64_t splitmix(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace oracle
