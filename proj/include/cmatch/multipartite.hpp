#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cmatch {

// Thrown when inputs violate a documented precondition.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when an enumeration would exceed the configured budget.
class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Colors are 1-based; bit (c-1) of a ColorSet marks color c.
using ColorSet = std::uint8_t;

inline constexpr int kMaxColors = 3;

inline constexpr ColorSet color_bit(int color) {
  return static_cast<ColorSet>(1u << (color - 1));
}

// Vertex layout of a complete multipartite graph K_{n_1,...,n_s}: part sizes
// nonincreasing, vertices 0..N-1 with parts contiguous. Cross-part pairs
// (u,v), u < v, are ranked lexicographically; that rank is the edge id used
// for color storage and for enumeration order.
class MultipartiteSpec {
 public:
  explicit MultipartiteSpec(std::vector<int> part_sizes);

  // K_n modeled as n singleton parts.
  static MultipartiteSpec singletons(int n);

  int total() const { return total_; }  // N
  int part_count() const { return static_cast<int>(part_sizes_.size()); }
  const std::vector<int>& part_sizes() const { return part_sizes_; }
  int part_size(int j) const { return part_sizes_[j]; }  // j is 0-based
  int part_of(int v) const { return part_of_[v]; }
  int part_begin(int j) const { return part_start_[j]; }
  int part_end(int j) const { return part_start_[j + 1]; }
  bool same_part(int u, int v) const { return part_of_[u] == part_of_[v]; }

  std::int64_t cross_pair_count() const { return num_cross_; }  // m

  // Rank of a cross-part pair; -1 when u and v share a part.
  std::int64_t edge_id(int u, int v) const;
  std::pair<int, int> edge_endpoints(std::int64_t id) const;

  bool operator==(const MultipartiteSpec& o) const { return part_sizes_ == o.part_sizes_; }

 private:
  std::vector<int> part_sizes_;
  std::vector<int> part_start_;
  std::vector<int> part_of_;
  std::vector<std::int64_t> edge_offset_;  // per vertex: rank of its first higher cross pair
  int total_ = 0;
  std::int64_t num_cross_ = 0;
};

// Immutable complete multipartite graph whose cross-part edges each carry a
// nonempty subset of {1..num_colors}. Same-part pairs are structurally absent.
// Color membership is stored as one bitset per color over the edge ids, so a
// value can be shared freely across threads after construction.
class ColoredMultipartiteGraph {
 public:
  using ColorAssign = std::function<ColorSet(int u, int v)>;  // cross pairs only, u < v

  static ColoredMultipartiteGraph build_complete(MultipartiteSpec spec, int num_colors,
                                                 bool overlap_allowed, const ColorAssign& assign);
  static ColoredMultipartiteGraph from_edge_colors(MultipartiteSpec spec, int num_colors,
                                                   bool overlap_allowed,
                                                   const std::vector<ColorSet>& edge_colors);

  const MultipartiteSpec& spec() const { return spec_; }
  int num_vertices() const { return spec_.total(); }
  int num_colors() const { return num_colors_; }
  bool overlap_allowed() const { return overlap_allowed_; }
  std::int64_t num_edges() const { return spec_.cross_pair_count(); }

  ColorSet edge_colors(int u, int v) const;  // 0 for same-part pairs
  ColorSet edge_colors_by_id(std::int64_t id) const;
  bool has_color(std::int64_t id, int color) const;
  std::int64_t color_edge_count(int color) const;
  std::vector<int> color_neighbors(int v, int color) const;  // ascending
  std::vector<std::vector<int>> color_adjacency(int color) const;

  const std::vector<std::uint64_t>& color_mask(int color) const { return bits_[color - 1]; }

 private:
  ColoredMultipartiteGraph(MultipartiteSpec spec, int num_colors, bool overlap);

  MultipartiteSpec spec_;
  int num_colors_;
  bool overlap_allowed_;
  std::vector<std::vector<std::uint64_t>> bits_;
};

// Connected components of one color class. Component ids are assigned in
// increasing order of their lowest vertex; isolated vertices get singleton
// components. Repeated calls on the same graph yield identical ids.
struct ColorSubgraph {
  int color = 0;
  std::vector<int> component_of;
  std::vector<int> component_sizes;

  int count() const { return static_cast<int>(component_sizes.size()); }
  std::vector<int> component_vertices(int id) const;
};

ColorSubgraph components(const ColoredMultipartiteGraph& g, int color);

struct EnumerateOptions {
  std::uint64_t budget = 100'000'000;  // max number of colorings
  bool fix_first_edge_color = false;   // symmetry breaking: edge 0 pinned to color 1
};

// Visits every singleton-colored graph on `spec` in lexicographic order of
// the color word (edge 0 most significant, colors ordered 1 < 2 < 3). The
// visitor may return false to stop. Returns the number of graphs visited.
// Throws budget_exceeded when num_colors^m exceeds opts.budget.
std::uint64_t enumerate_colorings(
    const MultipartiteSpec& spec, int num_colors, const EnumerateOptions& opts,
    const std::function<bool(const ColoredMultipartiteGraph&, const std::vector<std::uint8_t>&)>&
        visit);

// num_colors^m, saturating at the 128-bit maximum; any saturated value is
// far beyond every representable budget.
unsigned __int128 coloring_count(std::int64_t m, int num_colors);

}  // namespace cmatch
