#include "cmatch/multipartite.hpp"

#include <algorithm>
#include <bit>

namespace cmatch {

MultipartiteSpec::MultipartiteSpec(std::vector<int> part_sizes)
    : part_sizes_(std::move(part_sizes)) {
  if (part_sizes_.empty()) throw invalid_input("part sizes must be nonempty");
  for (std::size_t j = 0; j < part_sizes_.size(); ++j) {
    if (part_sizes_[j] < 1) throw invalid_input("part sizes must be positive");
    if (j > 0 && part_sizes_[j] > part_sizes_[j - 1])
      throw invalid_input("part sizes must be nonincreasing");
  }
  part_start_.resize(part_sizes_.size() + 1, 0);
  for (std::size_t j = 0; j < part_sizes_.size(); ++j)
    part_start_[j + 1] = part_start_[j] + part_sizes_[j];
  total_ = part_start_.back();
  part_of_.resize(total_);
  for (int j = 0; j < part_count(); ++j)
    for (int v = part_begin(j); v < part_end(j); ++v) part_of_[v] = j;
  edge_offset_.resize(total_ + 1, 0);
  for (int u = 0; u < total_; ++u)
    edge_offset_[u + 1] = edge_offset_[u] + (total_ - part_end(part_of_[u]));
  num_cross_ = edge_offset_[total_];
}

MultipartiteSpec MultipartiteSpec::singletons(int n) {
  if (n < 1) throw invalid_input("singleton spec needs n >= 1");
  return MultipartiteSpec(std::vector<int>(n, 1));
}

std::int64_t MultipartiteSpec::edge_id(int u, int v) const {
  if (u > v) std::swap(u, v);
  if (same_part(u, v)) return -1;
  return edge_offset_[u] + (v - part_end(part_of_[u]));
}

std::pair<int, int> MultipartiteSpec::edge_endpoints(std::int64_t id) const {
  auto it = std::upper_bound(edge_offset_.begin(), edge_offset_.end(), id);
  int u = static_cast<int>(it - edge_offset_.begin()) - 1;
  int v = part_end(part_of_[u]) + static_cast<int>(id - edge_offset_[u]);
  return {u, v};
}

namespace {

std::size_t mask_words(std::int64_t m) { return static_cast<std::size_t>((m + 63) / 64); }

void validate_color_set(ColorSet cs, int num_colors, bool overlap_allowed, int u, int v) {
  if (cs == 0)
    throw invalid_input("empty color set on cross-part pair (" + std::to_string(u) + "," +
                        std::to_string(v) + ")");
  if (cs >> num_colors)
    throw invalid_input("color out of range on pair (" + std::to_string(u) + "," +
                        std::to_string(v) + ")");
  if (!overlap_allowed && std::popcount(static_cast<unsigned>(cs)) > 1)
    throw invalid_input("overlapping colors on pair (" + std::to_string(u) + "," +
                        std::to_string(v) + ") but overlap_allowed=false");
}

}  // namespace

ColoredMultipartiteGraph::ColoredMultipartiteGraph(MultipartiteSpec spec, int num_colors,
                                                   bool overlap)
    : spec_(std::move(spec)), num_colors_(num_colors), overlap_allowed_(overlap) {
  if (num_colors_ < 1 || num_colors_ > kMaxColors)
    throw invalid_input("num_colors must be in 1..3");
  bits_.assign(num_colors_, std::vector<std::uint64_t>(mask_words(spec_.cross_pair_count()), 0));
}

ColoredMultipartiteGraph ColoredMultipartiteGraph::build_complete(MultipartiteSpec spec,
                                                                  int num_colors,
                                                                  bool overlap_allowed,
                                                                  const ColorAssign& assign) {
  ColoredMultipartiteGraph g(std::move(spec), num_colors, overlap_allowed);
  const auto& sp = g.spec_;
  for (std::int64_t id = 0; id < sp.cross_pair_count(); ++id) {
    auto [u, v] = sp.edge_endpoints(id);
    ColorSet cs = assign(u, v);
    validate_color_set(cs, num_colors, overlap_allowed, u, v);
    for (int c = 1; c <= num_colors; ++c)
      if (cs & color_bit(c)) g.bits_[c - 1][id >> 6] |= 1ull << (id & 63);
  }
  return g;
}

ColoredMultipartiteGraph ColoredMultipartiteGraph::from_edge_colors(
    MultipartiteSpec spec, int num_colors, bool overlap_allowed,
    const std::vector<ColorSet>& edge_colors) {
  ColoredMultipartiteGraph g(std::move(spec), num_colors, overlap_allowed);
  const auto& sp = g.spec_;
  if (static_cast<std::int64_t>(edge_colors.size()) != sp.cross_pair_count())
    throw invalid_input("edge color vector size does not match cross pair count");
  for (std::int64_t id = 0; id < sp.cross_pair_count(); ++id) {
    auto [u, v] = sp.edge_endpoints(id);
    validate_color_set(edge_colors[id], num_colors, overlap_allowed, u, v);
    for (int c = 1; c <= num_colors; ++c)
      if (edge_colors[id] & color_bit(c)) g.bits_[c - 1][id >> 6] |= 1ull << (id & 63);
  }
  return g;
}

ColorSet ColoredMultipartiteGraph::edge_colors(int u, int v) const {
  std::int64_t id = spec_.edge_id(u, v);
  if (id < 0) return 0;
  return edge_colors_by_id(id);
}

ColorSet ColoredMultipartiteGraph::edge_colors_by_id(std::int64_t id) const {
  ColorSet cs = 0;
  for (int c = 1; c <= num_colors_; ++c)
    if (bits_[c - 1][id >> 6] >> (id & 63) & 1) cs |= color_bit(c);
  return cs;
}

bool ColoredMultipartiteGraph::has_color(std::int64_t id, int color) const {
  return bits_[color - 1][id >> 6] >> (id & 63) & 1;
}

std::int64_t ColoredMultipartiteGraph::color_edge_count(int color) const {
  if (color < 1 || color > num_colors_) throw invalid_input("color out of range");
  std::int64_t total = 0;
  for (std::uint64_t w : bits_[color - 1]) total += std::popcount(w);
  return total;
}

std::vector<int> ColoredMultipartiteGraph::color_neighbors(int v, int color) const {
  if (color < 1 || color > num_colors_) throw invalid_input("color out of range");
  std::vector<int> out;
  for (int u = 0; u < num_vertices(); ++u) {
    if (u == v || spec_.same_part(u, v)) continue;
    if (has_color(spec_.edge_id(u, v), color)) out.push_back(u);
  }
  return out;
}

std::vector<std::vector<int>> ColoredMultipartiteGraph::color_adjacency(int color) const {
  if (color < 1 || color > num_colors_) throw invalid_input("color out of range");
  std::vector<std::vector<int>> adj(num_vertices());
  for (std::int64_t id = 0; id < num_edges(); ++id) {
    if (!has_color(id, color)) continue;
    auto [u, v] = spec_.edge_endpoints(id);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;  // per-vertex lists are ascending because ids are lex ordered
}

std::vector<int> ColorSubgraph::component_vertices(int id) const {
  std::vector<int> out;
  for (std::size_t v = 0; v < component_of.size(); ++v)
    if (component_of[v] == id) out.push_back(static_cast<int>(v));
  return out;
}

ColorSubgraph components(const ColoredMultipartiteGraph& g, int color) {
  if (color < 1 || color > g.num_colors()) throw invalid_input("color out of range");
  const int n = g.num_vertices();
  ColorSubgraph cs;
  cs.color = color;
  cs.component_of.assign(n, -1);
  auto adj = g.color_adjacency(color);
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (cs.component_of[root] >= 0) continue;
    int id = cs.count();
    cs.component_sizes.push_back(0);
    stack.push_back(root);
    cs.component_of[root] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++cs.component_sizes[id];
      for (int u : adj[v])
        if (cs.component_of[u] < 0) {
          cs.component_of[u] = id;
          stack.push_back(u);
        }
    }
  }
  return cs;
}

unsigned __int128 coloring_count(std::int64_t m, int num_colors) {
  unsigned __int128 total = 1;
  const unsigned __int128 cap = ~static_cast<unsigned __int128>(0);
  for (std::int64_t i = 0; i < m; ++i) {
    if (total > cap / static_cast<unsigned>(num_colors)) return cap;  // saturate
    total *= static_cast<unsigned>(num_colors);
  }
  return total;
}

std::uint64_t enumerate_colorings(
    const MultipartiteSpec& spec, int num_colors, const EnumerateOptions& opts,
    const std::function<bool(const ColoredMultipartiteGraph&, const std::vector<std::uint8_t>&)>&
        visit) {
  if (num_colors < 1 || num_colors > kMaxColors) throw invalid_input("num_colors must be in 1..3");
  const std::int64_t m = spec.cross_pair_count();
  unsigned __int128 total = coloring_count(m, num_colors);
  if (opts.fix_first_edge_color && m > 0) total /= static_cast<unsigned>(num_colors);
  if (total > opts.budget)
    throw budget_exceeded("enumeration of " + std::to_string(static_cast<double>(total)) +
                          " colorings exceeds budget " + std::to_string(opts.budget));

  std::vector<std::uint8_t> word(m, 1);  // colors, 1-based
  std::vector<ColorSet> edge_colors(m, color_bit(1));
  std::uint64_t visited = 0;
  const int first_free = opts.fix_first_edge_color && m > 0 ? 1 : 0;
  for (;;) {
    ++visited;
    if (!visit(ColoredMultipartiteGraph::from_edge_colors(spec, num_colors, false, edge_colors),
               word))
      return visited;
    // odometer: rightmost digit fastest gives lexicographic word order
    std::int64_t i = m - 1;
    while (i >= first_free && word[i] == num_colors) {
      word[i] = 1;
      edge_colors[i] = color_bit(1);
      --i;
    }
    if (i < first_free) return visited;
    ++word[i];
    edge_colors[i] = color_bit(word[i]);
  }
}

}  // namespace cmatch
