#include "cmatch/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace cmatch {

namespace {

// Edmonds' algorithm with blossom contraction by base marking. One BFS per
// exposed vertex; bases are tracked per vertex and reset between phases.
class Blossom {
 public:
  explicit Blossom(const std::vector<std::vector<int>>& adj)
      : g_(adj),
        n_(static_cast<int>(adj.size())),
        match_(n_, -1),
        parent_(n_, -1),
        base_(n_),
        used_(n_, false),
        in_blossom_(n_, false) {}

  const std::vector<int>& solve() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] >= 0) continue;
      int u = find_path(v);
      while (u >= 0) {  // flip the augmenting path ending at u
        int pv = parent_[u];
        int ppv = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = ppv;
      }
    }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    for (int cur = a;;) {
      cur = base_[cur];
      seen[cur] = true;
      if (match_[cur] < 0) break;
      cur = parent_[match_[cur]];
    }
    for (int cur = b;;) {
      cur = base_[cur];
      if (seen[cur]) return cur;
      cur = parent_[match_[cur]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
          // odd cycle: contract the blossom at the lowest common ancestor
          int cur_base = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = cur_base;
            if (!used_[i]) {
              used_[i] = true;
              q.push(i);
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (match_[to] < 0) return to;  // augmenting path found
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const std::vector<std::vector<int>>& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

MatchingCertificate certificate_from_mates(const std::vector<int>& mate,
                                           const std::vector<int>& local_to_global) {
  MatchingCertificate cert;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v) {
    if (mate[v] > v) {
      int a = local_to_global[v];
      int b = local_to_global[mate[v]];
      cert.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(cert.edges.begin(), cert.edges.end());
  cert.size = static_cast<int>(cert.edges.size());
  return cert;
}

std::vector<std::vector<int>> induced_color_adjacency(const ColoredMultipartiteGraph& g, int color,
                                                      std::span<const int> vertices,
                                                      std::vector<int>& local_to_global) {
  local_to_global.assign(vertices.begin(), vertices.end());
  std::sort(local_to_global.begin(), local_to_global.end());
  std::vector<int> global_to_local(g.num_vertices(), -1);
  for (int i = 0; i < static_cast<int>(local_to_global.size()); ++i)
    global_to_local[local_to_global[i]] = i;
  std::vector<std::vector<int>> adj(local_to_global.size());
  for (int i = 0; i < static_cast<int>(local_to_global.size()); ++i) {
    int u = local_to_global[i];
    for (int j = i + 1; j < static_cast<int>(local_to_global.size()); ++j) {
      int v = local_to_global[j];
      std::int64_t id = g.spec().edge_id(u, v);
      if (id >= 0 && g.has_color(id, color)) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  return adj;
}

}  // namespace

std::vector<int> blossom_max_matching(const std::vector<std::vector<int>>& adj) {
  return Blossom(adj).solve();
}

MatchingCertificate max_matching(const ColoredMultipartiteGraph& g, int color) {
  if (color < 1 || color > g.num_colors()) throw invalid_input("color out of range");
  auto adj = g.color_adjacency(color);
  std::vector<int> ident(g.num_vertices());
  std::iota(ident.begin(), ident.end(), 0);
  return certificate_from_mates(blossom_max_matching(adj), ident);
}

MatchingCertificate max_matching_on(const ColoredMultipartiteGraph& g, int color,
                                    std::span<const int> vertices) {
  if (color < 1 || color > g.num_colors()) throw invalid_input("color out of range");
  std::vector<int> local_to_global;
  auto adj = induced_color_adjacency(g, color, vertices, local_to_global);
  return certificate_from_mates(blossom_max_matching(adj), local_to_global);
}

MatchingCertificate alpha_star(const ColoredMultipartiteGraph& g, int color) {
  ColorSubgraph cs = components(g, color);
  MatchingCertificate best;
  best.size = -1;
  for (int id = 0; id < cs.count(); ++id) {
    std::vector<int> verts = cs.component_vertices(id);
    MatchingCertificate cert = max_matching_on(g, color, verts);
    if (cert.size > best.size) {  // strict: ties keep the lowest component id
      best = std::move(cert);
      best.component_id = id;
    }
  }
  return best;
}

std::pair<MatchingCertificate, CoverCertificate> konig_cover(const ColoredMultipartiteGraph& g,
                                                             int color, std::span<const int> w1,
                                                             std::span<const int> w2) {
  if (color < 1 || color > g.num_colors()) throw invalid_input("color out of range");
  std::vector<int> left(w1.begin(), w1.end());
  std::vector<int> right(w2.begin(), w2.end());
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  for (int v : left)
    if (std::binary_search(right.begin(), right.end(), v))
      throw invalid_input("konig_cover: vertex sets overlap at " + std::to_string(v));

  const int nl = static_cast<int>(left.size());
  const int nr = static_cast<int>(right.size());
  std::vector<std::vector<int>> adj(nl);  // left-local -> right-local
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nr; ++j) {
      std::int64_t id = g.spec().edge_id(left[i], right[j]);
      if (id >= 0 && g.has_color(id, color)) adj[i].push_back(j);
    }

  // Kuhn's augmenting paths
  std::vector<int> mate_l(nl, -1), mate_r(nr, -1);
  std::vector<bool> seen(nr);
  std::function<bool(int)> try_augment = [&](int u) {
    for (int v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      if (mate_r[v] < 0 || try_augment(mate_r[v])) {
        mate_l[u] = v;
        mate_r[v] = u;
        return true;
      }
    }
    return false;
  };
  for (int u = 0; u < nl; ++u) {
    std::fill(seen.begin(), seen.end(), false);
    try_augment(u);
  }

  // Koenig construction: alternate from unmatched left vertices, then take
  // unreached left plus reached right.
  std::vector<bool> vis_l(nl, false), vis_r(nr, false);
  std::vector<int> stack;
  for (int u = 0; u < nl; ++u)
    if (mate_l[u] < 0) {
      vis_l[u] = true;
      stack.push_back(u);
    }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (vis_r[v] || mate_l[u] == v) continue;
      vis_r[v] = true;
      int w = mate_r[v];
      if (w >= 0 && !vis_l[w]) {
        vis_l[w] = true;
        stack.push_back(w);
      }
    }
  }

  MatchingCertificate mc;
  for (int u = 0; u < nl; ++u)
    if (mate_l[u] >= 0)
      mc.edges.emplace_back(std::min(left[u], right[mate_l[u]]),
                            std::max(left[u], right[mate_l[u]]));
  std::sort(mc.edges.begin(), mc.edges.end());
  mc.size = static_cast<int>(mc.edges.size());

  CoverCertificate cc;
  for (int u = 0; u < nl; ++u)
    if (!vis_l[u]) cc.vertices.push_back(left[u]);
  for (int v = 0; v < nr; ++v)
    if (vis_r[v]) cc.vertices.push_back(right[v]);
  std::sort(cc.vertices.begin(), cc.vertices.end());
  cc.size = static_cast<int>(cc.vertices.size());
  return {std::move(mc), std::move(cc)};
}

std::int64_t multipartite_matching_bound(std::span<const int> part_counts, std::int64_t defect) {
  if (part_counts.empty()) throw invalid_input("bound needs at least one part");
  if (defect < 0) throw invalid_input("defect must be nonnegative");
  std::int64_t sum = 0;
  std::int64_t biggest = 0;
  for (int k : part_counts) {
    if (k < 1) throw invalid_input("part counts must be positive");
    sum += k;
    biggest = std::max<std::int64_t>(biggest, k);
  }
  return std::min(sum / 2, sum - biggest) - defect;
}

bool validate_matching(const ColoredMultipartiteGraph& g, int color,
                       const MatchingCertificate& cert) {
  if (cert.size != static_cast<int>(cert.edges.size())) return false;
  std::set<int> used;
  for (auto [u, v] : cert.edges) {
    if (u == v) return false;
    std::int64_t id = g.spec().edge_id(u, v);
    if (id < 0 || !g.has_color(id, color)) return false;
    if (!used.insert(u).second || !used.insert(v).second) return false;
  }
  if (cert.component_id.has_value() && cert.size > 0) {
    ColorSubgraph cs = components(g, color);
    for (auto [u, v] : cert.edges)
      if (cs.component_of[u] != *cert.component_id || cs.component_of[v] != *cert.component_id)
        return false;
  }
  return true;
}

}  // namespace cmatch
