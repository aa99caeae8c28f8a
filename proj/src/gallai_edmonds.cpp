#include "cmatch/gallai_edmonds.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

namespace cmatch {

namespace {

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

std::vector<int> all_vertices(const ColoredMultipartiteGraph& g) {
  std::vector<int> v(g.num_vertices());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

bool adjacent_in_color(const ColoredMultipartiteGraph& g, int color, int u, int v) {
  std::int64_t id = g.spec().edge_id(u, v);
  return id >= 0 && g.has_color(id, color);
}

// Components of the color subgraph induced on `verts`.
std::vector<std::vector<int>> induced_components(const ColoredMultipartiteGraph& g, int color,
                                                 const std::vector<int>& verts) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(verts.size(), false);
  for (std::size_t r = 0; r < verts.size(); ++r) {
    if (seen[r]) continue;
    std::vector<int> comp;
    std::vector<std::size_t> stack{r};
    seen[r] = true;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      comp.push_back(verts[i]);
      for (std::size_t j = 0; j < verts.size(); ++j)
        if (!seen[j] && adjacent_in_color(g, color, verts[i], verts[j])) {
          seen[j] = true;
          stack.push_back(j);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

GEDecomposition ge_decompose(const ColoredMultipartiteGraph& g, int color,
                             std::optional<std::vector<int>> restrict_to, int threads) {
  std::vector<int> verts = restrict_to ? std::move(*restrict_to) : all_vertices(g);
  std::sort(verts.begin(), verts.end());
  const int n = static_cast<int>(verts.size());

  GEDecomposition dec;
  dec.matching_size = max_matching_on(g, color, verts).size;

  // v is missed by some maximum matching iff deleting it keeps the size.
  std::vector<char> in_d(n, 0);
  const int nt = resolve_threads(threads);
#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (int i = 0; i < n; ++i) {
    std::vector<int> rest;
    rest.reserve(n - 1);
    for (int j = 0; j < n; ++j)
      if (j != i) rest.push_back(verts[j]);
    in_d[i] = max_matching_on(g, color, rest).size == dec.matching_size;
  }

  for (int i = 0; i < n; ++i)
    if (in_d[i]) dec.D.push_back(verts[i]);
  for (int i = 0; i < n; ++i) {
    if (in_d[i]) continue;
    bool touches_d = false;
    for (int d : dec.D)
      if (adjacent_in_color(g, color, verts[i], d)) {
        touches_d = true;
        break;
      }
    (touches_d ? dec.A : dec.C).push_back(verts[i]);
  }

  dec.d_components = induced_components(g, color, dec.D);
  std::sort(dec.d_components.begin(), dec.d_components.end(),
            [](const std::vector<int>& x, const std::vector<int>& y) {
              if (x.size() != y.size()) return x.size() > y.size();
              return x.front() < y.front();
            });
  dec.a = static_cast<int>(dec.A.size());
  dec.k = static_cast<int>(dec.d_components.size());
  return dec;
}

bool is_factor_critical(const ColoredMultipartiteGraph& g, int color,
                        std::span<const int> vertices) {
  const int n = static_cast<int>(vertices.size());
  if (n == 0) return false;  // the empty graph has a (empty) perfect matching
  std::vector<int> verts(vertices.begin(), vertices.end());
  if (n % 2 == 0) return false;  // odd order is necessary
  for (int i = 0; i < n; ++i) {
    std::vector<int> rest;
    rest.reserve(n - 1);
    for (int j = 0; j < n; ++j)
      if (j != i) rest.push_back(verts[j]);
    if (max_matching_on(g, color, rest).size * 2 != n - 1) return false;
  }
  return true;
}

GEVerifyReport verify_ge(const GEDecomposition& dec, const ColoredMultipartiteGraph& g, int color,
                         std::optional<std::vector<int>> restrict_to, const GEOptions& opts) {
  GEVerifyReport rep;
  auto fail = [&rep](std::string why) {
    if (rep.pass) {
      rep.pass = false;
      rep.first_violation = std::move(why);
    }
  };

  std::vector<int> verts = restrict_to ? std::move(*restrict_to) : all_vertices(g);
  std::sort(verts.begin(), verts.end());

  {
    std::vector<int> joined;
    joined.insert(joined.end(), dec.A.begin(), dec.A.end());
    joined.insert(joined.end(), dec.C.begin(), dec.C.end());
    joined.insert(joined.end(), dec.D.begin(), dec.D.end());
    std::sort(joined.begin(), joined.end());
    if (joined != verts) {
      fail("decomposition does not partition the vertex set");
      return rep;
    }
  }

  MatchingCertificate m = max_matching_on(g, color, verts);
  std::vector<int> mate(g.num_vertices(), -1);
  for (auto [u, v] : m.edges) {
    mate[u] = v;
    mate[v] = u;
  }

  std::vector<int> comp_of(g.num_vertices(), -1);
  for (int i = 0; i < dec.k; ++i)
    for (int v : dec.d_components[i]) comp_of[v] = i;

  // (a) M covers C and matches A into distinct D-components.
  for (int c : dec.C)
    if (mate[c] < 0) fail("clause (a): vertex " + std::to_string(c) + " of C is uncovered");
  std::vector<bool> comp_used(dec.k, false);
  for (int a : dec.A) {
    if (mate[a] < 0) {
      fail("clause (a): vertex " + std::to_string(a) + " of A is unmatched");
      continue;
    }
    int cid = comp_of[mate[a]];
    if (cid < 0) {
      fail("clause (a): vertex " + std::to_string(a) + " of A is not matched into D");
    } else if (comp_used[cid]) {
      fail("clause (a): two A-vertices matched into D-component " + std::to_string(cid));
    } else {
      comp_used[cid] = true;
    }
  }

  // (b) each D-component factor-critical and near-perfectly matched in M.
  for (int i = 0; i < dec.k; ++i) {
    const auto& comp = dec.d_components[i];
    if (!is_factor_critical(g, color, comp)) {
      fail("clause (b): D-component " + std::to_string(i) + " is not factor-critical");
      continue;
    }
    int covered_inside = 0;
    for (int v : comp)
      if (mate[v] >= 0 && comp_of[mate[v]] == i) ++covered_inside;
    if (covered_inside != static_cast<int>(comp.size()) - 1)
      fail("clause (b): D-component " + std::to_string(i) + " is not near-perfectly matched");
  }

  // (c) every nonempty S in A meets at least |S|+1 components in N(S).
  auto subset_components = [&](std::uint64_t mask) {
    std::vector<bool> hit(dec.k, false);
    int hits = 0;
    int popcnt = 0;
    for (int i = 0; i < dec.a; ++i) {
      if (!(mask >> i & 1)) continue;
      ++popcnt;
      for (int d : dec.D) {
        int cid = comp_of[d];
        if (!hit[cid] && adjacent_in_color(g, color, dec.A[i], d)) {
          hit[cid] = true;
          ++hits;
        }
      }
    }
    return hits >= popcnt + 1;
  };
  if (dec.a <= opts.subset_cap) {
    for (std::uint64_t mask = 1; mask < (1ull << dec.a); ++mask)
      if (!subset_components(mask)) {
        fail("clause (c): some subset of A touches too few components");
        break;
      }
  } else {
    rep.subset_check_sampled = true;
    std::uint64_t state = opts.seed ^ 0x9e3779b97f4a7c15ull;
    auto next = [&state]() {  // splitmix64
      state += 0x9e3779b97f4a7c15ull;
      std::uint64_t z = state;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
      return z ^ (z >> 31);
    };
    for (std::uint64_t t = 0; t < opts.samples; ++t) {
      std::uint64_t mask = next() & ((dec.a >= 64 ? ~0ull : (1ull << dec.a) - 1));
      if (mask == 0) continue;
      if (!subset_components(mask)) {
        fail("clause (c): sampled subset of A touches too few components");
        break;
      }
    }
  }

  return rep;
}

}  // namespace cmatch
