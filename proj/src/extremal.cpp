#include "cmatch/extremal.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cmatch {

namespace {

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

std::uint64_t splitmix(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// bias-free bounded draw; avoids std::uniform_int_distribution on purpose so
// results reproduce across standard libraries
std::uint64_t bounded(std::uint64_t& state, std::uint64_t bound) {
  std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % bound;
  for (;;) {
    std::uint64_t v = splitmix(state);
    if (v < limit) return v % bound;
  }
}

}  // namespace

ColoredMultipartiteGraph figure1_coloring(int n) {
  if (n < 1) throw invalid_input("figure 1 needs n >= 1");
  const int total = 3 * n - 2;
  const int u1 = 2 * n - 1;  // vertices [0, u1) form U1, the rest U2
  auto spec = MultipartiteSpec::singletons(total);
  return ColoredMultipartiteGraph::build_complete(spec, 2, false, [u1](int a, int b) {
    bool crossing = (a < u1) != (b < u1);
    return crossing ? color_bit(1) : color_bit(2);
  });
}

ColoredMultipartiteGraph figure2_coloring(int n, int n1) {
  if (n < 1 || n1 < 1) throw invalid_input("figure 2 needs n >= 1 and n1 >= 1");
  std::vector<int> parts{n1};
  parts.insert(parts.end(), 2 * (n - 1), 1);
  MultipartiteSpec spec{std::move(parts)};
  // U1 = [0, n1), U2 = [n1, n1+n-1), U3 = the rest
  const int u2_begin = n1, u2_end = n1 + (n - 1);
  return ColoredMultipartiteGraph::build_complete(spec, 2, false, [u2_begin, u2_end](int a, int b) {
    bool touches_u2 = (a >= u2_begin && a < u2_end) || (b >= u2_begin && b < u2_end);
    return touches_u2 ? color_bit(1) : color_bit(2);
  });
}

WitnessResult bad_partition_witness(int kind, int n, const MultipartiteSpec& host) {
  if (kind != 1 && kind != 2) throw invalid_input("witness kind must be 1 or 2");
  if (n < 1) throw invalid_input("witness needs n >= 1");
  if (!suitability_s1(host, n) || !suitability_s2(host, n))
    throw invalid_input("host too small: needs N >= 3n-1 and N-n_1 >= 2n-1");
  const int N = host.total();

  if (kind == 1) {
    // W2 = the last min(n, N-1) vertices; the (W1,W2) cut is red, rest blue.
    const int w2_begin = std::max(1, N - n);
    auto graph = ColoredMultipartiteGraph::build_complete(
        host, 2, false, [w2_begin](int a, int b) {
          bool crossing = (a < w2_begin) != (b < w2_begin);
          return crossing ? color_bit(1) : color_bit(2);
        });
    BadPartitionCertificate cert;
    cert.kind = 1;
    cert.color_i = 2;  // no blue cross edges, no red edges inside W1
    for (int v = 0; v < N; ++v) (v < w2_begin ? cert.w1 : cert.w2).push_back(v);
    int w2_size = N - w2_begin;
    Rational slack = Rational(1) - Rational(w2_size, n);
    Rational upper = Rational(w2_size, host.part_size(0)) - 1;
    cert.lambda = std::max({slack, upper, Rational(1, std::int64_t(n) * n)});
    auto check = check_bad_partition(graph, n, cert);
    cert.measured = check.measured;
    if (!check.pass)
      throw invalid_input("host too small: witness fails clause " + check.first_failed());
    return {std::move(graph), std::move(cert)};
  }

  if (host.part_count() < 3) throw invalid_input("host too small: kind 2 needs at least 3 parts");
  // V_j = part 1, U2 = part 2, U1 = the rest; edges incident with U2 are red.
  const int u2_begin = host.part_begin(1), u2_end = host.part_end(1);
  auto graph = ColoredMultipartiteGraph::build_complete(
      host, 2, false, [u2_begin, u2_end](int a, int b) {
        bool touches_u2 = (a >= u2_begin && a < u2_end) || (b >= u2_begin && b < u2_end);
        return touches_u2 ? color_bit(1) : color_bit(2);
      });
  BadPartitionCertificate cert;
  cert.kind = 2;
  cert.color_i = 1;  // red misses (Vj,U1), blue misses (Vj,U2)
  cert.part_j = 0;
  for (int v = u2_begin; v < u2_end; ++v) cert.u2.push_back(v);
  for (int v = host.part_end(1); v < N; ++v) cert.u1.push_back(v);
  int u1_size = static_cast<int>(cert.u1.size());
  int u2_size = static_cast<int>(cert.u2.size());
  Rational lam(1, std::int64_t(n) * n);
  for (int size : {host.part_size(0), u1_size, u2_size})
    lam = std::max(lam, Rational(1) - Rational(size, n));
  for (int size : {u1_size, u2_size}) lam = std::max(lam, Rational(size, n) - 1);
  cert.lambda = lam;
  auto check = check_bad_partition(graph, n, cert);
  cert.measured = check.measured;
  if (!check.pass)
    throw invalid_input("host too small: witness fails clause " + check.first_failed());
  return {std::move(graph), std::move(cert)};
}

namespace {

// alpha'_* per color straight from the engine; words are digits 1..3
std::vector<int> alpha_star_vector(const ColoredMultipartiteGraph& g) {
  std::vector<int> out;
  for (int c = 1; c <= g.num_colors(); ++c) out.push_back(alpha_star(g, c).size);
  return out;
}

bool all_below(const std::vector<int>& alpha, int n) {
  return std::all_of(alpha.begin(), alpha.end(), [n](int a) { return a <= n - 1; });
}

}  // namespace

Search3Result search_3color_lower_bound(int n, const Search3Options& opts) {
  if (n < 1) throw invalid_input("search needs n >= 1");
  Search3Result result;
  const int N = 4 * n - 3;
  auto spec = MultipartiteSpec::singletons(N);
  const std::int64_t m = spec.cross_pair_count();

  if (m == 0) {  // K_1: vacuous success
    std::vector<ColorSet> none;
    result.coloring = ColoredMultipartiteGraph::from_edge_colors(spec, 3, false, none);
    result.alpha_star_values = {0, 0, 0};
    result.exhausted = true;
    result.examined = 1;
    return result;
  }

  unsigned __int128 total = coloring_count(m, 3);
  if (total <= opts.budget) {
    EnumerateOptions eopts;
    eopts.budget = opts.budget;
    std::uint64_t seen = enumerate_colorings(
        spec, 3, eopts, [&](const ColoredMultipartiteGraph& g, const std::vector<std::uint8_t>&) {
          auto alpha = alpha_star_vector(g);
          if (all_below(alpha, n)) {
            result.coloring = g;
            result.alpha_star_values = std::move(alpha);
            return false;
          }
          return true;
        });
    result.examined = seen;
    result.exhausted = !result.coloring.has_value();
    return result;
  }

  // Annealing over color words; restarts are seeded per worker and the first
  // success in worker order wins, so reports do not depend on scheduling.
  const int nt = resolve_threads(opts.threads);
  const int restarts = nt * 4;
  const std::uint64_t iters = opts.budget / std::max(1, restarts);
  std::vector<std::optional<std::vector<ColorSet>>> found(restarts);
  std::vector<std::uint64_t> used(restarts, 0);
  if (iters > 0) {
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (int r = 0; r < restarts; ++r) {
      std::uint64_t rng = opts.seed * 0x100000001b3ull + 0xcbf29ce484222325ull + r;
      std::vector<ColorSet> edge_colors(m);
      for (auto& cs : edge_colors) cs = color_bit(1 + static_cast<int>(bounded(rng, 3)));
      auto energy = [&](const std::vector<ColorSet>& colors) {
        auto g = ColoredMultipartiteGraph::from_edge_colors(spec, 3, false, colors);
        int e = 0;
        for (int c = 1; c <= 3; ++c) e += std::max(0, alpha_star(g, c).size - (n - 1));
        return e;
      };
      int cur = energy(edge_colors);
      ++used[r];
      for (std::uint64_t it = 1; it < iters && cur > 0; ++it) {
        double temp = 2.0 * std::pow(0.999, static_cast<double>(it));
        std::int64_t e = static_cast<std::int64_t>(bounded(rng, static_cast<std::uint64_t>(m)));
        ColorSet old = edge_colors[e];
        ColorSet next = color_bit(1 + static_cast<int>(bounded(rng, 3)));
        if (next == old) continue;
        edge_colors[e] = next;
        int cand = energy(edge_colors);
        ++used[r];
        double accept = std::exp((cur - cand) / std::max(temp, 1e-9));
        if (cand <= cur || splitmix(rng) < accept * 18446744073709551615.0)
          cur = cand;
        else
          edge_colors[e] = old;
      }
      if (cur == 0) found[r] = edge_colors;
    }
  }
  for (int r = 0; r < restarts; ++r) result.examined += used[r];
  for (int r = 0; r < restarts; ++r) {
    if (!found[r]) continue;
    auto g = ColoredMultipartiteGraph::from_edge_colors(spec, 3, false, *found[r]);
    auto alpha = alpha_star_vector(g);
    if (all_below(alpha, n)) {  // revalidated before emission
      result.coloring = std::move(g);
      result.alpha_star_values = std::move(alpha);
      break;
    }
  }
  return result;
}

}  // namespace cmatch
