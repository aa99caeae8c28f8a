#include "cmatch/stability.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

namespace cmatch {

namespace {

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

long long parse_ll(const std::string& s) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw invalid_input("bad integer in rational: '" + s + "'");
    return v;
  } catch (const invalid_input&) {
    throw;
  } catch (const std::exception&) {
    throw invalid_input("bad integer in rational: '" + s + "'");
  }
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw invalid_input("empty rational");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    long long num = parse_ll(text.substr(0, slash));
    long long den = parse_ll(text.substr(slash + 1));
    if (den == 0) throw invalid_input("zero denominator");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0 || frac_len > 17) throw invalid_input("bad decimal: '" + text + "'");
    long long den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rational(parse_ll(digits), den);
  }
  return Rational(parse_ll(text));
}

std::string rational_to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

bool suitability_s1(const MultipartiteSpec& spec, int n) { return spec.total() >= 3 * n - 1; }

bool suitability_s2(const MultipartiteSpec& spec, int n) {
  return spec.total() - spec.part_size(0) >= 2 * n - 1;
}

bool suitability_s3(int tilde_total, const Rational& eps, int n) {
  return Rational(tilde_total) < eps * n;
}

bool low_degree(int degree, int total, int part_size, const Rational& eps, int n) {
  return Rational(degree) <= Rational(total - part_size) - eps * n;
}

SuitabilityReport check_suitability(const ColoredMultipartiteGraph& g, int n,
                                    const Rational& eps) {
  if (n < 1) throw invalid_input("n must be positive");
  if (eps <= 0) throw invalid_input("epsilon must be positive");
  const auto& spec = g.spec();
  SuitabilityReport rep;
  rep.s1_ok = suitability_s1(spec, n);
  rep.s2_ok = suitability_s2(spec, n);
  rep.tilde_sets.resize(spec.part_count());
  for (int v = 0; v < g.num_vertices(); ++v) {
    int degree = 0;  // union over colors: count distinct cross neighbors
    for (int u = 0; u < g.num_vertices(); ++u)
      if (u != v && g.edge_colors(std::min(u, v), std::max(u, v)) != 0) ++degree;
    int j = spec.part_of(v);
    if (low_degree(degree, spec.total(), spec.part_size(j), eps, n)) {
      rep.tilde_sets[j].push_back(v);
      ++rep.tilde_total;
    }
  }
  rep.s3_ok = suitability_s3(rep.tilde_total, eps, n);
  return rep;
}

namespace {

bool edge_counts_for(ColorSet cs, int color, OverlapCounting counting) {
  if (counting == OverlapCounting::PerColor) return (cs & color_bit(color)) != 0;
  return cs == color_bit(color);
}

std::int64_t count_between(const ColoredMultipartiteGraph& g, int color,
                           const std::vector<int>& xs, const std::vector<int>& ys,
                           OverlapCounting counting) {
  std::int64_t count = 0;
  for (int u : xs)
    for (int v : ys) {
      if (u == v) continue;
      ColorSet cs = g.edge_colors(std::min(u, v), std::max(u, v));
      if (cs && edge_counts_for(cs, color, counting)) ++count;
    }
  return count;
}

std::int64_t count_inside(const ColoredMultipartiteGraph& g, int color, const std::vector<int>& xs,
                          OverlapCounting counting) {
  std::int64_t count = 0;
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = a + 1; b < xs.size(); ++b) {
      ColorSet cs = g.edge_colors(std::min(xs[a], xs[b]), std::max(xs[a], xs[b]));
      if (cs && edge_counts_for(cs, color, counting)) ++count;
    }
  return count;
}

void require_partition(const ColoredMultipartiteGraph& g,
                       std::initializer_list<const std::vector<int>*> blocks) {
  std::vector<int> joined;
  for (const auto* b : blocks) joined.insert(joined.end(), b->begin(), b->end());
  std::sort(joined.begin(), joined.end());
  std::vector<int> expect(g.num_vertices());
  std::iota(expect.begin(), expect.end(), 0);
  if (joined != expect) throw invalid_input("certificate blocks do not partition V(G)");
}

std::string ineq(const std::string& lhs, const std::string& rel, const std::string& rhs) {
  return lhs + " " + rel + " " + rhs;
}

}  // namespace

std::string BadPartitionCheck::first_failed() const {
  for (const auto& c : clauses)
    if (!c.ok) return c.clause;
  return {};
}

BadPartitionCheck check_bad_partition(const ColoredMultipartiteGraph& g, int n,
                                      const BadPartitionCertificate& cert,
                                      OverlapCounting counting) {
  if (g.num_colors() != 2) throw invalid_input("bad partitions are defined for 2-colored graphs");
  if (cert.color_i != 1 && cert.color_i != 2) throw invalid_input("certificate color must be 1 or 2");
  if (cert.lambda <= 0) throw invalid_input("lambda must be positive");
  if (n < 1) throw invalid_input("n must be positive");

  BadPartitionCheck out;
  const Rational lam = cert.lambda;
  const Rational lam_n2 = lam * n * n;
  const int i = cert.color_i;
  auto clause = [&out](std::string name, bool ok, std::string detail) {
    out.clauses.push_back({std::move(name), ok, std::move(detail)});
  };

  if (cert.kind == 1) {
    require_partition(g, {&cert.w1, &cert.w2});
    out.measured.w1_size = static_cast<int>(cert.w1.size());
    out.measured.w2_size = static_cast<int>(cert.w2.size());
    out.measured.cross_edges_color_i = count_between(g, i, cert.w1, cert.w2, counting);
    out.measured.inside_w1_other_color = count_inside(g, 3 - i, cert.w1, counting);

    const int n1 = g.spec().part_size(0);
    Rational w2(out.measured.w2_size);
    clause("i", (Rational(1) - lam) * n <= w2 && w2 <= (Rational(1) + lam) * n1,
           ineq("(1-lambda)n <= |W2| <= (1+lambda)n_1", "with |W2| =",
                std::to_string(out.measured.w2_size)));
    clause("ii", Rational(out.measured.cross_edges_color_i) <= lam_n2,
           ineq("|E(G_i[W1,W2])|", "=", std::to_string(out.measured.cross_edges_color_i)));
    clause("iii", Rational(out.measured.inside_w1_other_color) <= lam_n2,
           ineq("|E(G_{3-i}[W1])|", "=", std::to_string(out.measured.inside_w1_other_color)));
  } else if (cert.kind == 2) {
    if (cert.part_j < 0 || cert.part_j >= g.spec().part_count())
      throw invalid_input("certificate part index out of range");
    std::vector<int> vj;
    for (int v = g.spec().part_begin(cert.part_j); v < g.spec().part_end(cert.part_j); ++v)
      vj.push_back(v);
    require_partition(g, {&vj, &cert.u1, &cert.u2});
    out.measured.vj_size = static_cast<int>(vj.size());
    out.measured.u1_size = static_cast<int>(cert.u1.size());
    out.measured.u2_size = static_cast<int>(cert.u2.size());
    out.measured.vj_u1_color_i = count_between(g, i, vj, cert.u1, counting);
    out.measured.vj_u2_other_color = count_between(g, 3 - i, vj, cert.u2, counting);

    clause("i", Rational(out.measured.vj_u1_color_i) <= lam_n2,
           ineq("|E(G_i[Vj,U1])|", "=", std::to_string(out.measured.vj_u1_color_i)));
    clause("ii", Rational(out.measured.vj_u2_other_color) <= lam_n2,
           ineq("|E(G_{3-i}[Vj,U2])|", "=", std::to_string(out.measured.vj_u2_other_color)));
    clause("iii", Rational(out.measured.vj_size) >= (Rational(1) - lam) * n,
           ineq("n_j", "=", std::to_string(out.measured.vj_size)));
    Rational u1(out.measured.u1_size), u2(out.measured.u2_size);
    clause("iv", (Rational(1) - lam) * n <= u1 && u1 <= (Rational(1) + lam) * n,
           ineq("(1-lambda)n <= |U1| <= (1+lambda)n", "with |U1| =",
                std::to_string(out.measured.u1_size)));
    clause("v", (Rational(1) - lam) * n <= u2 && u2 <= (Rational(1) + lam) * n,
           ineq("(1-lambda)n <= |U2| <= (1+lambda)n", "with |U2| =",
                std::to_string(out.measured.u2_size)));
  } else {
    throw invalid_input("certificate kind must be 1 or 2");
  }

  out.pass = std::all_of(out.clauses.begin(), out.clauses.end(),
                         [](const ClauseResult& c) { return c.ok; });
  return out;
}

namespace {

std::vector<int> mask_to_vertices(std::uint32_t mask, const std::vector<int>& universe) {
  std::vector<int> out;
  for (std::size_t i = 0; i < universe.size(); ++i)
    if (mask >> i & 1) out.push_back(universe[i]);
  return out;
}

BadPartitionCertificate make_kind1(const ColoredMultipartiteGraph& g, const Rational& lambda,
                                   int color_i, std::vector<int> w2) {
  BadPartitionCertificate cert;
  cert.kind = 1;
  cert.lambda = lambda;
  cert.color_i = color_i;
  std::sort(w2.begin(), w2.end());
  cert.w2 = std::move(w2);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!std::binary_search(cert.w2.begin(), cert.w2.end(), v)) cert.w1.push_back(v);
  return cert;
}

BadPartitionCertificate make_kind2(const ColoredMultipartiteGraph& g, const Rational& lambda,
                                   int color_i, int part_j, std::vector<int> u1) {
  BadPartitionCertificate cert;
  cert.kind = 2;
  cert.lambda = lambda;
  cert.color_i = color_i;
  cert.part_j = part_j;
  std::sort(u1.begin(), u1.end());
  cert.u1 = std::move(u1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.spec().part_of(v) == part_j) continue;
    if (!std::binary_search(cert.u1.begin(), cert.u1.end(), v)) cert.u2.push_back(v);
  }
  return cert;
}

// Filled once per search; lets exhaustive scans evaluate a candidate with a
// few popcounts instead of building a certificate.
struct FastGraph {
  int n = 0;
  // neighbor masks per color under the active counting mode
  std::array<std::vector<std::uint32_t>, 2> nbr;

  FastGraph(const ColoredMultipartiteGraph& g, OverlapCounting counting) : n(g.num_vertices()) {
    nbr[0].assign(n, 0);
    nbr[1].assign(n, 0);
    for (std::int64_t id = 0; id < g.num_edges(); ++id) {
      auto [u, v] = g.spec().edge_endpoints(id);
      ColorSet cs = g.edge_colors_by_id(id);
      for (int c = 1; c <= 2; ++c) {
        if (!edge_counts_for(cs, c, counting)) continue;
        nbr[c - 1][u] |= 1u << v;
        nbr[c - 1][v] |= 1u << u;
      }
    }
  }

  std::int64_t edges_between(int color, std::uint32_t xs, std::uint32_t ys) const {
    std::int64_t count = 0;
    for (std::uint32_t rest = xs; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      count += std::popcount(nbr[color - 1][v] & ys);
    }
    return count;
  }

  std::int64_t edges_inside(int color, std::uint32_t xs) const {
    return edges_between(color, xs, xs) / 2;
  }
};

struct Kind1Scan {
  const ColoredMultipartiteGraph& g;
  const FastGraph& fg;
  int n;
  Rational lambda;
  int color_i;

  bool candidate_ok(std::uint32_t w2_mask, std::uint32_t full) const {
    std::uint32_t w1_mask = full & ~w2_mask;
    if (w2_mask == 0 || w1_mask == 0) return false;
    int w2_size = std::popcount(w2_mask);
    Rational w2(w2_size);
    if (!((Rational(1) - lambda) * n <= w2 && w2 <= (Rational(1) + lambda) * g.spec().part_size(0)))
      return false;
    Rational lam_n2 = lambda * n * n;
    if (Rational(fg.edges_between(color_i, w1_mask, w2_mask)) > lam_n2) return false;
    if (Rational(fg.edges_inside(3 - color_i, w1_mask)) > lam_n2) return false;
    return true;
  }
};

struct Kind2Scan {
  const ColoredMultipartiteGraph& g;
  const FastGraph& fg;
  int n;
  Rational lambda;
  int color_i;
  int part_j;
  std::vector<int> rest;  // vertices outside part j
  std::uint32_t vj_mask = 0;

  bool candidate_ok(std::uint32_t u1_local) const {
    std::uint32_t u1_mask = 0, u2_mask = 0;
    for (std::size_t i = 0; i < rest.size(); ++i)
      ((u1_local >> i & 1) ? u1_mask : u2_mask) |= 1u << rest[i];
    Rational lam_n2 = lambda * n * n;
    Rational one_minus = (Rational(1) - lambda) * n;
    Rational one_plus = (Rational(1) + lambda) * n;
    if (!(Rational(g.spec().part_size(part_j)) >= one_minus)) return false;
    Rational u1(std::popcount(u1_mask)), u2(std::popcount(u2_mask));
    if (!(one_minus <= u1 && u1 <= one_plus)) return false;
    if (!(one_minus <= u2 && u2 <= one_plus)) return false;
    if (Rational(fg.edges_between(color_i, vj_mask, u1_mask)) > lam_n2) return false;
    if (Rational(fg.edges_between(3 - color_i, vj_mask, u2_mask)) > lam_n2) return false;
    return true;
  }
};

std::vector<int> identity_vertices(int n) {
  std::vector<int> ident(n);
  std::iota(ident.begin(), ident.end(), 0);
  return ident;
}

// Lowest index in [start, space) accepted by `ok`, scanned in parallel chunks.
std::int64_t scan_first_mask(std::int64_t start, std::int64_t space, int threads,
                             const std::function<bool(std::uint32_t)>& ok) {
  std::atomic<std::int64_t> best{space};
  const int nt = resolve_threads(threads);
  const std::int64_t chunk = std::max<std::int64_t>(1024, (space - start) / (nt * 16) + 1);
  const std::int64_t chunks = (space - start + chunk - 1) / chunk;
#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (std::int64_t c = 0; c < chunks; ++c) {
    std::int64_t lo = start + c * chunk;
    if (lo >= best.load(std::memory_order_relaxed)) continue;
    std::int64_t hi = std::min(space, lo + chunk);
    for (std::int64_t mask = lo; mask < hi; ++mask) {
      if (mask >= best.load(std::memory_order_relaxed)) break;
      if (ok(static_cast<std::uint32_t>(mask))) {
        std::int64_t cur = best.load();
        while (mask < cur && !best.compare_exchange_weak(cur, mask)) {
        }
        break;
      }
    }
  }
  return best.load() == space ? -1 : best.load();
}

std::vector<std::pair<int, int>> default_targets() {
  return {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
}

double as_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Total violation slack, normalized so edge and size clauses are comparable;
// zero iff every clause holds. Guides the local moves of the heuristic.
double violation_score(const BadPartitionCheck& check, const BadPartitionCertificate& cert,
                       int n, int n1) {
  const double lam = as_double(cert.lambda);
  const double lam_n2 = lam * n * n;
  const auto& m = check.measured;
  auto size_slack = [&](double size, double lower, double upper) {
    return (std::max(0.0, lower - size) + std::max(0.0, size - upper)) / n;
  };
  auto edge_slack = [&](double count) {
    return std::max(0.0, count - lam_n2) / (static_cast<double>(n) * n);
  };
  if (cert.kind == 1)
    return size_slack(m.w2_size, (1 - lam) * n, (1 + lam) * n1) +
           edge_slack(static_cast<double>(m.cross_edges_color_i)) +
           edge_slack(static_cast<double>(m.inside_w1_other_color));
  return edge_slack(static_cast<double>(m.vj_u1_color_i)) +
         edge_slack(static_cast<double>(m.vj_u2_other_color)) +
         size_slack(m.vj_size, (1 - lam) * n, std::numeric_limits<double>::infinity()) +
         size_slack(m.u1_size, (1 - lam) * n, (1 + lam) * n) +
         size_slack(m.u2_size, (1 - lam) * n, (1 + lam) * n);
}

std::uint64_t splitmix(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

StabilitySearchResult search_bad_partition(const ColoredMultipartiteGraph& g, int n,
                                           const Rational& lambda,
                                           const StabilitySearchOptions& opts) {
  if (g.num_colors() != 2) throw invalid_input("bad-partition search needs a 2-colored graph");
  const int N = g.num_vertices();
  const auto targets = opts.targets.empty() ? default_targets() : opts.targets;
  StabilitySearchResult result;
  FastGraph fg(g, opts.counting);

  if (N <= opts.exhaustive_max_n) {
    result.exhaustive = true;
    for (auto [color_i, kind] : targets) {
      if (kind == 1) {
        Kind1Scan scan{g, fg, n, lambda, color_i};
        std::int64_t space = std::int64_t(1) << N;
        std::uint32_t full = static_cast<std::uint32_t>(space - 1);
        std::int64_t hit = scan_first_mask(1, space, opts.threads, [&](std::uint32_t mask) {
          return scan.candidate_ok(mask, full);
        });
        result.examined += hit < 0 ? space - 1 : hit;
        if (hit >= 0) {
          auto cert = make_kind1(
              g, lambda, color_i,
              mask_to_vertices(static_cast<std::uint32_t>(hit), identity_vertices(N)));
          auto check = check_bad_partition(g, n, cert, opts.counting);
          cert.measured = check.measured;
          if (check.pass) {
            result.certificate = std::move(cert);
            return result;
          }
        }
      } else {
        for (int j = 0; j < g.spec().part_count(); ++j) {
          Kind2Scan scan{g, fg, n, lambda, color_i, j, {}, 0};
          for (int v = 0; v < N; ++v) {
            if (g.spec().part_of(v) == j)
              scan.vj_mask |= 1u << v;
            else
              scan.rest.push_back(v);
          }
          std::int64_t space = std::int64_t(1) << scan.rest.size();
          std::int64_t hit = scan_first_mask(0, space, opts.threads, [&](std::uint32_t mask) {
            return scan.candidate_ok(mask);
          });
          result.examined += hit < 0 ? space : hit + 1;
          if (hit >= 0) {
            auto cert = make_kind2(g, lambda, color_i, j,
                                   mask_to_vertices(static_cast<std::uint32_t>(hit), scan.rest));
            auto check = check_bad_partition(g, n, cert, opts.counting);
            cert.measured = check.measured;
            if (check.pass) {
              result.certificate = std::move(cert);
              return result;
            }
          }
        }
      }
    }
    return result;
  }

  // Heuristic regime: seeded candidates plus greedy single-vertex moves.
  result.exhaustive = false;
  auto try_cert = [&](BadPartitionCertificate cert) -> bool {
    auto check = check_bad_partition(g, n, cert, opts.counting);
    ++result.examined;
    if (!check.pass) return false;
    cert.measured = check.measured;
    result.certificate = std::move(cert);
    return true;
  };

  for (auto [color_i, kind] : targets) {
    if (kind == 1) {
      std::vector<std::vector<int>> seeds;
      for (int c = 1; c <= 2; ++c) {
        ColorSubgraph cs = components(g, c);
        int largest = 0;
        for (int id = 1; id < cs.count(); ++id)
          if (cs.component_sizes[id] > cs.component_sizes[largest]) largest = id;
        std::vector<int> w2;
        for (int v = 0; v < N; ++v)
          if (cs.component_of[v] != largest) w2.push_back(v);
        if (!w2.empty() && static_cast<int>(w2.size()) < N) seeds.push_back(std::move(w2));
      }
      for (int j = 0; j < g.spec().part_count(); ++j) {
        std::vector<int> w2;
        for (int v = g.spec().part_begin(j); v < g.spec().part_end(j); ++v) w2.push_back(v);
        if (static_cast<int>(w2.size()) < N) seeds.push_back(std::move(w2));
      }
      {
        std::vector<int> w2;
        for (int v = std::max(1, N - n); v < N; ++v) w2.push_back(v);
        seeds.push_back(std::move(w2));
      }
      for (auto& seed : seeds)
        if (try_cert(make_kind1(g, lambda, color_i, seed))) return result;

      // local moves from the first seed
      if (!seeds.empty()) {
        std::uint64_t rng = opts.seed ^ 0x5151bad5151bad51ull;
        std::vector<char> in_w2(N, 0);
        for (int v : seeds[0]) in_w2[v] = 1;
        const int n1 = g.spec().part_size(0);
        auto current = [&] {
          std::vector<int> w2;
          for (int v = 0; v < N; ++v)
            if (in_w2[v]) w2.push_back(v);
          return make_kind1(g, lambda, color_i, w2);
        };
        auto score_of = [&](const BadPartitionCertificate& cand) {
          return violation_score(check_bad_partition(g, n, cand, opts.counting), cand, n, n1);
        };
        double score = score_of(current());
        for (std::uint64_t it = 0; it < opts.heuristic_iters && score > 0; ++it) {
          int v = static_cast<int>(splitmix(rng) % N);
          in_w2[v] ^= 1;
          int size_w2 = static_cast<int>(std::count(in_w2.begin(), in_w2.end(), 1));
          if (size_w2 == 0 || size_w2 == N) {
            in_w2[v] ^= 1;
            continue;
          }
          auto cand = current();
          auto check = check_bad_partition(g, n, cand, opts.counting);
          ++result.examined;
          if (check.pass) {
            cand.measured = check.measured;
            result.certificate = std::move(cand);
            return result;
          }
          double cand_score = violation_score(check, cand, n, n1);
          if (cand_score <= score)
            score = cand_score;
          else
            in_w2[v] ^= 1;  // revert
        }
      }
    } else {
      for (int j = 0; j < g.spec().part_count(); ++j) {
        // whole-part splits of the remainder, largest parts into U1 first
        std::vector<int> others;
        for (int p = 0; p < g.spec().part_count(); ++p)
          if (p != j) others.push_back(p);
        for (std::size_t take = 1; take < others.size(); ++take) {
          std::vector<int> u1;
          for (std::size_t t = 0; t < take; ++t)
            for (int v = g.spec().part_begin(others[t]); v < g.spec().part_end(others[t]); ++v)
              u1.push_back(v);
          if (try_cert(make_kind2(g, lambda, color_i, j, u1))) return result;
        }
      }
    }
  }
  return result;
}

StrictModeCheck check_strict_regime(int n, int s, const Rational& eps, const Rational& gamma) {
  StrictModeCheck out;
  auto violate = [&out](std::string why) {
    out.ok = false;
    out.violations.push_back(std::move(why));
  };
  if (!(n >= s && s >= 2)) violate("requires n >= s >= 2");
  if (!(eps > 0)) violate("requires eps > 0");
  if (!(eps < gamma / 1000)) violate("requires eps < gamma/1000");
  if (!(gamma / 1000 < Rational(1, 1000000))) violate("requires gamma/1000 < 10^-6");
  if (!(Rational(n) * gamma > 100)) violate("requires n > 100/gamma");
  return out;
}

AuditReport audit_stability(const ColoredMultipartiteGraph& g, int n, const Rational& gamma,
                            const Rational& eps, const Rational& lambda_factor,
                            const StabilitySearchOptions& opts) {
  if (gamma <= 0) throw invalid_input("gamma must be positive");
  AuditReport rep;
  rep.strict_mode = check_strict_regime(n, g.spec().part_count(), eps, gamma);
  rep.non_probative = !rep.strict_mode.ok;
  rep.suitability = check_suitability(g, n, eps);

  MatchingCertificate a1 = alpha_star(g, 1);
  MatchingCertificate a2 = alpha_star(g, 2);
  rep.alpha_star_1 = a1.size;
  rep.alpha_star_2 = a2.size;

  Rational bound = (Rational(1) + gamma) * n;
  int best = std::max(a1.size, a2.size);
  rep.hypothesis_met = Rational(best) <= bound;
  if (!rep.hypothesis_met) {
    rep.large_matching = a1.size >= a2.size ? std::move(a1) : std::move(a2);
    return rep;
  }
  rep.lambda = lambda_factor * gamma;
  rep.search = search_bad_partition(g, n, rep.lambda, opts);
  return rep;
}

}  // namespace cmatch
