#include "cmatch/verifier.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <numeric>

#include "cmatch/extremal.hpp"

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

std::uint64_t bounded(std::uint64_t& state, std::uint64_t bound) {
  std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % bound;
  for (;;) {
    std::uint64_t v = splitmix(state);
    if (v < limit) return v % bound;
  }
}

// Connected-matching sizes evaluated straight on edge masks; the host is
// fixed, so endpoints are precomputed once. Used by the exhaustive kernel.
class MaskEvaluator {
 public:
  explicit MaskEvaluator(const MultipartiteSpec& spec)
      : n_(spec.total()), m_(spec.cross_pair_count()) {
    endpoints_.reserve(m_);
    for (std::int64_t id = 0; id < m_; ++id) endpoints_.push_back(spec.edge_endpoints(id));
  }

  std::int64_t edge_count() const { return m_; }

  int alpha_star_of(std::uint64_t mask) const {
    std::vector<std::uint64_t> nbr(n_, 0);
    for (std::uint64_t rest = mask; rest;) {
      int e = std::countr_zero(rest);
      rest &= rest - 1;
      auto [u, v] = endpoints_[e];
      nbr[u] |= 1ull << v;
      nbr[v] |= 1ull << u;
    }
    int best = 0;
    std::uint64_t unseen = (n_ >= 64 ? ~0ull : (1ull << n_) - 1);
    while (unseen) {
      int root = std::countr_zero(unseen);
      std::uint64_t comp = 0, frontier = 1ull << root;
      while (frontier) {
        comp |= frontier;
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f;) {
          int v = std::countr_zero(f);
          f &= f - 1;
          next |= nbr[v];
        }
        frontier = next & ~comp;
      }
      unseen &= ~comp;
      if (std::popcount(comp) < 2) continue;
      // matching inside the component
      std::vector<int> verts;
      for (std::uint64_t c = comp; c;) {
        verts.push_back(std::countr_zero(c));
        c &= c - 1;
      }
      std::vector<std::vector<int>> adj(verts.size());
      for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
          if (nbr[verts[a]] >> verts[b] & 1) {
            adj[a].push_back(static_cast<int>(b));
            adj[b].push_back(static_cast<int>(a));
          }
      auto mate = blossom_max_matching(adj);
      int size = 0;
      for (std::size_t v = 0; v < mate.size(); ++v)
        if (mate[v] > static_cast<int>(v)) ++size;
      best = std::max(best, size);
    }
    return best;
  }

 private:
  int n_;
  std::int64_t m_;
  std::vector<std::pair<int, int>> endpoints_;
};

// alpha'_* per subgraph mask, cached when the edge space is small enough.
class AlphaStarTable {
 public:
  AlphaStarTable(const MaskEvaluator& eval, int threads) : eval_(eval) {
    if (eval.edge_count() <= kCacheBits) {
      table_.resize(std::size_t(1) << eval.edge_count());
      const int nt = resolve_threads(threads);
#pragma omp parallel for schedule(dynamic, 1024) num_threads(nt)
      for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(table_.size()); ++mask)
        table_[mask] = static_cast<std::int8_t>(eval.alpha_star_of(mask));
    }
  }

  int operator()(std::uint64_t mask) const {
    if (!table_.empty()) return table_[mask];
    return eval_.alpha_star_of(mask);
  }

 private:
  static constexpr int kCacheBits = 22;
  const MaskEvaluator& eval_;
  std::vector<std::int8_t> table_;
};

struct ScanHit {
  bool found = false;
  std::uint64_t rank = 0;
  std::vector<std::uint8_t> word;
};

// Word odometer over k^m words in lexicographic order (digit 0 most
// significant), with per-color edge masks maintained incrementally.
struct WordState {
  std::int64_t m;
  int k;
  std::vector<std::uint8_t> word;           // colors, 1-based
  std::array<std::uint64_t, kMaxColors> masks{};

  WordState(std::int64_t m_, int k_, std::uint64_t rank) : m(m_), k(k_), word(m_, 1) {
    for (std::int64_t i = m - 1; i >= 0 && rank; --i) {
      word[i] = static_cast<std::uint8_t>(1 + rank % k);
      rank /= k;
    }
    for (std::int64_t e = 0; e < m; ++e) masks[word[e] - 1] |= 1ull << e;
  }

  // false once the space is exhausted
  bool advance() {
    std::int64_t i = m - 1;
    while (i >= 0 && word[i] == k) {
      masks[word[i] - 1] &= ~(1ull << i);
      word[i] = 1;
      masks[0] |= 1ull << i;
      --i;
    }
    if (i < 0) return false;
    masks[word[i] - 1] &= ~(1ull << i);
    ++word[i];
    masks[word[i] - 1] |= 1ull << i;
    return true;
  }
};

// Finds the lexicographically first word whose coloring defeats every x_i,
// scanning [0, scan_total) in parallel chunks; early exits stay sound because
// only ranks below the current best are ever reported. With symmetry breaking
// the scan space is the prefix of words whose first digit is color 1, which
// is exactly the first k^(m-1) ranks.
ScanHit scan_for_counterexample(const MultipartiteSpec& spec, const std::vector<int>& x,
                                std::uint64_t scan_total, int threads,
                                const AlphaStarTable& table) {
  const std::int64_t m = spec.cross_pair_count();
  const int k = static_cast<int>(x.size());
  const int nt = resolve_threads(threads);
  std::atomic<std::uint64_t> best{scan_total};

  const std::uint64_t chunk =
      std::max<std::uint64_t>(512, scan_total / (static_cast<std::uint64_t>(nt) * 32) + 1);
  const std::uint64_t chunks = (scan_total + chunk - 1) / chunk;

#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    std::uint64_t lo = static_cast<std::uint64_t>(c) * chunk;
    if (lo >= best.load(std::memory_order_relaxed)) continue;
    std::uint64_t hi = std::min<std::uint64_t>(scan_total, lo + chunk);
    WordState state(m, k, lo);
    for (std::uint64_t rank = lo; rank < hi; ++rank) {
      if (rank >= best.load(std::memory_order_relaxed)) break;
      bool counterexample = true;
      for (int i = 0; i < k && counterexample; ++i) {
        // cheap pruning first: a color with fewer than x_i edges cannot
        // carry a matching of size x_i
        if (std::popcount(state.masks[i]) < x[i]) continue;
        if (table(state.masks[i]) >= x[i]) counterexample = false;
      }
      if (counterexample) {
        std::uint64_t cur = best.load();
        while (rank < cur && !best.compare_exchange_weak(cur, rank)) {
        }
        break;
      }
      if (rank + 1 < hi) state.advance();
    }
  }

  ScanHit hit;
  hit.rank = best.load();
  if (hit.rank == scan_total) return hit;
  hit.found = true;
  hit.word = WordState(m, k, hit.rank).word;
  return hit;
}

ColoredMultipartiteGraph graph_from_word(const MultipartiteSpec& spec, int k,
                                         const std::vector<std::uint8_t>& word) {
  std::vector<ColorSet> edge_colors(word.size());
  for (std::size_t e = 0; e < word.size(); ++e) edge_colors[e] = color_bit(word[e]);
  return ColoredMultipartiteGraph::from_edge_colors(spec, k, false, edge_colors);
}

std::vector<int> alpha_star_vector(const ColoredMultipartiteGraph& g) {
  std::vector<int> out;
  for (int c = 1; c <= g.num_colors(); ++c) out.push_back(alpha_star(g, c).size);
  return out;
}

bool is_counterexample(const std::vector<int>& alpha, const std::vector<int>& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (alpha[i] >= x[i]) return false;
  return true;
}

VerificationReport run_exhaustive(Statement statement, const MultipartiteSpec& spec,
                                  const std::vector<int>& x, const VerifyOptions& opts) {
  VerificationReport rep;
  rep.statement = statement;
  rep.parts = spec.part_sizes();
  rep.x = x;
  rep.mode = VerifyMode::Exhaustive;
  rep.seed = opts.seed;
  rep.symmetry_break = opts.symmetry_break;

  const int k = static_cast<int>(x.size());
  const std::int64_t m = spec.cross_pair_count();
  if (opts.symmetry_break && !std::all_of(x.begin(), x.end(), [&](int v) { return v == x[0]; }))
    throw invalid_input("symmetry breaking needs equal thresholds");
  if (m > 63) throw invalid_input("exhaustive verification supports at most 63 cross pairs");

  rep.total_colorings = coloring_count(m, k);
  unsigned __int128 scan_space = rep.total_colorings;
  if (opts.symmetry_break && m > 0) scan_space /= static_cast<unsigned>(k);
  std::uint64_t scan_total = scan_space > opts.budget
                                 ? opts.budget
                                 : static_cast<std::uint64_t>(scan_space);
  rep.partial = scan_space > opts.budget;

  auto t0 = std::chrono::steady_clock::now();
  MaskEvaluator eval(spec);
  AlphaStarTable table(eval, opts.threads);
  ScanHit hit = scan_for_counterexample(spec, x, scan_total, opts.threads, table);
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (hit.found) {
    auto g = graph_from_word(spec, k, hit.word);
    auto alpha = alpha_star_vector(g);  // revalidate with the certified engine
    if (!is_counterexample(alpha, x))
      throw std::logic_error("kernel counterexample failed revalidation");
    rep.outcome = VerifyOutcome::Counterexample;
    rep.counterexample = std::move(g);
    rep.counterexample_alpha_star = std::move(alpha);
    rep.counterexample_rank = hit.rank;
    rep.colorings_checked = hit.rank + 1;
  } else {
    rep.outcome = rep.partial ? VerifyOutcome::PartialNoCounterexample : VerifyOutcome::Holds;
    rep.colorings_checked = scan_total;
  }
  return rep;
}

VerificationReport run_random(Statement statement, const MultipartiteSpec& spec,
                              const std::vector<int>& x, const VerifyOptions& opts) {
  VerificationReport rep;
  rep.statement = statement;
  rep.parts = spec.part_sizes();
  rep.x = x;
  rep.mode = VerifyMode::Random;
  rep.seed = opts.seed;
  rep.samples = opts.samples;

  const int k = static_cast<int>(x.size());
  const std::int64_t m = spec.cross_pair_count();
  rep.total_colorings = coloring_count(m, k);

  // Each sample's word is derived from (seed, sample index) alone, so the
  // report does not depend on the thread count. The lowest sample index with
  // a counterexample wins.
  const int nt = resolve_threads(opts.threads);
  std::atomic<std::uint64_t> best{opts.samples};
  auto sample_word = [&](std::uint64_t s, std::vector<std::uint8_t>& word) {
    std::uint64_t rng = opts.seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull * (s + 1);
    word.resize(m);
    for (std::int64_t e = 0; e < m; ++e)
      word[e] = static_cast<std::uint8_t>(1 + bounded(rng, static_cast<std::uint64_t>(k)));
  };
  auto t0 = std::chrono::steady_clock::now();
#pragma omp parallel num_threads(nt)
  {
    std::vector<std::uint8_t> word;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(opts.samples); ++s) {
      std::uint64_t rank = static_cast<std::uint64_t>(s);
      if (rank >= best.load(std::memory_order_relaxed)) continue;
      sample_word(rank, word);
      auto g = graph_from_word(spec, k, word);
      if (is_counterexample(alpha_star_vector(g), x)) {
        std::uint64_t cur = best.load();
        while (rank < cur && !best.compare_exchange_weak(cur, rank)) {
        }
      }
    }
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  rep.colorings_checked = opts.samples;
  if (best.load() < opts.samples) {
    std::vector<std::uint8_t> word;
    sample_word(best.load(), word);
    auto g = graph_from_word(spec, k, word);
    rep.outcome = VerifyOutcome::Counterexample;
    rep.counterexample_alpha_star = alpha_star_vector(g);
    rep.counterexample = std::move(g);
    rep.counterexample_rank = best.load();
    return rep;
  }
  rep.outcome = VerifyOutcome::SampledNoCounterexample;
  return rep;
}

VerificationReport run_statement(Statement statement, const MultipartiteSpec& spec,
                                 const std::vector<int>& x, const VerifyOptions& opts) {
  return opts.mode == VerifyMode::Exhaustive ? run_exhaustive(statement, spec, x, opts)
                                             : run_random(statement, spec, x, opts);
}

}  // namespace

PreconditionCheck check_preconditions_thm2(const MultipartiteSpec& spec, int x1, int x2) {
  if (x1 < x2) throw invalid_input("thresholds must satisfy x1 >= x2");
  if (x2 < 1) throw invalid_input("thresholds must be at least 1");
  if (spec.part_count() < 2) throw invalid_input("host needs s >= 2 parts");
  PreconditionCheck out;
  const int n_total = spec.total();
  if (n_total < 2 * x1 + x2 - 1) {
    out.ok = false;
    out.violations.push_back("N = " + std::to_string(n_total) + " < 2*x1 + x2 - 1 = " +
                             std::to_string(2 * x1 + x2 - 1));
  }
  for (int j = 0; j < spec.part_count(); ++j)
    if (n_total - spec.part_size(j) < x1 + x2 - 1) {
      out.ok = false;
      out.violations.push_back("N - n_" + std::to_string(j + 1) + " = " +
                               std::to_string(n_total - spec.part_size(j)) +
                               " < x1 + x2 - 1 = " + std::to_string(x1 + x2 - 1));
    }
  return out;
}

VerificationReport verify_thm2(const MultipartiteSpec& spec, int x1, int x2,
                               const VerifyOptions& opts) {
  PreconditionCheck pre = check_preconditions_thm2(spec, x1, x2);
  if (!pre.ok && !opts.force)
    throw invalid_input("theorem conditions fail (" + pre.violations.front() +
                        "); pass force to sweep anyway");
  auto rep = run_statement(Statement::Thm2Multipartite, spec, {x1, x2}, opts);
  rep.forced = !pre.ok;
  rep.precondition_violations = std::move(pre.violations);
  return rep;
}

VerificationReport verify_thm3(int x1, int x2, int x3, const VerifyOptions& opts) {
  if (!(1 <= x2 && 1 <= x3 && x2 <= x1 && x3 <= x1))
    throw invalid_input("thresholds must satisfy 1 <= x2, x3 <= x1");
  const int n_total = 2 * x1 + x2 + x3 - 2;
  auto spec = MultipartiteSpec::singletons(n_total);
  return run_statement(Statement::Thm3Complete, spec, {x1, x2, x3}, opts);
}

namespace {

VerificationReport run_reference(Statement statement, const MultipartiteSpec& spec,
                                 const std::vector<int>& x, std::uint64_t budget) {
  VerificationReport rep;
  rep.statement = statement;
  rep.parts = spec.part_sizes();
  rep.x = x;
  rep.mode = VerifyMode::Exhaustive;
  const int k = static_cast<int>(x.size());
  rep.total_colorings = coloring_count(spec.cross_pair_count(), k);
  rep.partial = rep.total_colorings > budget;

  EnumerateOptions eopts;
  eopts.budget = budget;
  std::uint64_t scanned = 0;
  std::optional<std::vector<std::uint8_t>> found;
  if (rep.total_colorings <= budget) {
    scanned = enumerate_colorings(
        spec, k, eopts,
        [&](const ColoredMultipartiteGraph& g, const std::vector<std::uint8_t>& word) {
          if (is_counterexample(alpha_star_vector(g), x)) {
            found = word;
            return false;
          }
          return true;
        });
  } else {
    // budget-capped partial scan, same order
    WordState state(spec.cross_pair_count(), k, 0);
    for (std::uint64_t rank = 0; rank < budget; ++rank) {
      auto g = graph_from_word(spec, k, state.word);
      ++scanned;
      if (is_counterexample(alpha_star_vector(g), x)) {
        found = state.word;
        break;
      }
      state.advance();
    }
  }
  rep.colorings_checked = scanned;
  if (found) {
    auto g = graph_from_word(spec, k, *found);
    rep.outcome = VerifyOutcome::Counterexample;
    rep.counterexample_alpha_star = alpha_star_vector(g);
    rep.counterexample = std::move(g);
    rep.counterexample_rank = scanned - 1;
  } else {
    rep.outcome = rep.partial ? VerifyOutcome::PartialNoCounterexample : VerifyOutcome::Holds;
  }
  return rep;
}

}  // namespace

VerificationReport verify_thm2_reference(const MultipartiteSpec& spec, int x1, int x2,
                                         std::uint64_t budget, bool force) {
  PreconditionCheck pre = check_preconditions_thm2(spec, x1, x2);
  if (!pre.ok && !force)
    throw invalid_input("theorem conditions fail (" + pre.violations.front() +
                        "); pass force to sweep anyway");
  auto rep = run_reference(Statement::Thm2Multipartite, spec, {x1, x2}, budget);
  rep.forced = !pre.ok;
  rep.precondition_violations = std::move(pre.violations);
  return rep;
}

VerificationReport verify_thm3_reference(int x1, int x2, int x3, std::uint64_t budget) {
  if (!(1 <= x2 && 1 <= x3 && x2 <= x1 && x3 <= x1))
    throw invalid_input("thresholds must satisfy 1 <= x2, x3 <= x1");
  auto spec = MultipartiteSpec::singletons(2 * x1 + x2 + x3 - 2);
  return run_reference(Statement::Thm3Complete, spec, {x1, x2, x3}, budget);
}

NecessityReport necessity_sweep(int n, int which, std::vector<int> n1_values) {
  if (which != 1 && which != 2) throw invalid_input("necessity sweep kind must be 1 or 2");
  if (n < 1) throw invalid_input("necessity sweep needs n >= 1");
  NecessityReport rep;
  rep.which = which;
  rep.n = n;
  if (which == 1) {
    auto g = figure1_coloring(n);
    NecessityEntry entry;
    entry.alpha_star_values = alpha_star_vector(g);
    entry.below_n = is_counterexample(entry.alpha_star_values, {n, n});
    rep.entries.push_back(std::move(entry));
  } else {
    if (n1_values.empty()) n1_values = {n, 2 * n, 3 * n};
    for (int n1 : n1_values) {
      auto g = figure2_coloring(n, n1);
      NecessityEntry entry;
      entry.n1 = n1;
      entry.alpha_star_values = alpha_star_vector(g);
      entry.below_n = is_counterexample(entry.alpha_star_values, {n, n});
      rep.entries.push_back(std::move(entry));
    }
  }
  rep.confirmed = std::all_of(rep.entries.begin(), rep.entries.end(),
                              [](const NecessityEntry& e) { return e.below_n; });
  return rep;
}

std::string to_string(Statement s) {
  return s == Statement::Thm2Multipartite ? "Thm2-multipartite" : "Thm3-complete";
}

std::string to_string(VerifyMode m) {
  return m == VerifyMode::Exhaustive ? "exhaustive" : "random";
}

std::string to_string(VerifyOutcome o) {
  switch (o) {
    case VerifyOutcome::Holds:
      return "holds";
    case VerifyOutcome::Counterexample:
      return "counterexample";
    case VerifyOutcome::SampledNoCounterexample:
      return "sampled-no-counterexample";
    case VerifyOutcome::PartialNoCounterexample:
      return "partial-no-counterexample";
  }
  return "unknown";
}

}  // namespace cmatch
