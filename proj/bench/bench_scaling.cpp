// Times the serial reference scans against the OpenMP kernels and reports
// the thread-scaling of the exhaustive verifier. Run manually; not a test.

#include <omp.h>

#include <chrono>
#include <cstdio>

#include "cmatch/gallai_edmonds.hpp"
#include "cmatch/verifier.hpp"

using namespace cmatch;

namespace {

double seconds(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench_verifier() {
  std::printf("== exhaustive verifier: serial reference vs mask kernel ==\n");
  struct Case {
    const char* name;
    int x1, x2, x3;  // x3 = 0 means a 2-color case on K_N singletons
    std::vector<int> parts;
  };
  std::vector<Case> cases = {
      {"thm2 K_5 x=(2,2)", 2, 2, 0, std::vector<int>(5, 1)},
      {"thm3 x=(2,2,1)", 2, 2, 1, {}},
      {"thm3 x=(2,2,2)", 2, 2, 2, {}},
  };
  for (const auto& c : cases) {
    VerifyOptions opts;
    opts.threads = 1;
    double t_ref = -1;
    if (c.x3 == 0) {
      MultipartiteSpec spec(c.parts);
      t_ref = seconds([&] { verify_thm2_reference(spec, c.x1, c.x2); });
    } else if (c.x1 + c.x2 + c.x3 <= 5) {
      t_ref = seconds([&] { verify_thm3_reference(c.x1, c.x2, c.x3); });
    }
    double t1 = seconds([&] {
      if (c.x3 == 0)
        verify_thm2(MultipartiteSpec(c.parts), c.x1, c.x2, opts);
      else
        verify_thm3(c.x1, c.x2, c.x3, opts);
    });
    opts.threads = omp_get_max_threads();
    double tp = seconds([&] {
      if (c.x3 == 0)
        verify_thm2(MultipartiteSpec(c.parts), c.x1, c.x2, opts);
      else
        verify_thm3(c.x1, c.x2, c.x3, opts);
    });
    std::printf("%-22s reference %8.3fs   kernel(1) %8.3fs   kernel(%d) %8.3fs   speedup %5.2fx\n",
                c.name, t_ref, t1, opts.threads, tp, t1 / tp);
  }
}

void bench_ge() {
  std::printf("== Gallai-Edmonds decomposition: 1 thread vs all ==\n");
  auto spec = MultipartiteSpec::singletons(60);
  std::uint64_t state = 12345;
  auto g = ColoredMultipartiteGraph::build_complete(spec, 2, false, [&state](int, int) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return (state >> 33) % 3 == 0 ? color_bit(1) : color_bit(2);
  });
  double t1 = seconds([&] { ge_decompose(g, 1, std::nullopt, 1); });
  int nt = omp_get_max_threads();
  double tp = seconds([&] { ge_decompose(g, 1, std::nullopt, nt); });
  std::printf("random K_60 subgraph: 1 thread %8.3fs   %d threads %8.3fs   speedup %5.2fx\n",
              t1, nt, tp, t1 / tp);
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", omp_get_max_threads());
  bench_verifier();
  std::printf("\n");
  bench_ge();
  return 0;
}
