// Benchmark: OpenMP kernels against their serial reference implementations.
// Run with OMP_NUM_THREADS=N to vary the thread count; results must agree
// exactly regardless.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sl2cong/identities.hpp"
#include "sl2cong/search.hpp"

using namespace sl2cong;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return seconds(t0, std::chrono::steady_clock::now());
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled at build time\n");
#endif

  {
    search::SearchBounds b{5, 6, false};
    std::vector<search::Witness> serial, parallel;
    (void)search::search_witness_serial(3, 8, search::SearchBounds{3, 4, false});  // warm up
    double ts = timed([&] { serial = search::search_witness_serial(3, 8, b); });
    double tp = timed([&] { parallel = search::search_witness(3, 8, b); });
    bool same = serial.size() == parallel.size();
    for (size_t i = 0; same && i < serial.size(); ++i)
      same = serial[i].word.str() == parallel[i].word.str();
    std::printf("witness search p=3 r=8 syll<=5 |e|<=6: serial %.3fs, parallel %.3fs, "
                "speedup %.2fx, %zu witnesses, outputs %s\n",
                ts, tp, ts / tp, serial.size(), same ? "identical" : "DIFFER");
    if (!same) return 1;
  }

  {
    std::vector<ids::VerificationReport> serial, parallel;
    (void)ids::verify_all_serial(20, 1);  // warm up
    double ts = timed([&] { serial = ids::verify_all_serial(300, 3); });
    double tp = timed([&] { parallel = ids::verify_all(300, 3); });
    bool same = serial.size() == parallel.size();
    size_t fails = 0;
    for (size_t i = 0; same && i < serial.size(); ++i) {
      same = serial[i].name == parallel[i].name && serial[i].p == parallel[i].p &&
             serial[i].verdict == parallel[i].verdict;
      fails += serial[i].verdict == ids::Verdict::fail;
    }
    std::printf("identity catalog p<300 k<=3: serial %.3fs, parallel %.3fs, speedup "
                "%.2fx, %zu instances (%zu fail), outputs %s\n",
                ts, tp, ts / tp, serial.size(), fails, same ? "identical" : "DIFFER");
    if (!same) return 1;
  }
  return 0;
}
