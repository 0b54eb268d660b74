// Times the brute-force reference enumerator against the pruned kernel,
// serial and OpenMP-parallel, and checks that all three agree.
//
//   bench_enumerate [max_workers]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "hurwitz/enumerate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds(const std::function<void()>& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool same_classes(const hurwitz::ClassSet& a, const hurwitz::ClassSet& b) {
  if (a.classes.size() != b.classes.size() || a.tuple_count != b.tuple_count) return false;
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    if (a.classes[i].rep != b.classes[i].rep) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int max_workers = 8;
#ifdef _OPENMP
  max_workers = omp_get_max_threads() > 1 ? omp_get_max_threads() : 8;
#endif
  if (argc > 1) max_workers = std::atoi(argv[1]);

  struct Case {
    int d, g;
    bool with_reference;
  };
  const Case cases[] = {{3, 2, true}, {4, 2, true}, {3, 3, true}, {5, 2, true}, {6, 2, false}, {4, 3, false}, {7, 2, false}};

  std::printf("%3s %3s %12s %12s %12s %8s %s\n", "d", "g", "reference_s", "serial_s", "parallel_s", "classes", "agree");
  bool ok = true;
  for (const auto& c : cases) {
    hurwitz::ClassSet ref, serial, parallel;
    double t_ref = -1;
    if (c.with_reference) t_ref = seconds([&] { ref = hurwitz::reference::enumerate_classes(c.d, c.g); });
    const double t_serial = seconds([&] { serial = hurwitz::enumerate_classes(c.d, c.g, {hurwitz::kDefaultBudget, 1}); });
    const double t_parallel =
        seconds([&] { parallel = hurwitz::enumerate_classes(c.d, c.g, {hurwitz::kDefaultBudget, max_workers}); });
    const bool agree = same_classes(serial, parallel) && (!c.with_reference || same_classes(ref, serial));
    ok = ok && agree;
    char ref_text[32] = "-";
    if (c.with_reference) std::snprintf(ref_text, sizeof ref_text, "%.4f", t_ref);
    std::printf("%3d %3d %12s %12.4f %12.4f %8zu %s\n", c.d, c.g, ref_text, t_serial, t_parallel,
                serial.classes.size(), agree ? "yes" : "NO");
  }
  std::printf("parallel runs used %d workers\n", max_workers);
  return ok ? 0 : 1;
}
