// Wall-clock comparison of the OpenMP kernels against their serial reference
// twins. Each pair is checked for identical output before timing is reported.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include <omp.h>

#include "qpg/goldbach.hpp"
#include "qpg/hardy_littlewood.hpp"
#include "qpg/numtheory.hpp"
#include "qpg/reference.hpp"
#include "qpg/symplectic.hpp"

namespace {

double timed(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

int failures = 0;

void report(const std::string& name, double serial_s, double parallel_s,
            bool equal) {
  std::printf("%-28s %10.3fs %10.3fs %7.2fx   %s\n", name.c_str(), serial_s,
              parallel_s, parallel_s > 0 ? serial_s / parallel_s : 0.0,
              equal ? "outputs equal" : "OUTPUT MISMATCH");
  if (!equal) ++failures;
}

}  // namespace

int main() {
  using namespace qpg;
  const nt::PrimeTable pt;
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %11s %11s %8s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    hl::ScanReport serial, parallel;
    const double ts = timed([&] { serial = ref::theorem1_scan_serial(1'000'000, pt); });
    const double tp = timed([&] { parallel = hl::theorem1_scan(1'000'000, pt); });
    report("theorem1 scan 1e6", ts, tp,
           serial.satisfied == parallel.satisfied &&
               serial.violations == parallel.violations);
  }
  {
    hl::ScanReport serial, parallel;
    const double ts = timed([&] { serial = ref::prop2_scan_serial(1'000'000, pt); });
    const double tp = timed([&] { parallel = hl::prop2_scan(1'000'000, pt); });
    report("prop2 scan 1e6", ts, tp, serial.violations == parallel.violations);
  }
  {
    std::vector<std::vector<std::uint64_t>> serial, parallel;
    const double ts = timed([&] { serial = ref::atg_table_serial(10, 20'000, pt); });
    const double tp = timed([&] { parallel = goldbach::atg_table(10, 20'000, pt); });
    report("atg table 2e4", ts, tp, serial == parallel);
  }
  {
    std::vector<std::uint64_t> serial, parallel;
    const double ts = timed([&] { serial = ref::maximal_g_set_serial(20'000, pt); });
    const double tp = timed([&] { parallel = goldbach::maximal_g_set(20'000, pt); });
    report("maximal-g set 2e4", ts, tp, serial == parallel);
  }
  {
    std::vector<std::uint64_t> serial, parallel;
    const double ts = timed([&] { serial = ref::gd_champions_serial(100'000, pt); });
    const double tp = timed([&] { parallel = goldbach::gd_champions(100'000, pt); });
    report("gd champions 1e5", ts, tp, serial == parallel);
  }
  {
    std::vector<symplectic::IsotropicLine> serial, parallel;
    const double ts =
        timed([&] { serial = ref::enumerate_isotropic_lines_serial(36); });
    const double tp = timed([&] { parallel = symplectic::enumerate_isotropic_lines(36); });
    bool equal = serial.size() == parallel.size();
    for (std::size_t i = 0; equal && i < serial.size(); ++i) {
      equal = serial[i].elements == parallel[i].elements;
    }
    report("isotropic lines q=36", ts, tp, equal);
  }

  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
