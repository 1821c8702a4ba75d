#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "qpg/goldbach.hpp"
#include "qpg/hardy_littlewood.hpp"
#include "qpg/numtheory.hpp"
#include "qpg/reference.hpp"
#include "qpg/symplectic.hpp"

using namespace qpg;

namespace {
const nt::PrimeTable& table() {
  static const nt::PrimeTable pt;
  return pt;
}
}  // namespace

TEST_CASE("positivity scan: parallel == serial") {
  const auto& pt = table();
  const auto par = hl::theorem1_scan(100000, pt);
  const auto ser = ref::theorem1_scan_serial(100000, pt);
  CHECK(par.satisfied == ser.satisfied);
  CHECK(par.violations == ser.violations);
}

TEST_CASE("ratio-below-1 scan: parallel == serial") {
  const auto& pt = table();
  const auto par = hl::prop2_scan(100000, pt);
  const auto ser = ref::prop2_scan_serial(100000, pt);
  CHECK(par.violations == ser.violations);
}

TEST_CASE("index table: parallel == serial") {
  const auto& pt = table();
  CHECK(goldbach::atg_table(10, 2000, pt) ==
        ref::atg_table_serial(10, 2000, pt));
}

TEST_CASE("maximal pair-count set: parallel == serial") {
  const auto& pt = table();
  CHECK(goldbach::maximal_g_set(2000, pt) ==
        ref::maximal_g_set_serial(2000, pt));
}

TEST_CASE("defect champions: parallel == serial") {
  const auto& pt = table();
  CHECK(goldbach::gd_champions(2000, pt) == ref::gd_champions_serial(2000, pt));
}

TEST_CASE("ratio champions: parallel == serial") {
  const auto& pt = table();
  CHECK(hl::x_champions(2310, pt) == ref::x_champions_serial(2310, pt));
}

TEST_CASE("isotropic lines: parallel == serial") {
  for (std::uint32_t q : {6u, 8u, 12u, 18u}) {
    const auto par = symplectic::enumerate_isotropic_lines(q);
    const auto ser = ref::enumerate_isotropic_lines_serial(q);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
      REQUIRE(par[i].elements == ser[i].elements);
    }
  }
}

TEST_CASE("pair count: sieve route == convolution route") {
  const auto& pt = table();
  for (std::uint64_t n = 2; n <= 2000; ++n) {
    REQUIRE(goldbach::goldbach_pair_count(n, pt) ==
            ref::pair_count_convolution(n, pt));
  }
}
