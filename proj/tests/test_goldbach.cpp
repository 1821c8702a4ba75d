#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <stdexcept>
#include <vector>

#include "qpg/errors.hpp"
#include "qpg/goldbach.hpp"
#include "qpg/numtheory.hpp"
#include "qpg/reference.hpp"

using namespace qpg;

namespace {
const nt::PrimeTable& table() {
  static const nt::PrimeTable pt;
  return pt;
}

const std::vector<std::uint64_t> kIndexZeroSmall = {1, 2,  3,  4,  5,  6,
                                                    8, 10, 12, 18, 24, 30};

// The full maximal-pair-count set up to 10^4 (verified stable up to there).
const std::vector<std::uint64_t> kMaxGSet = {2,  3,  4,  5,  6,  8,  10,
                                             12, 18, 24, 30, 7,  14, 16,
                                             36, 42, 48, 60, 90, 210};
}  // namespace

TEST_CASE("pair counts at known points") {
  const auto& pt = table();
  CHECK(goldbach::goldbach_pair_count(3, pt) == 0);
  CHECK(goldbach::goldbach_pair_count(4, pt) == 1);   // 2+2
  CHECK(goldbach::goldbach_pair_count(6, pt) == 1);   // 3+3
  CHECK(goldbach::goldbach_pair_count(10, pt) == 2);  // 3+7, 5+5
  CHECK(goldbach::goldbach_pair_count(1000, pt) == 28);
  CHECK_THROWS_AS(goldbach::goldbach_pair_count(1, pt), std::domain_error);
  CHECK_THROWS_AS(goldbach::goldbach_pair_count(0, pt), std::domain_error);
}

TEST_CASE("pair count agrees with the boolean-convolution route") {
  const auto& pt = table();
  for (std::uint64_t n = 2; n <= 5000; ++n) {
    REQUIRE(goldbach::goldbach_pair_count(n, pt) ==
            ref::pair_count_convolution(n, pt));
  }
  CHECK(goldbach::goldbach_pair_count(1'000'000, pt) == 5402);
}

TEST_CASE("ordered pair counts match the known per-q values") {
  const auto& pt = table();
  const std::map<std::uint64_t, std::uint64_t> expected = {
      {2, 0},  {3, 0},  {4, 1},  {5, 2},  {6, 1},  {7, 2},  {8, 2},
      {9, 2},  {10, 3}, {11, 0}, {12, 2}, {13, 2}, {14, 3}, {15, 2},
      {16, 4}, {17, 0}, {18, 4}, {19, 2}, {20, 4}, {21, 2}, {22, 5},
      {23, 0}, {24, 6}, {25, 2}, {26, 5}, {27, 0}, {28, 4}, {29, 0},
      {30, 6}, {31, 2}, {32, 4}, {33, 2}, {34, 7}, {35, 0}, {36, 8}};
  for (const auto& [q, cnt] : expected) {
    REQUIRE(goldbach::ordered_pair_count(q, pt) == cnt);
  }
}

TEST_CASE("totally-Goldbach index at known points") {
  const auto& pt = table();
  CHECK(goldbach::atg_index(1, pt) == 0);
  CHECK(goldbach::atg_index(2, pt) == 0);
  CHECK(goldbach::atg_index(7, pt) == 1);
  CHECK(goldbach::atg_index(10, pt) == 0);
  CHECK(goldbach::atg_index(25, pt) == 6);
  CHECK(goldbach::atg_index(48, pt) == 2);
  CHECK(goldbach::atg_index(210, pt) == 4);
  CHECK(goldbach::totally_goldbach(24, pt));
  CHECK(goldbach::totally_goldbach(30, pt));
  CHECK_FALSE(goldbach::totally_goldbach(7, pt));
  CHECK_THROWS_AS(goldbach::atg_index(0, pt), std::domain_error);
}

TEST_CASE("index-0 numbers up to 10^4 are exactly the known twelve") {
  const auto& pt = table();
  std::vector<std::uint64_t> zero;
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    if (goldbach::atg_index(n, pt) == 0) zero.push_back(n);
  }
  CHECK(zero == kIndexZeroSmall);
}

TEST_CASE("index table buckets reproduce the reference rows") {
  const auto& pt = table();
  const auto buckets = goldbach::atg_table(10, 210, pt);
  REQUIRE(buckets.size() == 11);
  CHECK(buckets[0] == kIndexZeroSmall);
  CHECK(buckets[1] == std::vector<std::uint64_t>{7, 9, 14, 16, 20, 36, 42, 60});
  CHECK(buckets[2] == std::vector<std::uint64_t>{15, 22, 48, 90});
  CHECK(buckets[3] ==
        std::vector<std::uint64_t>{13, 26, 28, 34, 54, 66, 84, 120});
  CHECK(buckets[4] == std::vector<std::uint64_t>{11, 21, 40, 78, 210});
  CHECK(buckets[5] == std::vector<std::uint64_t>{19, 32, 44, 50, 72});
  CHECK(buckets[6] == std::vector<std::uint64_t>{17, 25, 46, 70, 102, 114});
  CHECK(buckets[7] == std::vector<std::uint64_t>{33, 38, 52, 64, 126, 150});
  CHECK(buckets[8] == std::vector<std::uint64_t>{23, 27, 31, 39, 56, 58, 96});
  CHECK(buckets[9] == std::vector<std::uint64_t>{29, 35, 76, 108, 168, 180});
  CHECK(buckets[10] == std::vector<std::uint64_t>{45, 74, 132, 144});

  // Clipping the range drops 210 from bucket 4 and 168/180 from bucket 9.
  const auto clipped = goldbach::atg_table(10, 200, pt);
  CHECK(clipped[4] == std::vector<std::uint64_t>{11, 21, 40, 78});
  CHECK(clipped[9] == std::vector<std::uint64_t>{29, 35, 76, 108, 168, 180});

  const auto narrow = goldbach::atg_table(10, 144, pt);
  CHECK(narrow[10] == std::vector<std::uint64_t>{45, 74, 132, 144});
}

TEST_CASE("maximal pair-count set") {
  const auto& pt = table();
  auto sorted = kMaxGSet;
  std::sort(sorted.begin(), sorted.end());
  CHECK(goldbach::maximal_g_set(210, pt) == sorted);
  CHECK(goldbach::maximal_g_set(10000, pt) == sorted);
}

TEST_CASE("max_possible_pairs counts primes in the upper half") {
  const auto& pt = table();
  CHECK(goldbach::max_possible_pairs(2, pt) == 0);
  CHECK(goldbach::max_possible_pairs(3, pt) == 0);
  CHECK(goldbach::max_possible_pairs(4, pt) == 1);   // {2}
  CHECK(goldbach::max_possible_pairs(10, pt) == 2);  // {5, 7}
  CHECK(goldbach::max_possible_pairs(11, pt) == 1);  // {7} (range [6, 9])
  for (std::uint64_t n = 2; n <= 3000; ++n) {
    REQUIRE(goldbach::goldbach_pair_count(n, pt) <=
            goldbach::max_possible_pairs(n, pt));
  }
}

TEST_CASE("profile bundles the per-n quantities") {
  const auto& pt = table();
  const auto pr = goldbach::profile(10, pt);
  CHECK(pr.n == 10);
  CHECK(pr.pair_count == 2);
  CHECK(pr.max_possible == 2);
  CHECK(pr.atg_index == 0);
  CHECK(pr.totally_goldbach);
}

TEST_CASE("goldbach defect values and domain") {
  const auto& pt = table();
  CHECK(goldbach::goldbach_defect(2, pt) ==
        doctest::Approx(1.343690642).epsilon(1e-6));
  CHECK(goldbach::goldbach_defect(4, pt) ==
        doctest::Approx(2.687381284).epsilon(1e-6));
  CHECK(goldbach::goldbach_defect(6, pt) ==
        doctest::Approx(14.062143852).epsilon(1e-6));
  CHECK_THROWS_AS(goldbach::goldbach_defect(9, pt), std::domain_error);
  CHECK_THROWS_AS(goldbach::goldbach_defect(1, pt), std::domain_error);
}

TEST_CASE("defect champions up to 9240 are the known 53 terms") {
  const auto& pt = table();
  const std::vector<std::uint64_t> c53 = {
      2,    4,    6,    12,   18,   24,   30,   42,   54,   60,   84,
      90,   120,  150,  180,  210,  270,  300,  330,  390,  420,  510,
      570,  630,  780,  840,  990,  1050, 1260, 1470, 1650, 1680, 1890,
      2100, 2310, 2730, 3150, 3360, 3570, 3990, 4290, 4410, 4620, 5250,
      5460, 6090, 6510, 6930, 7770, 7980, 8190, 9030, 9240};
  CHECK(goldbach::gd_champions(9240, pt) == c53);
  CHECK(goldbach::gd_champions(60, pt) ==
        std::vector<std::uint64_t>{2, 4, 6, 12, 18, 24, 30, 42, 54, 60});
}

TEST_CASE("sandwich inequality holds on the champion list past 2") {
  const auto& pt = table();
  for (std::uint64_t q : goldbach::gd_champions(9240, pt)) {
    if (q == 2) continue;
    REQUIRE(goldbach::verify_sandwich(q, pt));
  }
  CHECK_THROWS_AS(goldbach::verify_sandwich(2, pt), std::domain_error);
  CHECK_THROWS_AS(goldbach::verify_sandwich(9, pt), std::domain_error);
}
