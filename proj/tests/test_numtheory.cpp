#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "qpg/errors.hpp"
#include "qpg/numtheory.hpp"

using namespace qpg;

namespace {
const nt::PrimeTable& table() {
  static const nt::PrimeTable pt;
  return pt;
}
}  // namespace

TEST_CASE("sieve agrees with an independent sieve") {
  const auto& pt = table();
  const auto flags = testoracle::prime_flags(100000);
  for (std::uint64_t n = 2; n <= 100000; ++n) {
    REQUIRE(pt.is_prime(n) == flags[n]);
  }
  CHECK(pt.nth_prime(1) == 2);
  CHECK(pt.nth_prime(25) == 97);
  CHECK(pt.nth_prime(100000) == 1299709);
  CHECK(pt.is_prime(1299709));
  CHECK(pt.prime_count(100) == 25);
  CHECK(pt.prime_count(1299709) == 100000);
}

TEST_CASE("prime_count matches a recount of the whole table") {
  const auto& pt = table();
  CHECK(pt.prime_count(pt.limit()) == pt.primes().size());
  CHECK_THROWS_AS(pt.prime_count(pt.limit() + 1), capacity_error);
  CHECK_THROWS_AS(pt.nth_prime(pt.primes().size() + 1), capacity_error);
  CHECK_THROWS_AS(pt.nth_prime(0), std::domain_error);
}

TEST_CASE("divisor_sigma and dedekind_psi match brute force") {
  const auto& pt = table();
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    REQUIRE(nt::divisor_sigma(n, pt) == testoracle::sigma_brute(n));
    REQUIRE(nt::dedekind_psi(n, pt) == testoracle::psi_brute(n));
  }
}

TEST_CASE("sigma and psi are multiplicative on coprime arguments") {
  const auto& pt = table();
  for (std::uint64_t m = 2; m <= 300; ++m) {
    for (std::uint64_t n = m + 1; n <= 300; ++n) {
      if (std::gcd(m, n) != 1) continue;
      REQUIRE(nt::divisor_sigma(m * n, pt) ==
              nt::divisor_sigma(m, pt) * nt::divisor_sigma(n, pt));
      REQUIRE(nt::dedekind_psi(m * n, pt) ==
              nt::dedekind_psi(m, pt) * nt::dedekind_psi(n, pt));
    }
  }
}

TEST_CASE("psi <= sigma with equality exactly on squarefree numbers") {
  const auto& pt = table();
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const auto psi = nt::dedekind_psi(n, pt);
    const auto sigma = nt::divisor_sigma(n, pt);
    REQUIRE(psi <= sigma);
    bool squarefree = true;
    for (const auto& [p, e] : nt::factorize(n, pt).factors) {
      (void)p;
      if (e > 1) squarefree = false;
    }
    REQUIRE((psi == sigma) == squarefree);
  }
}

TEST_CASE("chebyshev_theta values and growth") {
  const auto& pt = table();
  CHECK(nt::chebyshev_theta(10, pt) ==
        doctest::Approx(5.347107530717468).epsilon(1e-14));
  CHECK(nt::chebyshev_theta(2, pt) == doctest::Approx(std::log(2.0)));
  // Steps occur exactly at primes.
  double prev = nt::chebyshev_theta(2, pt);
  for (std::uint64_t k = 3; k <= 2000; ++k) {
    const double cur = nt::chebyshev_theta(k, pt);
    if (pt.is_prime(k)) {
      REQUIRE(cur > prev);
      REQUIRE(cur - prev == doctest::Approx(std::log(double(k))).epsilon(1e-12));
    } else {
      REQUIRE(cur == prev);
    }
    prev = cur;
  }
  CHECK_THROWS_AS(nt::chebyshev_theta(1.5, pt), std::domain_error);
  CHECK_THROWS_AS(nt::chebyshev_theta(double(pt.limit()) + 10, pt),
                  capacity_error);
}

TEST_CASE("chebyshev_theta at the top of the table vs long-double oracle") {
  const auto& pt = table();
  const double lib = nt::chebyshev_theta(1299709, pt);
  const double oracle = static_cast<double>(testoracle::theta_long_double(1299709));
  CHECK(lib == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(lib == doctest::Approx(1298474.432537).epsilon(1e-9));
}

TEST_CASE("primorial logs accumulate exactly one log per prime") {
  const auto& pt = table();
  CHECK(nt::primorial_log(1, pt) == doctest::Approx(std::log(2.0)));
  CHECK(nt::primorial_log(2, pt) == doctest::Approx(1.791759469228055).epsilon(1e-14));
  // The log of the product of the first 10 primes is theta(29).
  CHECK(nt::primorial_log(10, pt) ==
        doctest::Approx(double(testoracle::theta_long_double(29))).epsilon(1e-14));
  for (std::size_t r = 2; r <= 1000; ++r) {
    const double diff = nt::primorial_log(r, pt) - nt::primorial_log(r - 1, pt);
    REQUIRE(diff ==
            doctest::Approx(std::log(double(pt.nth_prime(r)))).epsilon(1e-12));
  }
  const auto prefix = nt::primorial_log_prefix(1000, pt);
  REQUIRE(prefix.size() == 1001);
  CHECK(prefix[0] == 0.0);
  for (std::size_t r = 1; r <= 1000; ++r) {
    REQUIRE(prefix[r] == doctest::Approx(nt::primorial_log(r, pt)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(nt::primorial_log(0, pt), std::domain_error);
  CHECK_THROWS_AS(nt::primorial_log(pt.primes().size() + 1, pt), capacity_error);
}

TEST_CASE("primorial_scientific matches known magnitudes") {
  const auto& pt = table();
  {
    const auto [m, e] = nt::primorial_scientific(1, pt);
    CHECK(m == doctest::Approx(2.0));
    CHECK(e == 0);
  }
  {
    const auto [m, e] = nt::primorial_scientific(10, pt);
    CHECK(m == doctest::Approx(6.469693230).epsilon(1e-9));
    CHECK(e == 9);
  }
  {
    const auto [m, e] = nt::primorial_scientific(100, pt);
    CHECK(m == doctest::Approx(4.7119).epsilon(1e-3));
    CHECK(e == 219);
  }
  {
    const auto [m, e] = nt::primorial_scientific(1000, pt);
    CHECK(m == doctest::Approx(6.7863).epsilon(1e-3));
    CHECK(e == 3392);
  }
  // Small cases are exact: 2, 6, 30, 210.
  {
    const auto [m, e] = nt::primorial_scientific(4, pt);
    CHECK(m == doctest::Approx(2.10).epsilon(1e-12));
    CHECK(e == 2);
  }
}

TEST_CASE("factorize recovers exponents and handles large inputs") {
  const auto& pt = table();
  const auto f = nt::factorize(360, pt);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == std::pair<std::uint64_t, unsigned>{2, 3});
  CHECK(f.factors[1] == std::pair<std::uint64_t, unsigned>{3, 2});
  CHECK(f.factors[2] == std::pair<std::uint64_t, unsigned>{5, 1});
  // Reconstruction check across a range.
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    std::uint64_t prod = 1;
    for (const auto& [p, e] : nt::factorize(n, pt).factors) {
      for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    REQUIRE(prod == n);
  }
  // Beyond the table but within limit^2: trial division still works.
  const std::uint64_t big = 1299709ull * 1299709ull;  // p_100000 squared
  const auto bf = nt::factorize(big, pt);
  REQUIRE(bf.factors.size() == 1);
  CHECK(bf.factors[0] == std::pair<std::uint64_t, unsigned>{1299709, 2});
  CHECK_THROWS_AS(nt::factorize(3'000'000'000'000'000ull, pt), capacity_error);
  CHECK_THROWS_AS(nt::factorize(0, pt), std::domain_error);
}

TEST_CASE("reference constants verify against high-precision recomputation") {
  const nt::ConstantsReport rep = nt::verify_constants();
  CHECK(rep.ok);
  CHECK(rep.c2_bound == 10'000'000);
  CHECK(rep.exp_gamma_rel_err < 1e-25);
  CHECK(rep.zeta2_rel_err < 1e-25);
  CHECK(rep.c2_partial_gap > 0.0);
  CHECK(rep.c2_partial_gap < 1.0 / double(rep.c2_bound));
}

TEST_CASE("primes_up_to standalone helper") {
  const auto small = nt::primes_up_to(100);
  REQUIRE(small.size() == 25);
  CHECK(small.primes().front() == 2);
  CHECK(small.primes().back() == 97);
}
