#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "qpg/errors.hpp"

namespace qpg::nt {

// Compensated (Kahan) accumulator. Used for every long sum of logarithms so
// that quantities like theta(x) over 10^5 primes keep ~1 ulp accuracy.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Canonical factorization: primes strictly increasing, exponents >= 1,
// product of prime^exponent == n (empty list for n == 1).
struct Factorization {
  std::uint64_t n = 1;
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
};

// Smallest-prime-factor sieve plus the ordered prime list up to `limit`.
// Immutable after construction; safe for concurrent reads.
class PrimeTable {
 public:
  // Default covers the 100000-th prime (1299709) used by the deepest
  // primorial computations.
  static constexpr std::uint64_t kDefaultLimit = 1'300'000;

  explicit PrimeTable(std::uint64_t limit = kDefaultLimit);

  std::uint64_t limit() const { return limit_; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }

  bool is_prime(std::uint64_t n) const {
    return n >= 2 && n <= limit_ && spf_[n] == n;
  }
  // Smallest prime factor of n, 2 <= n <= limit.
  std::uint32_t smallest_factor(std::uint64_t n) const;
  // pi(x): number of primes <= x. Requires x <= limit.
  std::size_t prime_count(std::uint64_t x) const;
  // r-th prime, 1-based (nth_prime(1) == 2). capacity_error past the table.
  std::uint64_t nth_prime(std::size_t r) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

// Named constructor matching the table contract. limit must be >= 2.
PrimeTable primes_up_to(std::uint64_t limit);

// Mathematical constants, embedded as >= 30-significant-digit literals (the
// compiler rounds to the nearest double). verify_constants() certifies them.
inline constexpr double kGamma = 0.57721566490153286060651209008240243104;
inline constexpr double kExpGamma = 1.78107241799019798523650410310717954917;
inline constexpr double kZeta2 = 1.64493406684822643647241516664602518922;
inline constexpr double kTwinPrimeC2 = 0.66016181584686957392781211001455577843;

struct ConstantsReport {
  // |exp(gamma) - exp_gamma| / exp_gamma in 50-digit arithmetic.
  double exp_gamma_rel_err = 0.0;
  // |pi^2/6 - zeta2| / zeta2 in 50-digit arithmetic.
  double zeta2_rel_err = 0.0;
  // partial_product(B) - c2; must lie in (0, 1/B): finite products over
  // factors < 1 approach the constant from above, and the tail is O(1/(B lnB)).
  double c2_partial_gap = 0.0;
  std::uint64_t c2_bound = 0;
  bool ok = false;
};

// Certifies the embedded constants: exp_gamma against exp(gamma) to >= 25
// significant digits, zeta2 against pi^2/6, and c2 against the partial
// product over odd primes <= c2_bound within the 1/B tail bound.
ConstantsReport verify_constants(std::uint64_t c2_bound = 10'000'000);

// Factorization via the sieve for q <= limit, trial division by the sieved
// primes for q <= limit^2; capacity_error beyond.
Factorization factorize(std::uint64_t q, const PrimeTable& pt);

// Sum of divisors, exact. q >= 1.
std::uint64_t divisor_sigma(std::uint64_t q, const PrimeTable& pt);

// q * prod_{p | q} (1 + 1/p), exact. q >= 1.
std::uint64_t dedekind_psi(std::uint64_t q, const PrimeTable& pt);

// theta(x) = sum of ln p over primes p <= x, compensated.
// domain_error for x < 2; capacity_error for x > limit.
double chebyshev_theta(double x, const PrimeTable& pt);

// ln of the product of the first r primes (== theta of the r-th prime).
// domain_error for r < 1; capacity_error past the table.
double primorial_log(std::size_t r, const PrimeTable& pt);

// Prefix table: element i holds the log-product of the first i primes
// (element 0 is 0). Single compensated pass; handy for scans over r.
std::vector<double> primorial_log_prefix(std::size_t max_r,
                                         const PrimeTable& pt);

// Base-10 scientific form (mantissa in [1,10), exponent) of the product of
// the first r primes, derived from primorial_log.
std::pair<double, std::int64_t> primorial_scientific(std::size_t r,
                                                     const PrimeTable& pt);

}  // namespace qpg::nt
