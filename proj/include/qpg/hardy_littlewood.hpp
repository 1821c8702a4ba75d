#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qpg/numtheory.hpp"

namespace qpg::hl {

// Per-primorial inequality data: r, the r-th prime, ln of the product of the
// first r primes, ln R of that product, u = R / ln ln(product), u - e^gamma.
struct PrimorialRecord {
  std::size_t r = 0;
  std::uint64_t p_r = 0;
  double log_N = 0.0;
  double R_log = 0.0;
  double u = 0.0;
  double u_minus_eg = 0.0;
};

// Scan result: satisfied/violations are disjoint ordered lists. For the
// conjecture1 and prop2 scans only `violations` is populated (the satisfied
// set would be the near-complete complement, pointlessly large).
struct ScanReport {
  std::uint64_t bound = 0;
  std::vector<std::uint64_t> satisfied;
  std::vector<std::uint64_t> violations;
};

// Singular series R(q) = 2*C2 * prod over odd primes p | q of (p-1)/(p-2).
// The p = 2 factor is excluded throughout (it would be 1/0). q >= 2.
double hl_R(std::uint64_t q, const nt::PrimeTable& pt);

// Pair-count estimate R(q) * q / ln(q)^2. Even q >= 4 only.
double hl_g_count_estimate(std::uint64_t q, const nt::PrimeTable& pt);

// ln R of the product of the first r primes, computed in log space with
// compensated summation:
//   ln 2 + ln C2 - sum_{i=2}^r ln(1 - 1/(p_i-1)^2) + sum_{i=2}^r ln(1 + 1/(p_i-1)).
// r >= 1; capacity_error past the sieve.
double hl_R_primorial(std::size_t r, const nt::PrimeTable& pt);

// The record at order r (r >= 2: ln ln of the product must be positive).
PrimorialRecord u_ratio(std::size_t r, const nt::PrimeTable& pt);

// All records for r in [2, max_r], one incremental pass (O(max_r) total).
std::vector<PrimorialRecord> u_ratio_series(std::size_t max_r,
                                            const nt::PrimeTable& pt);

// Violations: r in [2, max_r] with u_r <= e^gamma. Expected empty.
ScanReport conjecture1_scan(std::size_t max_r, const nt::PrimeTable& pt);

// x(q) = R(q) / (zeta2 * psi(q)/q) for even q. Computed from the
// distinct-prime list only, so values agree bitwise for equal radicals
// (x(4) == x(2)); this keeps the champions scan free of rounding ties.
double x_ratio(std::uint64_t q, const nt::PrimeTable& pt);

// Left-to-right strict maxima of x over even q <= limit.
std::vector<std::uint64_t> x_champions(std::uint64_t limit,
                                       const nt::PrimeTable& pt);

// epsilon(q) = psi(q)/q - e^gamma * ln ln q. q >= 2 (negative ln ln at q=2 is
// fine and gives the large positive epsilon(2)).
double epsilon(std::uint64_t q, const nt::PrimeTable& pt);

// The asserted support of the positivity of epsilon.
const std::vector<std::uint64_t>& epsilon_positive_expected();

// satisfied = {q <= limit : epsilon(q) > 0}; violations = symmetric
// difference with epsilon_positive_expected() restricted to [2, limit].
ScanReport theorem1_scan(std::uint64_t limit, const nt::PrimeTable& pt);

// Violations: even q <= limit with x(q) >= 1. Expected empty.
ScanReport prop2_scan(std::uint64_t limit, const nt::PrimeTable& pt);

// True iff psi(N)/(N * ln ln N) > e^gamma / zeta2 at the product N of the
// first r primes, evaluated in log space. r > 2 required.
bool theorem2_check(std::size_t r, const nt::PrimeTable& pt);

struct NicolasValue {
  double value = 0.0;
  // Set when theta(x) <= 1 (x in [2,3)): ln theta is negative there and the
  // value, while well-defined, is outside the inequality's intended range.
  bool degenerate = false;
};

// f(x) = e^gamma * ln theta(x) * prod_{p <= x} (1 - 1/p). x >= 2.
NicolasValue nicolas_f(double x, const nt::PrimeTable& pt);

// g(x) = (e^gamma / (2 C2)) * ln theta(x) * prod_{2 < p <= x} (p-2)/(p-1).
// The p = 2 factor is excluded (it would annihilate the product). x >= 3.
double hl_g_function(double x, const nt::PrimeTable& pt);

}  // namespace qpg::hl
