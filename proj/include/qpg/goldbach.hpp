#pragma once

#include <cstdint>
#include <vector>

#include "qpg/numtheory.hpp"

namespace qpg::goldbach {

struct GoldbachProfile {
  std::uint64_t n = 0;
  std::uint64_t pair_count = 0;     // unordered prime pairs p + p' = n, p <= p'
  std::uint64_t max_possible = 0;   // primes in [n/2, n-2]
  std::uint64_t atg_index = 0;
  bool totally_goldbach = false;
};

struct DefectRecord {
  std::uint64_t q = 0;
  double defect = 0.0;
  bool is_champion = false;
};

// Number of unordered prime pairs {p, p'} with p + p' = n (p = p' counts
// once). Defined for n >= 2; n < 2 is a domain error.
std::uint64_t goldbach_pair_count(std::uint64_t n, const nt::PrimeTable& pt);

// Ordered decompositions n = p + p': twice the unordered count, minus one
// when n = 2p has the diagonal representation.
std::uint64_t ordered_pair_count(std::uint64_t n, const nt::PrimeTable& pt);

// Count of primes in [n/2, n-2] — an upper bound for goldbach_pair_count.
std::uint64_t max_possible_pairs(std::uint64_t n, const nt::PrimeTable& pt);

// Number of primes p < n-1 with (p does not divide n, or 2p = n) such that
// n - p is composite. Zero iff n is totally Goldbach. Defined for n >= 1
// (vacuously 0 for n <= 3).
std::uint64_t atg_index(std::uint64_t n, const nt::PrimeTable& pt);

bool totally_goldbach(std::uint64_t n, const nt::PrimeTable& pt);

GoldbachProfile profile(std::uint64_t n, const nt::PrimeTable& pt);

// Bucket k (0 <= k <= max_index) holds exactly {1 <= n <= max_n :
// atg_index(n) = k}, ascending.
std::vector<std::vector<std::uint64_t>> atg_table(std::uint64_t max_index,
                                                  std::uint64_t max_n,
                                                  const nt::PrimeTable& pt);

// All n in [2, limit] whose pair count equals max_possible_pairs(n).
std::vector<std::uint64_t> maximal_g_set(std::uint64_t limit,
                                         const nt::PrimeTable& pt);

// gd(q) = zeta2 * q * R(q) - psi(q) for even q >= 2; odd or q < 2 is a
// domain error.
double goldbach_defect(std::uint64_t q, const nt::PrimeTable& pt);

// Left-to-right strict maxima of gd over even q <= limit.
std::vector<std::uint64_t> gd_champions(std::uint64_t limit,
                                        const nt::PrimeTable& pt);

// Checks zeta2 * psi(i) / (i ln ln i) > R(i) / ln ln i > e^gamma for even
// i > 2 (i <= 2 or odd i is a domain error: ln ln 2 is negative).
bool verify_sandwich(std::uint64_t i, const nt::PrimeTable& pt);

}  // namespace qpg::goldbach
