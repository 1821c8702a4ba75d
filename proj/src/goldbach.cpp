#include "qpg/goldbach.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "qpg/errors.hpp"
#include "qpg/hardy_littlewood.hpp"

namespace qpg::goldbach {

namespace {

void require_in_sieve(std::uint64_t n, const nt::PrimeTable& pt,
                      const char* who) {
  if (n > pt.limit()) {
    throw capacity_error(std::string(who) + ": n exceeds the sieve limit");
  }
}

}  // namespace

std::uint64_t goldbach_pair_count(std::uint64_t n, const nt::PrimeTable& pt) {
  if (n < 2) throw std::domain_error("goldbach_pair_count: n must be >= 2");
  require_in_sieve(n, pt, "goldbach_pair_count");
  std::uint64_t count = 0;
  for (std::uint32_t p : pt.primes()) {
    if (2ull * p > n) break;
    if (pt.is_prime(n - p)) ++count;
  }
  return count;
}

std::uint64_t ordered_pair_count(std::uint64_t n, const nt::PrimeTable& pt) {
  const std::uint64_t g = goldbach_pair_count(n, pt);
  const bool diagonal = n % 2 == 0 && n >= 4 && pt.is_prime(n / 2);
  return 2 * g - (diagonal ? 1 : 0);
}

std::uint64_t max_possible_pairs(std::uint64_t n, const nt::PrimeTable& pt) {
  if (n < 2) throw std::domain_error("max_possible_pairs: n must be >= 2");
  require_in_sieve(n, pt, "max_possible_pairs");
  if (n < 4) return 0;
  const std::uint64_t lo = (n + 1) / 2;  // ceil(n/2)
  const std::uint64_t hi = n - 2;
  const std::uint64_t below_lo = lo >= 1 ? pt.prime_count(lo - 1) : 0;
  return pt.prime_count(hi) - below_lo;
}

std::uint64_t atg_index(std::uint64_t n, const nt::PrimeTable& pt) {
  if (n < 1) throw std::domain_error("atg_index: n must be >= 1");
  require_in_sieve(n, pt, "atg_index");
  std::uint64_t count = 0;
  for (std::uint32_t p : pt.primes()) {
    if (p + 1ull >= n) break;  // p < n - 1
    if ((n % p != 0 || 2ull * p == n) && !pt.is_prime(n - p)) ++count;
  }
  return count;
}

bool totally_goldbach(std::uint64_t n, const nt::PrimeTable& pt) {
  return atg_index(n, pt) == 0;
}

GoldbachProfile profile(std::uint64_t n, const nt::PrimeTable& pt) {
  GoldbachProfile pr;
  pr.n = n;
  pr.pair_count = goldbach_pair_count(n, pt);
  pr.max_possible = max_possible_pairs(n, pt);
  pr.atg_index = atg_index(n, pt);
  pr.totally_goldbach = pr.atg_index == 0;
  return pr;
}

std::vector<std::vector<std::uint64_t>> atg_table(std::uint64_t max_index,
                                                  std::uint64_t max_n,
                                                  const nt::PrimeTable& pt) {
  require_in_sieve(max_n, pt, "atg_table");
  std::vector<std::uint64_t> idx(max_n + 1, 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t n = 1; n <= static_cast<std::int64_t>(max_n); ++n) {
    idx[static_cast<std::size_t>(n)] =
        atg_index(static_cast<std::uint64_t>(n), pt);
  }
  std::vector<std::vector<std::uint64_t>> buckets(max_index + 1);
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    if (idx[n] <= max_index) buckets[idx[n]].push_back(n);
  }
  return buckets;
}

std::vector<std::uint64_t> maximal_g_set(std::uint64_t limit,
                                         const nt::PrimeTable& pt) {
  require_in_sieve(limit, pt, "maximal_g_set");
  if (limit < 2) return {};
  std::vector<char> hit(limit + 1, 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t n = 2; n <= static_cast<std::int64_t>(limit); ++n) {
    const auto un = static_cast<std::uint64_t>(n);
    hit[static_cast<std::size_t>(n)] =
        goldbach_pair_count(un, pt) == max_possible_pairs(un, pt) ? 1 : 0;
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (hit[n]) out.push_back(n);
  }
  return out;
}

double goldbach_defect(std::uint64_t q, const nt::PrimeTable& pt) {
  if (q < 2 || q % 2 != 0)
    throw std::domain_error("goldbach_defect: q must be even and >= 2");
  return nt::kZeta2 * static_cast<double>(q) * hl::hl_R(q, pt) -
         static_cast<double>(nt::dedekind_psi(q, pt));
}

std::vector<std::uint64_t> gd_champions(std::uint64_t limit,
                                        const nt::PrimeTable& pt) {
  std::vector<std::uint64_t> evens;
  for (std::uint64_t q = 2; q <= limit; q += 2) evens.push_back(q);
  std::vector<double> vals(evens.size());
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(evens.size()); ++i) {
    vals[static_cast<std::size_t>(i)] =
        goldbach_defect(evens[static_cast<std::size_t>(i)], pt);
  }
  std::vector<std::uint64_t> champs;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < evens.size(); ++i) {
    if (vals[i] > best) {
      best = vals[i];
      champs.push_back(evens[i]);
    }
  }
  return champs;
}

bool verify_sandwich(std::uint64_t i, const nt::PrimeTable& pt) {
  if (i <= 2 || i % 2 != 0)
    throw std::domain_error("verify_sandwich: i must be even and > 2");
  const double lnln = std::log(std::log(static_cast<double>(i)));
  const double left = nt::kZeta2 *
                      static_cast<double>(nt::dedekind_psi(i, pt)) /
                      static_cast<double>(i) / lnln;
  const double mid = hl::hl_R(i, pt) / lnln;
  return left > mid && mid > nt::kExpGamma;
}

}  // namespace qpg::goldbach
