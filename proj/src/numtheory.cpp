#include "qpg/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace qpg::nt {

namespace {

// 40-decimal reference strings; only verify_constants touches them (digits
// beyond double precision matter for the multiprecision residuals).
constexpr const char* kGammaDigits =
    "0.5772156649015328606065120900824024310421";
constexpr const char* kExpGammaDigits =
    "1.7810724179901979852365041031071795491696";
constexpr const char* kPiDigits =
    "3.1415926535897932384626433832795028841971";
constexpr const char* kZeta2Digits =
    "1.6449340668482264364724151666460251892189";
constexpr const char* kC2Digits =
    "0.6601618158468695739278121100145557784326";

}  // namespace

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) {
    throw std::domain_error("PrimeTable: limit must be >= 2");
  }
  spf_.assign(limit + 1, 0);
  // Linear sieve: every composite is struck exactly once, by its smallest
  // prime factor.
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes_) {
      if (p > spf_[i] || i * p > limit) break;
      spf_[i * p] = p;
    }
  }
}

std::uint32_t PrimeTable::smallest_factor(std::uint64_t n) const {
  if (n < 2 || n > limit_) {
    throw std::domain_error("smallest_factor: n must be in [2, limit]");
  }
  return spf_[n];
}

std::size_t PrimeTable::prime_count(std::uint64_t x) const {
  if (x > limit_) {
    throw capacity_error("prime_count: x exceeds the sieve limit");
  }
  return static_cast<std::size_t>(
      std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

std::uint64_t PrimeTable::nth_prime(std::size_t r) const {
  if (r < 1) throw std::domain_error("nth_prime: r must be >= 1");
  if (r > primes_.size()) {
    throw capacity_error("nth_prime: r exceeds the sieved prime count");
  }
  return primes_[r - 1];
}

PrimeTable primes_up_to(std::uint64_t limit) { return PrimeTable(limit); }

ConstantsReport verify_constants(std::uint64_t c2_bound) {
  using big = boost::multiprecision::cpp_bin_float_50;
  ConstantsReport rep;
  rep.c2_bound = c2_bound;

  const big gamma(kGammaDigits);
  const big eg(kExpGammaDigits);
  const big pi(kPiDigits);
  const big z2(kZeta2Digits);
  const big c2(kC2Digits);

  rep.exp_gamma_rel_err =
      static_cast<double>(abs(exp(gamma) - eg) / eg);
  rep.zeta2_rel_err = static_cast<double>(abs(pi * pi / 6 - z2) / z2);

  // The digit strings and the double literals must describe the same numbers.
  const bool literals_consistent =
      std::abs(static_cast<double>(gamma) - kGamma) <= 1e-15 &&
      std::abs(static_cast<double>(eg) - kExpGamma) <= 1e-15 &&
      std::abs(static_cast<double>(z2) - kZeta2) <= 1e-15 &&
      std::abs(static_cast<double>(c2) - kTwinPrimeC2) <= 1e-15;

  // Partial product over odd primes <= B of (1 - 1/(p-1)^2), in log space.
  // A dedicated odd-only boolean sieve keeps this independent of PrimeTable.
  const std::uint64_t B = c2_bound;
  std::vector<bool> composite((B + 1) / 2, false);  // index i -> 2i+1
  for (std::uint64_t p = 3; p * p <= B; p += 2) {
    if (!composite[p / 2]) {
      for (std::uint64_t m = p * p; m <= B; m += 2 * p) composite[m / 2] = true;
    }
  }
  KahanSum logs;
  for (std::uint64_t i = 1; 2 * i + 1 <= B; ++i) {
    if (!composite[i]) {
      const double pm1 = static_cast<double>(2 * i + 1 - 1);
      logs.add(std::log1p(-1.0 / (pm1 * pm1)));
    }
  }
  const double partial = std::exp(logs.value());
  rep.c2_partial_gap = partial - kTwinPrimeC2;

  rep.ok = literals_consistent && rep.exp_gamma_rel_err < 1e-30 &&
           rep.zeta2_rel_err < 1e-30 && rep.c2_partial_gap > 0.0 &&
           rep.c2_partial_gap < 1.0 / static_cast<double>(B);
  return rep;
}

Factorization factorize(std::uint64_t q, const PrimeTable& pt) {
  if (q < 1) throw std::domain_error("factorize: q must be >= 1");
  Factorization f;
  f.n = q;
  if (q <= pt.limit()) {
    while (q > 1) {
      const std::uint64_t p = pt.smallest_factor(q);
      unsigned e = 0;
      while (q % p == 0) {
        q /= p;
        ++e;
      }
      f.factors.emplace_back(p, e);
    }
    return f;
  }
  if (q > pt.limit() * pt.limit()) {
    throw capacity_error("factorize: q exceeds limit^2, sieve too small");
  }
  for (std::uint32_t p : pt.primes()) {
    if (static_cast<std::uint64_t>(p) * p > q) break;
    if (q % p == 0) {
      unsigned e = 0;
      while (q % p == 0) {
        q /= p;
        ++e;
      }
      f.factors.emplace_back(p, e);
    }
  }
  if (q > 1) f.factors.emplace_back(q, 1);  // remainder has no factor <= sqrt
  return f;
}

std::uint64_t divisor_sigma(std::uint64_t q, const PrimeTable& pt) {
  const Factorization f = factorize(q, pt);
  std::uint64_t result = 1;
  for (const auto& [p, e] : f.factors) {
    std::uint64_t geom = 1, pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      geom += pk;
    }
    result *= geom;
  }
  return result;
}

std::uint64_t dedekind_psi(std::uint64_t q, const PrimeTable& pt) {
  const Factorization f = factorize(q, pt);
  std::uint64_t result = q;
  for (const auto& [p, e] : f.factors) {
    (void)e;
    result = result / p * (p + 1);
  }
  return result;
}

double chebyshev_theta(double x, const PrimeTable& pt) {
  if (!(x >= 2.0)) {
    throw std::domain_error("chebyshev_theta: x must be >= 2");
  }
  if (x > static_cast<double>(pt.limit())) {
    throw capacity_error("chebyshev_theta: x exceeds the sieve limit");
  }
  KahanSum s;
  for (std::uint32_t p : pt.primes()) {
    if (static_cast<double>(p) > x) break;
    s.add(std::log(static_cast<double>(p)));
  }
  return s.value();
}

double primorial_log(std::size_t r, const PrimeTable& pt) {
  if (r < 1) throw std::domain_error("primorial_log: r must be >= 1");
  if (r > pt.size()) {
    throw capacity_error("primorial_log: r exceeds the sieved prime count");
  }
  KahanSum s;
  for (std::size_t i = 0; i < r; ++i) {
    s.add(std::log(static_cast<double>(pt.primes()[i])));
  }
  return s.value();
}

std::vector<double> primorial_log_prefix(std::size_t max_r,
                                         const PrimeTable& pt) {
  if (max_r > pt.size()) {
    throw capacity_error(
        "primorial_log_prefix: max_r exceeds the sieved prime count");
  }
  std::vector<double> prefix(max_r + 1, 0.0);
  KahanSum s;
  for (std::size_t i = 1; i <= max_r; ++i) {
    s.add(std::log(static_cast<double>(pt.primes()[i - 1])));
    prefix[i] = s.value();
  }
  return prefix;
}

std::pair<double, std::int64_t> primorial_scientific(std::size_t r,
                                                     const PrimeTable& pt) {
  const double log10n = primorial_log(r, pt) / std::log(10.0);
  std::int64_t exponent = static_cast<std::int64_t>(std::floor(log10n));
  double mantissa = std::pow(10.0, log10n - static_cast<double>(exponent));
  if (mantissa >= 10.0) {
    mantissa /= 10.0;
    ++exponent;
  } else if (mantissa < 1.0) {
    mantissa *= 10.0;
    --exponent;
  }
  return {mantissa, exponent};
}

}  // namespace qpg::nt
