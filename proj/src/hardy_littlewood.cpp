#include "qpg/hardy_littlewood.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <omp.h>

#include "qpg/errors.hpp"

namespace qpg::hl {

double hl_R(std::uint64_t q, const nt::PrimeTable& pt) {
  if (q < 2) throw std::domain_error("hl_R: q must be >= 2");
  const nt::Factorization f = nt::factorize(q, pt);
  double r = 2.0 * nt::kTwinPrimeC2;
  for (const auto& [p, e] : f.factors) {
    (void)e;
    if (p > 2) r *= static_cast<double>(p - 1) / static_cast<double>(p - 2);
  }
  return r;
}

double hl_g_count_estimate(std::uint64_t q, const nt::PrimeTable& pt) {
  if (q < 4 || q % 2 != 0)
    throw std::domain_error("hl_g_count_estimate: q must be even and >= 4");
  const double lq = std::log(static_cast<double>(q));
  return hl_R(q, pt) * static_cast<double>(q) / (lq * lq);
}

double hl_R_primorial(std::size_t r, const nt::PrimeTable& pt) {
  if (r < 1) throw std::domain_error("hl_R_primorial: r must be >= 1");
  const auto& primes = pt.primes();
  if (r > primes.size())
    throw capacity_error("hl_R_primorial: r exceeds the sieved prime count");
  nt::KahanSum s;
  s.add(std::log(2.0));
  s.add(std::log(nt::kTwinPrimeC2));
  for (std::size_t i = 1; i < r; ++i) {
    const double pm1 = static_cast<double>(primes[i]) - 1.0;
    s.add(-std::log1p(-1.0 / (pm1 * pm1)));
    s.add(std::log1p(1.0 / pm1));
  }
  return s.value();
}

PrimorialRecord u_ratio(std::size_t r, const nt::PrimeTable& pt) {
  if (r < 2) throw std::domain_error("u_ratio: r must be >= 2");
  const auto& primes = pt.primes();
  if (r > primes.size())
    throw capacity_error("u_ratio: r exceeds the sieved prime count");
  PrimorialRecord rec;
  rec.r = r;
  rec.p_r = primes[r - 1];
  rec.log_N = nt::primorial_log(r, pt);
  rec.R_log = hl_R_primorial(r, pt);
  rec.u = std::exp(rec.R_log) / std::log(rec.log_N);
  rec.u_minus_eg = rec.u - nt::kExpGamma;
  return rec;
}

std::vector<PrimorialRecord> u_ratio_series(std::size_t max_r,
                                            const nt::PrimeTable& pt) {
  const auto& primes = pt.primes();
  if (max_r > primes.size())
    throw capacity_error("u_ratio_series: max_r exceeds the sieved prime count");
  std::vector<PrimorialRecord> out;
  if (max_r < 2) return out;
  out.reserve(max_r - 1);
  nt::KahanSum log_n;
  nt::KahanSum r_log;
  log_n.add(std::log(2.0));
  r_log.add(std::log(2.0));
  r_log.add(std::log(nt::kTwinPrimeC2));
  for (std::size_t r = 2; r <= max_r; ++r) {
    const double p = static_cast<double>(primes[r - 1]);
    log_n.add(std::log(p));
    r_log.add(-std::log1p(-1.0 / ((p - 1.0) * (p - 1.0))));
    r_log.add(std::log1p(1.0 / (p - 1.0)));
    PrimorialRecord rec;
    rec.r = r;
    rec.p_r = primes[r - 1];
    rec.log_N = log_n.value();
    rec.R_log = r_log.value();
    rec.u = std::exp(rec.R_log) / std::log(rec.log_N);
    rec.u_minus_eg = rec.u - nt::kExpGamma;
    out.push_back(rec);
  }
  return out;
}

ScanReport conjecture1_scan(std::size_t max_r, const nt::PrimeTable& pt) {
  ScanReport rep;
  rep.bound = max_r;
  for (const PrimorialRecord& rec : u_ratio_series(max_r, pt)) {
    if (!(rec.u > nt::kExpGamma)) rep.violations.push_back(rec.r);
  }
  return rep;
}

double x_ratio(std::uint64_t q, const nt::PrimeTable& pt) {
  if (q < 2 || q % 2 != 0)
    throw std::domain_error("x_ratio: q must be even and >= 2");
  const nt::Factorization f = nt::factorize(q, pt);
  double v = 2.0 * nt::kTwinPrimeC2 / nt::kZeta2;
  for (const auto& [p, e] : f.factors) {
    (void)e;
    const double pd = static_cast<double>(p);
    v *= pd / (pd + 1.0);
    if (p > 2) v *= (pd - 1.0) / (pd - 2.0);
  }
  return v;
}

std::vector<std::uint64_t> x_champions(std::uint64_t limit,
                                       const nt::PrimeTable& pt) {
  std::vector<std::uint64_t> evens;
  for (std::uint64_t q = 2; q <= limit; q += 2) evens.push_back(q);
  std::vector<double> vals(evens.size());
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(evens.size()); ++i) {
    vals[static_cast<std::size_t>(i)] =
        x_ratio(evens[static_cast<std::size_t>(i)], pt);
  }
  std::vector<std::uint64_t> champs;
  double best = -1.0;
  for (std::size_t i = 0; i < evens.size(); ++i) {
    if (vals[i] > best) {
      best = vals[i];
      champs.push_back(evens[i]);
    }
  }
  return champs;
}

double epsilon(std::uint64_t q, const nt::PrimeTable& pt) {
  if (q < 2) throw std::domain_error("epsilon: q must be >= 2");
  const double ratio = static_cast<double>(nt::dedekind_psi(q, pt)) /
                       static_cast<double>(q);
  return ratio - nt::kExpGamma * std::log(std::log(static_cast<double>(q)));
}

const std::vector<std::uint64_t>& epsilon_positive_expected() {
  static const std::vector<std::uint64_t> a = {2, 3, 4, 5, 6, 8, 10, 12, 18, 30};
  return a;
}

ScanReport theorem1_scan(std::uint64_t limit, const nt::PrimeTable& pt) {
  ScanReport rep;
  rep.bound = limit;
  if (limit < 2) return rep;
  std::vector<char> pos(limit + 1, 0);
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t q = 2; q <= static_cast<std::int64_t>(limit); ++q) {
    pos[static_cast<std::size_t>(q)] =
        epsilon(static_cast<std::uint64_t>(q), pt) > 0.0 ? 1 : 0;
  }
  for (std::uint64_t q = 2; q <= limit; ++q) {
    if (pos[q]) rep.satisfied.push_back(q);
  }
  std::vector<std::uint64_t> expected;
  for (std::uint64_t q : epsilon_positive_expected()) {
    if (q <= limit) expected.push_back(q);
  }
  std::set_symmetric_difference(rep.satisfied.begin(), rep.satisfied.end(),
                                expected.begin(), expected.end(),
                                std::back_inserter(rep.violations));
  return rep;
}

ScanReport prop2_scan(std::uint64_t limit, const nt::PrimeTable& pt) {
  ScanReport rep;
  rep.bound = limit;
  std::vector<std::uint64_t> evens;
  for (std::uint64_t q = 2; q <= limit; q += 2) evens.push_back(q);
  std::vector<char> bad(evens.size(), 0);
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(evens.size()); ++i) {
    bad[static_cast<std::size_t>(i)] =
        x_ratio(evens[static_cast<std::size_t>(i)], pt) >= 1.0 ? 1 : 0;
  }
  for (std::size_t i = 0; i < evens.size(); ++i) {
    if (bad[i]) rep.violations.push_back(evens[i]);
  }
  return rep;
}

bool theorem2_check(std::size_t r, const nt::PrimeTable& pt) {
  if (r <= 2) throw std::domain_error("theorem2_check: r must be > 2");
  const auto& primes = pt.primes();
  if (r > primes.size())
    throw capacity_error("theorem2_check: r exceeds the sieved prime count");
  nt::KahanSum s;
  for (std::size_t i = 0; i < r; ++i) {
    s.add(std::log1p(1.0 / static_cast<double>(primes[i])));
  }
  const double lhs = std::exp(s.value());
  const double rhs =
      nt::kExpGamma / nt::kZeta2 * std::log(nt::primorial_log(r, pt));
  return lhs > rhs;
}

NicolasValue nicolas_f(double x, const nt::PrimeTable& pt) {
  if (!(x >= 2.0)) throw std::domain_error("nicolas_f: x must be >= 2");
  const double theta = nt::chebyshev_theta(x, pt);
  nt::KahanSum s;
  for (std::uint32_t p : pt.primes()) {
    if (static_cast<double>(p) > x) break;
    s.add(std::log1p(-1.0 / static_cast<double>(p)));
  }
  NicolasValue out;
  out.degenerate = theta <= 1.0;
  out.value = nt::kExpGamma * std::log(theta) * std::exp(s.value());
  return out;
}

double hl_g_function(double x, const nt::PrimeTable& pt) {
  if (!(x >= 3.0)) throw std::domain_error("hl_g_function: x must be >= 3");
  const double theta = nt::chebyshev_theta(x, pt);
  nt::KahanSum s;
  for (std::uint32_t p : pt.primes()) {
    if (static_cast<double>(p) > x) break;
    if (p == 2) continue;
    s.add(std::log1p(-1.0 / (static_cast<double>(p) - 1.0)));
  }
  return nt::kExpGamma / (2.0 * nt::kTwinPrimeC2) * std::log(theta) *
         std::exp(s.value());
}

}  // namespace qpg::hl
