#include "qpg/reference.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "qpg/errors.hpp"
#include "qpg/goldbach.hpp"

namespace qpg::ref {

hl::ScanReport theorem1_scan_serial(std::uint64_t limit,
                                    const nt::PrimeTable& pt) {
  hl::ScanReport rep;
  rep.bound = limit;
  for (std::uint64_t q = 2; q <= limit; ++q) {
    if (hl::epsilon(q, pt) > 0.0) rep.satisfied.push_back(q);
  }
  std::vector<std::uint64_t> expected;
  for (std::uint64_t q : hl::epsilon_positive_expected()) {
    if (q <= limit) expected.push_back(q);
  }
  std::set_symmetric_difference(rep.satisfied.begin(), rep.satisfied.end(),
                                expected.begin(), expected.end(),
                                std::back_inserter(rep.violations));
  return rep;
}

hl::ScanReport prop2_scan_serial(std::uint64_t limit,
                                 const nt::PrimeTable& pt) {
  hl::ScanReport rep;
  rep.bound = limit;
  for (std::uint64_t q = 2; q <= limit; q += 2) {
    if (hl::x_ratio(q, pt) >= 1.0) rep.violations.push_back(q);
  }
  return rep;
}

std::vector<std::vector<std::uint64_t>> atg_table_serial(
    std::uint64_t max_index, std::uint64_t max_n, const nt::PrimeTable& pt) {
  std::vector<std::vector<std::uint64_t>> buckets(max_index + 1);
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    const std::uint64_t k = goldbach::atg_index(n, pt);
    if (k <= max_index) buckets[k].push_back(n);
  }
  return buckets;
}

std::vector<std::uint64_t> maximal_g_set_serial(std::uint64_t limit,
                                                const nt::PrimeTable& pt) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (goldbach::goldbach_pair_count(n, pt) ==
        goldbach::max_possible_pairs(n, pt)) {
      out.push_back(n);
    }
  }
  return out;
}

std::vector<std::uint64_t> gd_champions_serial(std::uint64_t limit,
                                               const nt::PrimeTable& pt) {
  std::vector<std::uint64_t> champs;
  double best = -std::numeric_limits<double>::infinity();
  for (std::uint64_t q = 2; q <= limit; q += 2) {
    const double v = goldbach::goldbach_defect(q, pt);
    if (v > best) {
      best = v;
      champs.push_back(q);
    }
  }
  return champs;
}

std::vector<std::uint64_t> x_champions_serial(std::uint64_t limit,
                                              const nt::PrimeTable& pt) {
  std::vector<std::uint64_t> champs;
  double best = -1.0;
  for (std::uint64_t q = 2; q <= limit; q += 2) {
    const double v = hl::x_ratio(q, pt);
    if (v > best) {
      best = v;
      champs.push_back(q);
    }
  }
  return champs;
}

std::vector<symplectic::IsotropicLine> enumerate_isotropic_lines_serial(
    std::uint32_t q) {
  if (q < 2)
    throw std::domain_error("enumerate_isotropic_lines_serial: q must be >= 2");
  if (q > 64)
    throw capacity_error(
        "enumerate_isotropic_lines_serial: q exceeds capacity 64");
  using Elems = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
  std::set<Elems> canon;
  const std::uint32_t n = q * q;
  for (std::uint32_t v = 0; v < n; ++v) {
    const symplectic::LatticePoint pv{v / q, v % q, q};
    for (std::uint32_t w = v; w < n; ++w) {
      const symplectic::LatticePoint pw{w / q, w % q, q};
      if (symplectic::symplectic_product(pv, pw) != 0) continue;
      Elems span;
      span.reserve(static_cast<std::size_t>(q) * q);
      for (std::uint32_t i = 0; i < q; ++i) {
        for (std::uint32_t j = 0; j < q; ++j) {
          span.emplace_back((i * pv.b + j * pw.b) % q,
                            (i * pv.c + j * pw.c) % q);
        }
      }
      std::sort(span.begin(), span.end());
      span.erase(std::unique(span.begin(), span.end()), span.end());
      if (span.size() != q) continue;
      canon.insert(std::move(span));
    }
  }
  std::vector<symplectic::IsotropicLine> out;
  for (const auto& elems : canon) {
    symplectic::IsotropicLine line;
    line.q = q;
    line.elements = elems;
    out.push_back(std::move(line));
  }
  return out;
}

std::uint64_t pair_count_convolution(std::uint64_t n,
                                     const nt::PrimeTable& pt) {
  if (n < 2)
    throw std::domain_error("pair_count_convolution: n must be >= 2");
  std::uint64_t count = 0;
  for (std::uint64_t p = 2; 2 * p <= n; ++p) {
    if (pt.is_prime(p) && pt.is_prime(n - p)) ++count;
  }
  return count;
}

}  // namespace qpg::ref
