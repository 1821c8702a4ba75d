#include "qpg/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include <omp.h>

#include <Eigen/Dense>

#include "qpg/errors.hpp"

namespace qpg::symplectic {

namespace {

constexpr std::uint32_t kLineCapacity = 64;
constexpr std::uint32_t kProjectiveCapacity = 1024;
constexpr std::uint32_t kWeylCapacity = 64;
constexpr double kTwoPi = 2.0 * 3.1415926535897932384626433832795028841971;

void require_modulus(std::uint32_t q, const char* who) {
  if (q < 2) throw std::domain_error(std::string(who) + ": q must be >= 2");
}

}  // namespace

std::uint32_t symplectic_product(const LatticePoint& p1,
                                 const LatticePoint& p2) {
  if (p1.q != p2.q)
    throw std::domain_error("symplectic_product: mismatched moduli");
  require_modulus(p1.q, "symplectic_product");
  const std::int64_t q = p1.q;
  std::int64_t d = (static_cast<std::int64_t>(p1.b % p1.q) * (p2.c % p1.q) -
                    static_cast<std::int64_t>(p2.b % p1.q) * (p1.c % p1.q)) %
                   q;
  if (d < 0) d += q;
  return static_cast<std::uint32_t>(d);
}

bool is_admissible(const LatticePoint& p) {
  require_modulus(p.q, "is_admissible");
  return std::gcd(std::gcd(p.b % p.q, p.c % p.q), p.q) == 1;
}

Submodule cyclic_submodule(const LatticePoint& p) {
  require_modulus(p.q, "cyclic_submodule");
  Submodule m;
  m.q = p.q;
  std::set<std::pair<std::uint32_t, std::uint32_t>> elems;
  for (std::uint32_t k = 0; k < p.q; ++k) {
    elems.emplace(static_cast<std::uint32_t>(
                      (static_cast<std::uint64_t>(k) * p.b) % p.q),
                  static_cast<std::uint32_t>(
                      (static_cast<std::uint64_t>(k) * p.c) % p.q));
  }
  m.elements.assign(elems.begin(), elems.end());
  return m;
}

std::vector<IsotropicLine> enumerate_isotropic_lines(std::uint32_t q) {
  require_modulus(q, "enumerate_isotropic_lines");
  if (q > kLineCapacity)
    throw capacity_error("enumerate_isotropic_lines: q exceeds capacity 64");
  const std::uint32_t n = q * q;
  const std::size_t words = (n + 63) / 64;
  std::set<std::vector<std::uint32_t>> canon;

#pragma omp parallel
  {
    std::set<std::vector<std::uint32_t>> local;
    std::vector<std::uint64_t> mark(words);
    std::vector<std::uint32_t> mv(q), mw(q);

#pragma omp for schedule(dynamic, 4)
    for (std::int64_t vs = 0; vs < static_cast<std::int64_t>(n); ++vs) {
      const auto v = static_cast<std::uint32_t>(vs);
      const std::uint32_t vb = v / q, vc = v % q;
      for (std::uint32_t k = 0; k < q; ++k) {
        mv[k] = ((k * vb) % q) * q + (k * vc) % q;
      }
      for (std::uint32_t w = v; w < n; ++w) {
        const std::uint32_t wb = w / q, wc = w % q;
        const std::uint64_t sym =
            (static_cast<std::uint64_t>(vb) * wc +
             static_cast<std::uint64_t>(q - 1) * wb % q * vc) %
            q;
        if (sym % q != 0) continue;
        for (std::uint32_t k = 0; k < q; ++k) {
          mw[k] = ((k * wb) % q) * q + (k * wc) % q;
        }
        std::fill(mark.begin(), mark.end(), 0);
        for (std::uint32_t i = 0; i < q; ++i) {
          const std::uint32_t ab = mv[i] / q, ac = mv[i] % q;
          for (std::uint32_t j = 0; j < q; ++j) {
            std::uint32_t sb = ab + mw[j] / q;
            std::uint32_t sc = ac + mw[j] % q;
            if (sb >= q) sb -= q;
            if (sc >= q) sc -= q;
            const std::uint32_t code = sb * q + sc;
            mark[code >> 6] |= 1ull << (code & 63);
          }
        }
        std::size_t count = 0;
        for (std::size_t t = 0; t < words; ++t) {
          count += static_cast<std::size_t>(__builtin_popcountll(mark[t]));
        }
        if (count != q) continue;
        std::vector<std::uint32_t> codes;
        codes.reserve(q);
        for (std::uint32_t code = 0; code < n; ++code) {
          if (mark[code >> 6] & (1ull << (code & 63))) codes.push_back(code);
        }
        local.insert(std::move(codes));
      }
    }

#pragma omp critical(qpg_isoline_merge)
    canon.insert(local.begin(), local.end());
  }

  std::vector<IsotropicLine> out;
  out.reserve(canon.size());
  for (const auto& codes : canon) {
    IsotropicLine line;
    line.q = q;
    line.elements.reserve(codes.size());
    for (std::uint32_t code : codes) line.elements.emplace_back(code / q, code % q);
    out.push_back(std::move(line));
  }
  return out;
}

std::vector<ProjectivePoint> projective_line(std::uint32_t q) {
  require_modulus(q, "projective_line");
  if (q > kProjectiveCapacity)
    throw capacity_error("projective_line: q exceeds capacity 1024");
  std::vector<std::uint32_t> units;
  for (std::uint32_t u = 1; u < q; ++u) {
    if (std::gcd(u, q) == 1) units.push_back(u);
  }
  std::vector<ProjectivePoint> out;
  for (std::uint32_t b = 0; b < q; ++b) {
    for (std::uint32_t c = 0; c < q; ++c) {
      if (std::gcd(std::gcd(b, c), q) != 1) continue;
      bool canonical = true;
      for (std::uint32_t u : units) {
        const std::uint32_t nb = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(u) * b) % q);
        const std::uint32_t nc = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(u) * c) % q);
        if (nb < b || (nb == b && nc < c)) {
          canonical = false;
          break;
        }
      }
      if (canonical) out.push_back({b, c, q});
    }
  }
  return out;
}

namespace {

using Mat = Eigen::MatrixXcd;

Mat shift_matrix(std::uint32_t q, std::uint32_t b) {
  Mat x = Mat::Zero(q, q);
  for (std::uint32_t j = 0; j < q; ++j) x((j + b) % q, j) = 1.0;
  return x;
}

Mat clock_matrix(std::uint32_t q, std::uint32_t c) {
  Mat z = Mat::Zero(q, q);
  for (std::uint32_t j = 0; j < q; ++j) {
    const double a = kTwoPi * static_cast<double>(
                                  (static_cast<std::uint64_t>(j) * c) % q) /
                     static_cast<double>(q);
    z(j, j) = std::complex<double>(std::cos(a), std::sin(a));
  }
  return z;
}

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

Mat weyl_operator(std::uint32_t q, std::uint32_t b, std::uint32_t c) {
  return shift_matrix(q, b % q) * clock_matrix(q, c % q);
}

Mat group_commutator(const Mat& a, const Mat& b) {
  // Both arguments are unitary, so the adjoint is the inverse.
  return a * b * a.adjoint() * b.adjoint();
}

}  // namespace

WeylCheck verify_weyl_pair(std::uint32_t q, double tolerance) {
  require_modulus(q, "verify_weyl_pair");
  if (q > kWeylCapacity)
    throw capacity_error("verify_weyl_pair: q exceeds capacity 64");

  WeylCheck chk;
  chk.q = q;
  const Mat id = Mat::Identity(q, q);
  const Mat x = shift_matrix(q, 1);
  const Mat z = clock_matrix(q, 1);
  const std::complex<double> omega(std::cos(kTwoPi / q),
                                   std::sin(kTwoPi / q));

  double residual = 0.0;
  residual = std::max(residual, max_abs(x * x.adjoint() - id));
  residual = std::max(residual, max_abs(z * z.adjoint() - id));
  chk.commutation_residual = max_abs(z * x - omega * (x * z));
  residual = std::max(residual, chk.commutation_residual);

  // Group-commutator spot checks on a fixed sample of exponent pairs.
  const std::pair<std::pair<std::uint32_t, std::uint32_t>,
                  std::pair<std::uint32_t, std::uint32_t>>
      samples[] = {
          {{1, 2}, {3, 1}}, {{0, 1}, {1, 0}}, {{1, 1}, {2, 3}},
          {{2, 0}, {0, 3}}, {{1, 0}, {1, 0}},
      };
  for (const auto& [pa, pb] : samples) {
    const std::uint32_t b1 = pa.first % q, c1 = pa.second % q;
    const std::uint32_t b2 = pb.first % q, c2 = pb.second % q;
    const Mat a = weyl_operator(q, b1, c1);
    const Mat b = weyl_operator(q, b2, c2);
    const Mat comm = group_commutator(a, b);
    const std::uint64_t e =
        (static_cast<std::uint64_t>(c1) * b2 +
         static_cast<std::uint64_t>(q - 1) * c2 % q * b1) %
        q;
    const double angle = kTwoPi * static_cast<double>(e) / q;
    const std::complex<double> expected(std::cos(angle), std::sin(angle));
    residual = std::max(residual, max_abs(comm - expected * id));
  }

  chk.max_residual = residual;
  chk.ok = residual <= tolerance;
  return chk;
}

std::complex<double> weyl_commutator_scalar(std::uint32_t q, std::uint32_t b,
                                            std::uint32_t c, std::uint32_t b2,
                                            std::uint32_t c2) {
  require_modulus(q, "weyl_commutator_scalar");
  if (q > kWeylCapacity)
    throw capacity_error("weyl_commutator_scalar: q exceeds capacity 64");
  const Mat a = weyl_operator(q, b % q, c % q);
  const Mat bb = weyl_operator(q, b2 % q, c2 % q);
  return group_commutator(a, bb)(0, 0);
}

}  // namespace qpg::symplectic
