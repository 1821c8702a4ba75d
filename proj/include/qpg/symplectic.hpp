#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace qpg::symplectic {

// A point (b, c) of the rank-2 free module over Z_q.
struct LatticePoint {
  std::uint32_t b = 0;
  std::uint32_t c = 0;
  std::uint32_t q = 2;
};

// A submodule of (Z_q)^2, stored as its full sorted element list.
struct Submodule {
  std::uint32_t q = 2;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> elements;
};

using IsotropicLine = Submodule;

struct ProjectivePoint {
  std::uint32_t b = 0;
  std::uint32_t c = 0;
  std::uint32_t q = 2;
};

struct WeylCheck {
  std::uint32_t q = 2;
  double max_residual = 0.0;       // max over all matrix identities checked
  double commutation_residual = 0.0;  // |ZX - omega XZ| part alone
  bool ok = false;
};

// (p1.b * p2.c - p2.b * p1.c) mod q, normalized to [0, q). The two points
// must carry the same modulus.
std::uint32_t symplectic_product(const LatticePoint& p1,
                                 const LatticePoint& p2);

// True iff gcd(b, c, q) = 1, i.e. (b, c) generates a free cyclic submodule.
bool is_admissible(const LatticePoint& p);

// The cyclic submodule {k*(b,c) mod q : k in Z_q}, elements sorted.
Submodule cyclic_submodule(const LatticePoint& p);

// All isotropic lines of (Z_q)^2: submodules of order exactly q on which the
// symplectic product vanishes identically. Deduplicated by element set and
// sorted; the count equals sigma(q). q >= 2; q > 64 is a capacity error.
std::vector<IsotropicLine> enumerate_isotropic_lines(std::uint32_t q);

// Canonical representatives of the projective line over Z_q: one lex-least
// unit multiple per free cyclic submodule. The count equals psi(q). q >= 2;
// q > 1024 is a capacity error.
std::vector<ProjectivePoint> projective_line(std::uint32_t q);

// Builds the q x q shift and clock matrices, checks unitarity, the
// commutation identity ZX = omega XZ with omega = exp(2 pi i / q), and for a
// sample of exponent pairs that the group commutator of X^b Z^c and
// X^b' Z^c' equals omega^(c b' - c' b) times the identity. q in [2, 64];
// larger q is a capacity error.
WeylCheck verify_weyl_pair(std::uint32_t q, double tolerance);

// The (0,0) entry of A B A^-1 B^-1 for A = X^b Z^c, B = X^b2 Z^c2 (the
// commutator is scalar, so this is the scalar). Same capacity rule.
std::complex<double> weyl_commutator_scalar(std::uint32_t q, std::uint32_t b,
                                            std::uint32_t c, std::uint32_t b2,
                                            std::uint32_t c2);

}  // namespace qpg::symplectic
