#include "qpg/pauligraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qpg/errors.hpp"
#include "qpg/numtheory.hpp"
#include "qpg/symplectic.hpp"

namespace qpg::pauli {

namespace {

void check_q(std::uint32_t q, std::uint32_t capacity, const char* who) {
  if (q < 2) throw std::domain_error(std::string(who) + ": q must be >= 2");
  if (q > capacity)
    throw capacity_error(std::string(who) + ": q " + std::to_string(q) +
                         " exceeds capacity " + std::to_string(capacity));
}

}  // namespace

graphs::Graph build_pauli_graph(std::uint32_t q, std::uint32_t capacity) {
  check_q(q, capacity, "build_pauli_graph");
  const std::uint32_t n = q * q - 1;
  graphs::Graph g(n);
  for (std::uint32_t a = 1; a <= n; ++a) {
    const symplectic::LatticePoint pa{a / q, a % q, q};
    for (std::uint32_t b = a + 1; b <= n; ++b) {
      const symplectic::LatticePoint pb{b / q, b % q, q};
      if (symplectic::symplectic_product(pa, pb) == 0) {
        g.add_edge(a - 1, b - 1);
      }
    }
  }
  return g;
}

std::vector<std::vector<std::uint32_t>> maximal_commuting_sets(
    std::uint32_t q, std::uint32_t capacity) {
  check_q(q, capacity, "maximal_commuting_sets");
  std::vector<std::vector<std::uint32_t>> sets;
  for (const auto& line : symplectic::enumerate_isotropic_lines(q)) {
    std::vector<std::uint32_t> codes;
    codes.reserve(line.elements.size() - 1);
    for (const auto& [b, c] : line.elements) {
      const std::uint32_t code = b * q + c;
      if (code != 0) codes.push_back(code);
    }
    sets.push_back(std::move(codes));
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

DualGraph build_dual_graph(std::uint32_t q, std::uint32_t capacity) {
  check_q(q, capacity, "build_dual_graph");
  DualGraph dual;
  dual.q = q;
  dual.sets = maximal_commuting_sets(q, capacity);
  const std::size_t n = dual.sets.size();
  dual.graph = graphs::Graph(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // The code lists are sorted; a single merge pass detects overlap.
      const auto& a = dual.sets[i];
      const auto& b = dual.sets[j];
      bool disjoint = true;
      std::size_t ia = 0, ib = 0;
      while (ia < a.size() && ib < b.size()) {
        if (a[ia] == b[ib]) {
          disjoint = false;
          break;
        }
        if (a[ia] < b[ib]) {
          ++ia;
        } else {
          ++ib;
        }
      }
      if (disjoint) dual.graph.add_edge(i, j);
    }
  }
  dual.free_line.resize(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint32_t code : dual.sets[i]) {
      if (symplectic::is_admissible({code / q, code % q, q})) {
        dual.free_line[i] = true;
        break;
      }
    }
  }
  return dual;
}

std::vector<std::size_t> d_set(std::uint32_t q, std::uint32_t capacity) {
  const DualGraph dual = build_dual_graph(q, capacity);
  std::vector<std::size_t> zeros;
  for (std::size_t v = 0; v < dual.graph.order(); ++v) {
    if (dual.graph.degree(v) == 0) zeros.push_back(v);
  }
  return zeros;
}

ProjectivePart projective_component(std::uint32_t q, std::uint32_t capacity) {
  const DualGraph dual = build_dual_graph(q, capacity);
  ProjectivePart part;
  for (std::size_t v = 0; v < dual.graph.order(); ++v) {
    if (dual.free_line[v]) part.vertices.push_back(v);
  }
  part.graph = dual.graph.induced(part.vertices);
  return part;
}

std::pair<std::uint64_t, std::uint64_t> decomposition(std::uint32_t q,
                                                      std::uint32_t capacity) {
  const DualGraph dual = build_dual_graph(q, capacity);
  std::uint64_t free_count = 0;
  for (bool f : dual.free_line) free_count += f ? 1 : 0;
  const std::uint64_t total = dual.sets.size();
  const std::uint64_t extra = total - free_count;

  const nt::PrimeTable pt(std::max<std::uint64_t>(q + 1, 64));
  const std::uint64_t psi = nt::dedekind_psi(q, pt);
  const std::uint64_t sigma = nt::divisor_sigma(q, pt);
  if (free_count != psi || total != sigma) {
    throw std::logic_error(
        "decomposition: geometric line counts disagree with the divisor "
        "formulas");
  }
  return {free_count, extra};
}

}  // namespace qpg::pauli
