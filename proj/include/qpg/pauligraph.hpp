#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qpg/graph.hpp"

namespace qpg::pauli {

// Default ceiling for the single-qudit graph builders; callers may raise it
// explicitly (the CLI caps --capacity at 60).
inline constexpr std::uint32_t kDefaultCapacity = 36;

struct DualGraph {
  std::uint32_t q = 2;
  graphs::Graph graph;                         // one vertex per line
  std::vector<std::vector<std::uint32_t>> sets;  // vertex -> operator codes
  std::vector<bool> free_line;                 // vertex -> free (admissible)
};

struct ProjectivePart {
  graphs::Graph graph;
  std::vector<std::size_t> vertices;  // indices into the dual graph
};

// Commutation graph on the q^2 - 1 nonidentity operators: vertex for code
// b*q + c in [1, q^2), index code-1; edge iff the symplectic product of the
// exponent vectors vanishes mod q. q in [2, capacity].
graphs::Graph build_pauli_graph(std::uint32_t q,
                                std::uint32_t capacity = kDefaultCapacity);

// The maximal sets of mutually commuting nonidentity operators: isotropic
// lines with the identity (0,0) removed, as sorted code lists in
// lexicographic order. There are sigma(q) of them, each of size q - 1.
std::vector<std::vector<std::uint32_t>> maximal_commuting_sets(
    std::uint32_t q, std::uint32_t capacity = kDefaultCapacity);

// Dual graph: one vertex per maximal commuting set, edge iff the sets are
// disjoint. free_line marks sets whose line contains an admissible vector.
DualGraph build_dual_graph(std::uint32_t q,
                           std::uint32_t capacity = kDefaultCapacity);

// Degree-0 vertices of the dual graph (the sets meeting every other set).
std::vector<std::size_t> d_set(std::uint32_t q,
                               std::uint32_t capacity = kDefaultCapacity);

// Subgraph induced on the psi(q) free-line vertices.
ProjectivePart projective_component(std::uint32_t q,
                                    std::uint32_t capacity = kDefaultCapacity);

// (free, extra) line counts measured from the geometry; checked against
// psi(q) and sigma(q) - psi(q).
std::pair<std::uint64_t, std::uint64_t> decomposition(
    std::uint32_t q, std::uint32_t capacity = kDefaultCapacity);

}  // namespace qpg::pauli
