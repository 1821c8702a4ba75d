#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qpg/graph.hpp"
#include "qpg/numtheory.hpp"

namespace qpg::analysis {

using BigInt = boost::multiprecision::cpp_int;

struct IntegerSpectrum {
  std::size_t order = 0;
  // (eigenvalue, multiplicity), eigenvalues strictly descending. Only
  // populated with exactly verified integer eigenvalues.
  std::vector<std::pair<std::int64_t, std::size_t>> entries;
  // True iff the verified multiplicities sum to the order, i.e. the whole
  // spectrum is integral and `entries` is complete and exact.
  bool certified = false;
  // Floating-point eigenvalues, descending (always complete).
  std::vector<double> numeric;
};

// Numeric eigenvalues via a self-adjoint solver; integer candidates are then
// certified exactly: multiplicity(c) = order - rank(A - cI) computed with
// fraction-free elimination over arbitrary-precision integers. Graphs larger
// than `capacity` are a capacity error.
IntegerSpectrum exact_integer_spectrum(const graphs::Graph& g,
                                       std::size_t capacity = 200);

struct SpectrumClass {
  std::string tag;  // "type1" .. "type6", or "unclassified"
  std::vector<std::pair<std::string, std::uint64_t>> parameters;
};

// Matches a certified spectrum of the free-line commutation geometry at
// modulus q against the closed forms indexed by the factorization shape of
// q. Requires spec.certified (domain error otherwise).
SpectrumClass classify_spectrum(std::uint32_t q, const IntegerSpectrum& spec,
                                const nt::PrimeTable& pt);

struct NamedGraph {
  // "completeK", "completeMultipartite", "cycle", "cube", "bipartiteBP",
  // "rookComplement", or "unknown".
  std::string name;
  std::vector<std::size_t> params;
  // bipartiteBP only: matched by spectrum + bipartiteness but not verified
  // isomorphic to the standard crown model.
  bool spectral_only = false;
};

NamedGraph recognize_named_graph(const graphs::Graph& g,
                                 std::size_t capacity = 200);

struct AutResult {
  BigInt order = 1;
  bool complete = true;     // false if the node budget ran out
  std::uint64_t nodes = 0;  // search-tree nodes expanded
};

// Automorphism group order by individualization-refinement with an
// orbit-stabilizer chain. Graphs larger than `capacity` are a capacity
// error; if `node_budget` is exhausted the partial product is returned with
// complete = false.
AutResult automorphism_order(const graphs::Graph& g,
                             std::uint64_t node_budget = 500'000,
                             std::size_t capacity = 100);

bool are_isomorphic(const graphs::Graph& a, const graphs::Graph& b,
                    std::uint64_t node_budget = 500'000);

std::vector<std::vector<std::size_t>> connected_components(
    const graphs::Graph& g);

}  // namespace qpg::analysis
