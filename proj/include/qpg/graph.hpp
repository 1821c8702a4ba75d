#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qpg::graphs {

// Simple undirected graph on vertices 0..n-1 with a packed-bitset adjacency
// matrix (row-major, 64-bit words). Self-loops are ignored.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t order() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;
  std::vector<std::size_t> degree_sequence() const;  // descending

  // Raw adjacency row (words_per_row() words) for bit-parallel algorithms.
  const std::uint64_t* row(std::size_t v) const { return &bits_[v * words_]; }

  Graph complement() const;
  Graph induced(const std::vector<std::size_t>& vertices) const;

  // Components sorted by smallest contained vertex; each component's
  // vertex list ascending.
  std::vector<std::vector<std::size_t>> connected_components() const;
  bool is_connected() const;
  bool is_bipartite() const;

  // One line "u v" per edge with u < v, edges sorted lexicographically.
  std::string to_edge_list() const;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

Graph complete_graph(std::size_t n);
// Part sizes need not be equal; vertices are numbered part by part.
Graph complete_multipartite(const std::vector<std::size_t>& parts);
Graph cycle_graph(std::size_t n);
// The 3-cube: vertices are 3-bit strings, edges join Hamming distance 1.
Graph cube_graph();
// Complement of the m x n rook's graph: vertices (i, j) numbered i*n + j,
// adjacent iff both coordinates differ.
Graph rook_complement(std::size_t m, std::size_t n);
// K_{r+1, r+1} minus a perfect matching (left i = vertex i, right j =
// vertex r+1+j, edge iff i != j).
Graph crown_graph(std::size_t r);

// Parses lines of "u v" (0-based). order_hint pads isolated tail vertices.
Graph parse_edge_list(const std::string& text, std::size_t order_hint = 0);

// All maximal cliques (Bron-Kerbosch with pivoting), each clique ascending,
// list sorted lexicographically.
std::vector<std::vector<std::size_t>> maximal_cliques(const Graph& g);

}  // namespace qpg::graphs
