#include "qpg/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace qpg::graphs {

namespace {

inline bool test_bit(const std::uint64_t* row, std::size_t v) {
  return (row[v >> 6] >> (v & 63)) & 1u;
}

inline void set_bit(std::uint64_t* row, std::size_t v) {
  row[v >> 6] |= 1ull << (v & 63);
}

}  // namespace

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw std::domain_error("Graph::add_edge: vertex out of range");
  if (u == v) return;
  set_bit(&bits_[u * words_], v);
  set_bit(&bits_[v * words_], u);
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_) throw std::domain_error("Graph::has_edge: vertex out of range");
  if (u == v) return false;
  return test_bit(&bits_[u * words_], v);
}

std::size_t Graph::degree(std::size_t v) const {
  if (v >= n_) throw std::domain_error("Graph::degree: vertex out of range");
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) {
    d += static_cast<std::size_t>(__builtin_popcountll(bits_[v * words_ + w]));
  }
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> seq(n_);
  for (std::size_t v = 0; v < n_; ++v) seq[v] = degree(v);
  std::sort(seq.rbegin(), seq.rend());
  return seq;
}

Graph Graph::complement() const {
  Graph c(n_);
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (!has_edge(u, v)) c.add_edge(u, v);
    }
  }
  return c;
}

Graph Graph::induced(const std::vector<std::size_t>& vertices) const {
  Graph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= n_)
      throw std::domain_error("Graph::induced: vertex out of range");
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) g.add_edge(i, j);
    }
  }
  return g;
}

std::vector<std::vector<std::size_t>> Graph::connected_components() const {
  std::vector<char> seen(n_, 0);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::queue<std::size_t> bfs;
    bfs.push(s);
    seen[s] = 1;
    while (!bfs.empty()) {
      const std::size_t v = bfs.front();
      bfs.pop();
      comp.push_back(v);
      for (std::size_t u = 0; u < n_; ++u) {
        if (!seen[u] && test_bit(&bits_[v * words_], u)) {
          seen[u] = 1;
          bfs.push(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  return connected_components().size() == 1;
}

bool Graph::is_bipartite() const {
  std::vector<int> color(n_, -1);
  for (std::size_t s = 0; s < n_; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<std::size_t> bfs;
    bfs.push(s);
    while (!bfs.empty()) {
      const std::size_t v = bfs.front();
      bfs.pop();
      for (std::size_t u = 0; u < n_; ++u) {
        if (!test_bit(&bits_[v * words_], u)) continue;
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          bfs.push(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string Graph::to_edge_list() const {
  std::ostringstream os;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) os << u << ' ' << v << '\n';
    }
  }
  return os.str();
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_multipartite(const std::vector<std::size_t>& parts) {
  std::size_t n = 0;
  for (std::size_t p : parts) n += p;
  Graph g(n);
  std::vector<std::size_t> part_of(n);
  std::size_t v = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t k = 0; k < parts[i]; ++k) part_of[v++] = i;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (part_of[a] != part_of[b]) g.add_edge(a, b);
    }
  }
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::domain_error("cycle_graph: need at least 3 vertices");
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph cube_graph() {
  Graph g(8);
  for (std::size_t u = 0; u < 8; ++u) {
    for (std::size_t b = 0; b < 3; ++b) {
      const std::size_t v = u ^ (1u << b);
      if (u < v) g.add_edge(u, v);
    }
  }
  return g;
}

Graph rook_complement(std::size_t m, std::size_t n) {
  Graph g(m * n);
  for (std::size_t i1 = 0; i1 < m; ++i1) {
    for (std::size_t j1 = 0; j1 < n; ++j1) {
      for (std::size_t i2 = 0; i2 < m; ++i2) {
        for (std::size_t j2 = 0; j2 < n; ++j2) {
          const std::size_t a = i1 * n + j1;
          const std::size_t b = i2 * n + j2;
          if (a < b && i1 != i2 && j1 != j2) g.add_edge(a, b);
        }
      }
    }
  }
  return g;
}

Graph crown_graph(std::size_t r) {
  Graph g(2 * (r + 1));
  for (std::size_t i = 0; i <= r; ++i) {
    for (std::size_t j = 0; j <= r; ++j) {
      if (i != j) g.add_edge(i, r + 1 + j);
    }
  }
  return g;
}

Graph parse_edge_list(const std::string& text, std::size_t order_hint) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t max_v = order_hint == 0 ? 0 : order_hint - 1;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::size_t u, v;
    if (!(ls >> u >> v)) throw std::domain_error("parse_edge_list: bad line: " + line);
    edges.emplace_back(u, v);
    max_v = std::max(max_v, std::max(u, v));
  }
  const std::size_t n =
      edges.empty() && order_hint == 0 ? 0 : std::max(max_v + 1, order_hint);
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t popcount_all(const Bits& b) {
  std::size_t c = 0;
  for (std::uint64_t w : b) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

void bron_kerbosch(const Graph& g, Bits& r, Bits p, Bits x,
                   std::vector<std::vector<std::size_t>>& out) {
  const std::size_t words = g.words_per_row();
  if (popcount_all(p) == 0 && popcount_all(x) == 0) {
    std::vector<std::size_t> clique;
    for (std::size_t v = 0; v < g.order(); ++v) {
      if ((r[v >> 6] >> (v & 63)) & 1u) clique.push_back(v);
    }
    out.push_back(std::move(clique));
    return;
  }
  // Pivot: vertex of P union X maximizing |P intersect N(u)|.
  std::size_t pivot = g.order();
  std::size_t best = 0;
  for (std::size_t u = 0; u < g.order(); ++u) {
    const bool in_px = (((p[u >> 6] | x[u >> 6]) >> (u & 63)) & 1u) != 0;
    if (!in_px) continue;
    std::size_t cnt = 0;
    const std::uint64_t* nu = g.row(u);
    for (std::size_t w = 0; w < words; ++w) {
      cnt += static_cast<std::size_t>(__builtin_popcountll(p[w] & nu[w]));
    }
    if (pivot == g.order() || cnt > best) {
      pivot = u;
      best = cnt;
    }
  }
  Bits candidates = p;
  if (pivot != g.order()) {
    const std::uint64_t* np = g.row(pivot);
    for (std::size_t w = 0; w < words; ++w) candidates[w] &= ~np[w];
  }
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (!((candidates[v >> 6] >> (v & 63)) & 1u)) continue;
    const std::uint64_t* nv = g.row(v);
    Bits p2(words), x2(words);
    for (std::size_t w = 0; w < words; ++w) {
      p2[w] = p[w] & nv[w];
      x2[w] = x[w] & nv[w];
    }
    r[v >> 6] |= 1ull << (v & 63);
    bron_kerbosch(g, r, p2, x2, out);
    r[v >> 6] &= ~(1ull << (v & 63));
    p[v >> 6] &= ~(1ull << (v & 63));
    x[v >> 6] |= 1ull << (v & 63);
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> maximal_cliques(const Graph& g) {
  const std::size_t words = g.words_per_row();
  Bits r(words, 0), p(words, 0), x(words, 0);
  for (std::size_t v = 0; v < g.order(); ++v) p[v >> 6] |= 1ull << (v & 63);
  std::vector<std::vector<std::size_t>> out;
  bron_kerbosch(g, r, p, x, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qpg::graphs
