#include "qpg/graphanalysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include <Eigen/Dense>

#include "qpg/errors.hpp"

namespace qpg::analysis {

namespace {

// ---------------------------------------------------------------------------
// Exact rank via fraction-free (Bareiss) elimination over cpp_int.
// ---------------------------------------------------------------------------

std::size_t exact_rank(std::vector<std::vector<BigInt>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        BigInt num = m[rank][col] * m[r][c] - m[r][col] * m[rank][c];
        BigInt quo, rem;
        boost::multiprecision::divide_qr(num, prev, quo, rem);
        if (rem != 0) {
          throw std::logic_error(
              "exact_rank: fraction-free elimination left a remainder");
        }
        m[r][c] = std::move(quo);
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Color refinement shared between two graphs (used for isomorphism search,
// and with g == h for automorphisms).
// ---------------------------------------------------------------------------

using Coloring = std::vector<int>;

std::vector<std::pair<int, int>> neighbor_signature(const graphs::Graph& g,
                                                    const Coloring& c,
                                                    std::size_t v) {
  std::map<int, int> counts;
  const std::uint64_t* row = g.row(v);
  for (std::size_t u = 0; u < g.order(); ++u) {
    if ((row[u >> 6] >> (u & 63)) & 1u) ++counts[c[u]];
  }
  return {counts.begin(), counts.end()};
}

// Refines cg/ch in lockstep until stable. Returns false as soon as the two
// colorings disagree on any class size (no color-preserving bijection can
// exist past that point).
bool refine_pair(const graphs::Graph& g, const graphs::Graph& h, Coloring& cg,
                 Coloring& ch) {
  using Key = std::pair<int, std::vector<std::pair<int, int>>>;
  const std::size_t n = g.order();
  for (;;) {
    std::set<int> before(cg.begin(), cg.end());
    for (int c : ch) before.insert(c);

    std::vector<Key> kg(n), kh(n);
    std::map<Key, int> ids;
    for (std::size_t v = 0; v < n; ++v) {
      kg[v] = {cg[v], neighbor_signature(g, cg, v)};
      kh[v] = {ch[v], neighbor_signature(h, ch, v)};
      ids[kg[v]] = 0;
      ids[kh[v]] = 0;
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;

    std::vector<std::size_t> count_g(ids.size(), 0), count_h(ids.size(), 0);
    for (std::size_t v = 0; v < n; ++v) {
      cg[v] = ids[kg[v]];
      ch[v] = ids[kh[v]];
      ++count_g[static_cast<std::size_t>(cg[v])];
      ++count_h[static_cast<std::size_t>(ch[v])];
    }
    if (count_g != count_h) return false;
    if (ids.size() == before.size()) return true;  // partition is stable
  }
}

struct BudgetExceeded {};

int fresh_color(const Coloring& cg, const Coloring& ch) {
  int m = -1;
  for (int c : cg) m = std::max(m, c);
  for (int c : ch) m = std::max(m, c);
  return m + 1;
}

// Smallest color id whose class (in cg) has more than one vertex; -1 if the
// coloring is discrete.
int first_split_color(const Coloring& cg) {
  std::map<int, int> counts;
  for (int c : cg) ++counts[c];
  for (const auto& [color, cnt] : counts) {
    if (cnt > 1) return color;
  }
  return -1;
}

bool leaf_matches(const graphs::Graph& g, const graphs::Graph& h,
                  const Coloring& cg, const Coloring& ch) {
  const std::size_t n = g.order();
  std::map<int, std::size_t> to_h;
  for (std::size_t v = 0; v < n; ++v) to_h[ch[v]] = v;
  std::vector<std::size_t> map(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto it = to_h.find(cg[v]);
    if (it == to_h.end()) return false;
    map[v] = it->second;
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v) != h.has_edge(map[u], map[v])) return false;
    }
  }
  return true;
}

// Depth-first search for any color-preserving isomorphism extending the
// given (already refined, size-consistent) colorings.
bool extend_to_isomorphism(const graphs::Graph& g, const graphs::Graph& h,
                           const Coloring& cg, const Coloring& ch,
                           std::uint64_t& nodes, std::uint64_t budget) {
  if (++nodes > budget) throw BudgetExceeded{};
  const int split = first_split_color(cg);
  if (split == -1) return leaf_matches(g, h, cg, ch);

  std::size_t v = g.order();
  for (std::size_t w = 0; w < g.order(); ++w) {
    if (cg[w] == split) {
      v = w;
      break;
    }
  }
  const int mark = fresh_color(cg, ch);
  for (std::size_t u = 0; u < h.order(); ++u) {
    if (ch[u] != split) continue;
    Coloring cg2 = cg, ch2 = ch;
    cg2[v] = mark;
    ch2[u] = mark;
    if (!refine_pair(g, h, cg2, ch2)) continue;
    if (extend_to_isomorphism(g, h, cg2, ch2, nodes, budget)) return true;
  }
  return false;
}

}  // namespace

IntegerSpectrum exact_integer_spectrum(const graphs::Graph& g,
                                       std::size_t capacity) {
  const std::size_t n = g.order();
  if (n > capacity)
    throw capacity_error("exact_integer_spectrum: graph exceeds capacity");
  IntegerSpectrum spec;
  spec.order = n;
  if (n == 0) {
    spec.certified = true;
    return spec;
  }

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("exact_integer_spectrum: eigensolver failed");

  spec.numeric.assign(solver.eigenvalues().data(),
                      solver.eigenvalues().data() + n);
  std::sort(spec.numeric.rbegin(), spec.numeric.rend());

  std::set<std::int64_t> candidates;
  for (double lambda : spec.numeric) {
    candidates.insert(static_cast<std::int64_t>(std::llround(lambda)));
  }

  std::size_t total = 0;
  for (std::int64_t c : candidates) {
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        m[u][v] = g.has_edge(u, v) ? 1 : 0;
      }
      m[u][u] -= c;
    }
    const std::size_t mult = n - exact_rank(std::move(m));
    if (mult > 0) {
      spec.entries.emplace_back(c, mult);
      total += mult;
    }
  }
  std::sort(spec.entries.begin(), spec.entries.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  spec.certified = total == n;
  return spec;
}

namespace {

using Entries = std::vector<std::pair<std::int64_t, std::size_t>>;

Entries normalize(Entries e) {
  std::map<std::int64_t, std::size_t> merged;
  for (const auto& [lambda, mult] : e) merged[lambda] += mult;
  Entries out;
  for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
    if (it->second > 0) out.emplace_back(it->first, it->second);
  }
  return out;
}

}  // namespace

SpectrumClass classify_spectrum(std::uint32_t q, const IntegerSpectrum& spec,
                                const nt::PrimeTable& pt) {
  if (!spec.certified)
    throw std::domain_error("classify_spectrum: spectrum is not certified");
  if (q < 2) throw std::domain_error("classify_spectrum: q must be >= 2");

  const nt::Factorization f = nt::factorize(q, pt);
  const std::uint64_t psi = nt::dedekind_psi(q, pt);
  const auto iq = static_cast<std::int64_t>(q);

  SpectrumClass cls;
  Entries expected;

  if (f.factors.size() == 1 && f.factors[0].second == 1) {
    // Prime q: the free-line geometry is the complete graph on q+1 lines.
    cls.tag = "type1";
    cls.parameters = {{"q", q}};
    expected = {{iq, 1}, {-1, static_cast<std::size_t>(q)}};
  } else if (q == 18 || q == 24 || q == 36) {
    cls.tag = "type6";
    cls.parameters = {{"q", q}};
    const std::int64_t s = iq / 6;
    expected = {{iq, 1},
                {s, 6},
                {0, static_cast<std::size_t>(psi) - 12},
                {-2 * s, 3},
                {-3 * s, 2}};
  } else if (f.factors.size() == 1) {
    const std::uint64_t p = f.factors[0].first;
    cls.tag = "type5";
    cls.parameters = {{"p", p}, {"l", f.factors[0].second}};
    expected = {{iq, 1},
                {0, static_cast<std::size_t>(psi - p - 1)},
                {-static_cast<std::int64_t>(q / p), static_cast<std::size_t>(p)}};
  } else if (f.factors.size() == 2 && f.factors[0].second == 1 &&
             f.factors[1].second == 1) {
    const auto r = static_cast<std::int64_t>(f.factors[0].first);
    const auto s = static_cast<std::int64_t>(f.factors[1].first);
    cls.tag = "type2";
    cls.parameters = {{"r", static_cast<std::uint64_t>(r)},
                      {"s", static_cast<std::uint64_t>(s)}};
    expected = {{iq, 1},
                {1, static_cast<std::size_t>(q)},
                {-r, static_cast<std::size_t>(s)},
                {-s, static_cast<std::size_t>(r)}};
  } else if (f.factors.size() == 2 && f.factors[0].first == 2 &&
             f.factors[0].second == 2 && f.factors[1].second == 1) {
    const auto r = static_cast<std::int64_t>(f.factors[1].first);
    cls.tag = "type4";
    cls.parameters = {{"r", static_cast<std::uint64_t>(r)}};
    expected = {{iq, 1},
                {2, static_cast<std::size_t>(2 * r)},
                {0, static_cast<std::size_t>(psi / 2)},
                {-4, static_cast<std::size_t>(r)},
                {-2 * r, 2}};
  } else if (f.factors.size() == 3 && f.factors[0].second == 1 &&
             f.factors[1].second == 1 && f.factors[2].second == 1) {
    const auto r = static_cast<std::int64_t>(f.factors[0].first);
    const auto s = static_cast<std::int64_t>(f.factors[1].first);
    const auto t = static_cast<std::int64_t>(f.factors[2].first);
    cls.tag = "type3";
    cls.parameters = {{"r", static_cast<std::uint64_t>(r)},
                      {"s", static_cast<std::uint64_t>(s)},
                      {"t", static_cast<std::uint64_t>(t)}};
    expected = {{iq, 1},
                {t, static_cast<std::size_t>(r * s)},
                {s, static_cast<std::size_t>(r * t)},
                {r, static_cast<std::size_t>(s * t)},
                {-1, static_cast<std::size_t>(q)},
                {-r * s, static_cast<std::size_t>(t)},
                {-r * t, static_cast<std::size_t>(s)},
                {-s * t, static_cast<std::size_t>(r)}};
  } else {
    return {"unclassified", {}};
  }

  if (normalize(expected) != normalize(spec.entries)) {
    return {"unclassified", {}};
  }
  return cls;
}

namespace {

bool is_clique(const graphs::Graph& g, const std::vector<std::size_t>& verts) {
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (!g.has_edge(verts[i], verts[j])) return false;
    }
  }
  return true;
}

}  // namespace

NamedGraph recognize_named_graph(const graphs::Graph& g, std::size_t capacity) {
  const std::size_t n = g.order();
  if (n > capacity)
    throw capacity_error("recognize_named_graph: graph exceeds capacity");
  if (n == 0) return {"unknown", {}, false};

  // Complete graph.
  if (g.edge_count() == n * (n - 1) / 2) {
    return {"completeK", {n}, false};
  }

  // Complete multipartite: every complement component must be a clique.
  {
    const graphs::Graph comp = g.complement();
    const auto comps = comp.connected_components();
    bool ok = true;
    std::vector<std::size_t> parts;
    for (const auto& c : comps) {
      if (!is_clique(comp, c)) {
        ok = false;
        break;
      }
      parts.push_back(c.size());
    }
    if (ok) {
      std::sort(parts.begin(), parts.end());
      return {"completeMultipartite", parts, false};
    }
  }

  // Cycle.
  if (n >= 3 && g.edge_count() == n && g.is_connected()) {
    bool all_two = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (g.degree(v) != 2) {
        all_two = false;
        break;
      }
    }
    if (all_two) return {"cycle", {n}, false};
  }

  // 3-cube (checked before the bipartite family: the order-8 member of that
  // family is the cube itself).
  if (n == 8) {
    try {
      if (are_isomorphic(g, graphs::cube_graph())) return {"cube", {3}, false};
    } catch (const BudgetExceeded&) {
    } catch (const capacity_error&) {
    }
  }

  // Bipartite double family: order 2(r+1), spectrum {r, 1^r, (-1)^r, -r}.
  if (n >= 4 && n % 2 == 0 && g.is_bipartite()) {
    const std::size_t r = n / 2 - 1;
    try {
      const IntegerSpectrum spec = exact_integer_spectrum(g, capacity);
      if (spec.certified) {
        Entries expected = {{static_cast<std::int64_t>(r), 1},
                            {1, r},
                            {-1, r},
                            {-static_cast<std::int64_t>(r), 1}};
        if (normalize(expected) == normalize(spec.entries)) {
          bool iso = false;
          try {
            iso = are_isomorphic(g, graphs::crown_graph(r));
          } catch (...) {
            iso = false;
          }
          return {"bipartiteBP", {r}, !iso};
        }
      }
    } catch (const capacity_error&) {
    }
  }

  // Rook complement on an m x k grid.
  for (std::size_t m = n / 2; m >= 2; --m) {
    if (n % m != 0) continue;
    const std::size_t k = n / m;
    if (k > m) break;
    bool regular = true;
    const std::size_t want = (m - 1) * (k - 1);
    for (std::size_t v = 0; v < n; ++v) {
      if (g.degree(v) != want) {
        regular = false;
        break;
      }
    }
    if (!regular) continue;
    try {
      if (are_isomorphic(g, graphs::rook_complement(m, k))) {
        return {"rookComplement", {m, k}, false};
      }
    } catch (...) {
    }
  }

  return {"unknown", {}, false};
}

AutResult automorphism_order(const graphs::Graph& g, std::uint64_t node_budget,
                             std::size_t capacity) {
  const std::size_t n = g.order();
  if (n > capacity)
    throw capacity_error("automorphism_order: graph exceeds capacity");
  AutResult res;
  if (n <= 1) return res;

  Coloring cur(n, 0), mirror(n, 0);
  refine_pair(g, g, cur, mirror);  // refining a graph against itself always succeeds

  std::uint64_t nodes = 0;
  try {
    for (;;) {
      const int split = first_split_color(cur);
      if (split == -1) break;  // discrete: only the identity remains
      std::size_t v = n;
      std::vector<std::size_t> cell;
      for (std::size_t w = 0; w < n; ++w) {
        if (cur[w] == split) {
          if (v == n) v = w;
          cell.push_back(w);
        }
      }
      const int mark = fresh_color(cur, cur);
      std::size_t orbit = 0;
      for (std::size_t u : cell) {
        if (u == v) {
          ++orbit;  // the identity automorphism
          continue;
        }
        Coloring cg = cur, ch = cur;
        cg[v] = mark;
        ch[u] = mark;
        if (++nodes > node_budget) throw BudgetExceeded{};
        if (!refine_pair(g, g, cg, ch)) continue;
        if (extend_to_isomorphism(g, g, cg, ch, nodes, node_budget)) ++orbit;
      }
      res.order *= static_cast<std::uint64_t>(orbit);

      // Descend into the stabilizer of v.
      cur[v] = mark;
      Coloring twin = cur;
      refine_pair(g, g, cur, twin);
    }
  } catch (const BudgetExceeded&) {
    res.complete = false;
  }
  res.nodes = nodes;
  return res;
}

bool are_isomorphic(const graphs::Graph& a, const graphs::Graph& b,
                    std::uint64_t node_budget) {
  if (a.order() != b.order()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  if (a.order() == 0) return true;
  Coloring ca(a.order(), 0), cb(b.order(), 0);
  if (!refine_pair(a, b, ca, cb)) return false;
  std::uint64_t nodes = 0;
  try {
    return extend_to_isomorphism(a, b, ca, cb, nodes, node_budget);
  } catch (const BudgetExceeded&) {
    throw capacity_error("are_isomorphic: node budget exhausted");
  }
}

std::vector<std::vector<std::size_t>> connected_components(
    const graphs::Graph& g) {
  return g.connected_components();
}

}  // namespace qpg::analysis
