#ifndef BOXLAB_GENERATORS_HPP
#define BOXLAB_GENERATORS_HPP

// Instance families for tests, samples and benchmarks. All deterministic in
// their arguments.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "boxlab/builders/treewidth.hpp"
#include "boxlab/core/error.hpp"
#include "boxlab/core/graph.hpp"
#include "boxlab/core/poset.hpp"
#include "boxlab/core/random.hpp"

namespace boxlab::gen {

namespace detail {

// Pairs (u, v), u in [0, nu), v in [0, nv), each kept with probability p,
// by geometric skipping; `upper` keeps only u < v (nu == nv).
inline std::vector<edge> bernoulli_pairs(std::size_t nu, std::size_t nv, double p, bool upper, rng& r) {
  std::vector<edge> out;
  if (p <= 0.0 || nu == 0 || nv == 0) return out;
  const double log_q = p >= 1.0 ? 0.0 : std::log1p(-p);
  for (std::size_t u = 0; u < nu; ++u) {
    std::size_t v = upper ? u + 1 : 0;
    while (true) {
      if (p < 1.0) {
        const double x = r.unit();
        const double skip = std::floor(std::log1p(-x) / log_q);
        if (skip >= static_cast<double>(nv)) break;
        v += static_cast<std::size_t>(skip);
      }
      if (v >= nv) break;
      out.emplace_back(static_cast<vertex>(u), static_cast<vertex>(v));
      ++v;
    }
  }
  return out;
}

} // namespace detail

inline graph path(std::size_t n) {
  std::vector<edge> es;
  for (vertex v = 1; v < n; ++v) es.emplace_back(v - 1, v);
  return graph::from_edges(n, es);
}

inline graph cycle(std::size_t n) {
  if (n < 3) throw parameter_error("cycle: needs at least 3 vertices");
  std::vector<edge> es;
  for (vertex v = 0; v < n; ++v) es.emplace_back(v, static_cast<vertex>((v + 1) % n));
  return graph::from_edges(n, es);
}

inline graph complete(std::size_t n) { return graph::complete(n); }

inline graph star(std::size_t leaves) {
  std::vector<edge> es;
  for (vertex v = 1; v <= leaves; ++v) es.emplace_back(0, v);
  return graph::from_edges(leaves + 1, es);
}

// K_n minus the matching {2i, 2i+1}.
inline graph matching_complement(std::size_t n) {
  if (n % 2 != 0) throw parameter_error("matching_complement: n must be even");
  std::vector<edge> es;
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v)
      if (v != (u ^ 1U)) es.emplace_back(u, v);
  return graph::from_edges(n, es);
}

// Vertex (r, c) is r*cols + c.
inline graph grid(std::size_t rows, std::size_t cols) {
  std::vector<edge> es;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = static_cast<vertex>(r * cols + c);
      if (c + 1 < cols) es.emplace_back(v, v + 1);
      if (r + 1 < rows) es.emplace_back(v, static_cast<vertex>(v + cols));
    }
  return graph::from_edges(rows * cols, es);
}

// BFS layering of the grid from (0, 0): layer r + c.
inline std::vector<std::uint32_t> grid_layers(std::size_t rows, std::size_t cols) {
  std::vector<std::uint32_t> layer(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) layer[r * cols + c] = static_cast<std::uint32_t>(r + c);
  return layer;
}

// Path decomposition whose bags are windows of three consecutive columns.
// Each diagonal layer meets a column once, so the layered width is
// min(3, cols).
inline tree_decomposition grid_decomposition(std::size_t rows, std::size_t cols) {
  tree_decomposition td;
  const std::size_t windows = cols <= 3 ? 1 : cols - 2;
  for (std::size_t w = 0; w < windows; ++w) {
    std::vector<vertex> bag;
    for (std::size_t c = w; c < std::min(cols, w + 3); ++c)
      for (std::size_t r = 0; r < rows; ++r) bag.push_back(static_cast<vertex>(r * cols + c));
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(std::move(bag));
    if (w > 0) td.edges.emplace_back(static_cast<std::uint32_t>(w - 1), static_cast<std::uint32_t>(w));
  }
  return td;
}

// Each vertex of K_n joined to the midpoint of each of its edges; the
// midpoint of {i, j} is n + (index of the pair).
inline graph subdivided_complete(std::size_t n) {
  std::vector<edge> es;
  vertex mid = static_cast<vertex>(n);
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v, ++mid) {
      es.emplace_back(u, mid);
      es.emplace_back(v, mid);
    }
  return graph::from_edges(mid, es);
}

// G(n, p) with candidate edges added in random order while both endpoints
// stay below degree `cap` (0 means no cap).
inline graph gnp(std::size_t n, double p, std::size_t cap, std::uint64_t seed) {
  rng r(seed);
  auto cand = detail::bernoulli_pairs(n, n, p, true, r);
  if (cap == 0) return graph::from_edges(n, cand);
  r.shuffle(cand);
  std::vector<std::size_t> deg(n, 0);
  std::vector<edge> es;
  for (auto [u, v] : cand)
    if (deg[u] < cap && deg[v] < cap) {
      ++deg[u];
      ++deg[v];
      es.emplace_back(u, v);
    }
  std::sort(es.begin(), es.end());
  return graph::from_edges(n, es);
}

// Random graph whose maximum degree is close to `delta`: G(n, p) with
// expected degree 1.2·delta, capped at delta.
inline graph degree_capped(std::size_t n, std::size_t delta, std::uint64_t seed) {
  if (n < 2) return graph(n);
  const double p = std::min(1.0, 1.2 * static_cast<double>(delta) / static_cast<double>(n - 1));
  return gnp(n, p, delta, seed);
}

// Sides A = 0..na-1 and B = na..na+nb-1; pairs kept with probability p, then
// added in random order subject to the side degree caps (0 means no cap).
inline graph random_bipartite(std::size_t na, std::size_t nb, double p, std::size_t cap_a, std::size_t cap_b, std::uint64_t seed) {
  rng r(seed);
  auto cand = detail::bernoulli_pairs(na, nb, p, false, r);
  r.shuffle(cand);
  std::vector<std::size_t> deg(na + nb, 0);
  std::vector<edge> es;
  for (auto [a, b0] : cand) {
    const auto b = static_cast<vertex>(na + b0);
    if ((cap_a != 0 && deg[a] >= cap_a) || (cap_b != 0 && deg[b] >= cap_b)) continue;
    ++deg[a];
    ++deg[b];
    es.emplace_back(a, b);
  }
  std::sort(es.begin(), es.end());
  return graph::from_edges(na + nb, es);
}

inline graph random_tree(std::size_t n, std::uint64_t seed) {
  rng r(seed);
  std::vector<edge> es;
  for (vertex v = 1; v < n; ++v) es.emplace_back(static_cast<vertex>(r.below(v)), v);
  return graph::from_edges(n, es);
}

inline poset chain(std::size_t n) {
  std::vector<edge> rel;
  for (vertex v = 1; v < n; ++v) rel.emplace_back(v - 1, v);
  return poset::from_relations(n, rel);
}

inline poset antichain(std::size_t n) { return poset(n); }

// Subsets of a k-set ordered by strict inclusion; element id is the bitmask.
inline poset boolean_lattice(std::size_t k) {
  if (k > 16) throw parameter_error("boolean_lattice: k at most 16");
  const std::size_t n = std::size_t{1} << k;
  std::vector<edge> rel;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t i = 0; i < k; ++i)
      if (!(s >> i & 1U)) rel.emplace_back(static_cast<vertex>(s), static_cast<vertex>(s | (std::size_t{1} << i)));
  return poset::from_relations(n, rel);
}

// Standard example S_n: a_i = i, b_j = n + j, a_i < b_j iff i != j.
inline poset crown(std::size_t n) {
  std::vector<edge> rel;
  for (vertex i = 0; i < n; ++i)
    for (vertex j = 0; j < n; ++j)
      if (i != j) rel.emplace_back(i, static_cast<vertex>(n + j));
  return poset::from_relations(2 * n, rel);
}

// Minimal elements 0..lower-1 below maximal elements lower..lower+upper-1,
// relations drawn as in random_bipartite.
inline poset random_height2(std::size_t lower, std::size_t upper, double p, std::size_t cap_lower, std::size_t cap_upper,
                            std::uint64_t seed) {
  const graph g = random_bipartite(lower, upper, p, cap_lower, cap_upper, seed);
  return poset::from_relations(lower + upper, g.edges());
}

// Transitive closure of a random DAG: u < v kept with probability p for
// u before v in a random permutation.
inline poset random_poset(std::size_t n, double p, std::uint64_t seed) {
  rng r(seed);
  std::vector<vertex> perm(n);
  for (vertex v = 0; v < n; ++v) perm[v] = v;
  r.shuffle(perm);
  std::vector<edge> rel;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (r.unit() < p) rel.emplace_back(perm[i], perm[j]);
  return poset::from_relations(n, rel);
}

} // namespace boxlab::gen

#endif // BOXLAB_GENERATORS_HPP
