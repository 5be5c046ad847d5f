#ifndef BOXLAB_TESTS_SUPPORT_HPP
#define BOXLAB_TESTS_SUPPORT_HPP

// Test-side recomputations. Nothing here calls into the library code being
// checked beyond its data types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "boxlab/boxlab.hpp"

namespace boxlab::testing {

inline constexpr double euler_e = 2.718281828459045235360287471352662498;

// ---------------------------------------------------------------- verifiers

// Counts pairs whose box intersection disagrees with adjacency, by direct
// interval comparison on raw coordinates.
inline std::size_t naive_violations(const graph& g, const box_representation& rep) {
  if (rep.vertices() != g.order()) return ~std::size_t{0};
  std::size_t bad = 0;
  for (vertex u = 0; u < g.order(); ++u)
    for (vertex v = u + 1; v < g.order(); ++v) {
      bool meet = true;
      for (std::size_t i = 0; i < rep.dims() && meet; ++i) {
        const auto& a = rep.columns()[i][u];
        const auto& b = rep.columns()[i][v];
        meet = std::max(a.lo.value(), b.lo.value()) <= std::min(a.hi.value(), b.hi.value());
      }
      if (meet != g.adjacent(u, v)) ++bad;
    }
  return bad;
}

// G<A,B> straight from its definition: uv is a non-edge iff it is a non-edge
// of G with one end in A and the other in B.
inline graph naive_bipartite_supergraph(const graph& g, const std::vector<vertex>& a, const std::vector<vertex>& b) {
  const std::size_t n = g.order();
  std::vector<int> side(n, 0);
  for (vertex v : a) side[v] = 1;
  for (vertex v : b) side[v] = 2;
  std::vector<edge> es;
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v) {
      const bool cross = (side[u] == 1 && side[v] == 2) || (side[u] == 2 && side[v] == 1);
      if (g.adjacent(u, v) || !cross) es.emplace_back(u, v);
    }
  return graph::from_edges(n, es);
}

// u < v in P iff u precedes v in every order.
inline bool naive_realizes(const poset& p, const std::vector<std::vector<vertex>>& orders) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::size_t>> pos;
  for (const auto& o : orders) {
    if (o.size() != n) return false;
    std::vector<std::size_t> r(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (o[i] >= n || r[o[i]] != n) return false;
      r[o[i]] = i;
    }
    pos.push_back(std::move(r));
  }
  for (vertex u = 0; u < n; ++u)
    for (vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      bool all = !pos.empty();
      for (const auto& r : pos) all = all && r[u] < r[v];
      if (all != p.less(u, v)) return false;
    }
  return true;
}

// Every incomparable (x, y) has an order putting x before all z with y <= z.
inline bool naive_fk(const poset& p, const std::vector<std::vector<vertex>>& orders) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::size_t>> pos;
  for (const auto& o : orders) {
    if (o.size() != n) return false;
    std::vector<std::size_t> r(n);
    for (std::size_t i = 0; i < n; ++i) r[o[i]] = i;
    pos.push_back(std::move(r));
  }
  for (vertex x = 0; x < n; ++x)
    for (vertex y = 0; y < n; ++y) {
      if (x == y || p.less(x, y) || p.less(y, x)) continue;
      bool some = false;
      for (const auto& r : pos) {
        bool ok = true;
        for (vertex z = 0; z < n && ok; ++z)
          if (z == y || p.less(y, z)) ok = r[x] < r[z];
        some = some || ok;
      }
      if (!some) return false;
    }
  return true;
}

// ---------------------------------------------------------------- formulas

inline std::uint64_t up(double x) { return x <= 0 ? 0 : static_cast<std::uint64_t>(std::ceil(x)); }

inline std::uint64_t ref_r(std::uint64_t d) { return up(std::sqrt(std::log(double(d)))); }
inline std::uint64_t ref_l(std::uint64_t d, std::uint64_t r) {
  return up(euler_e * std::pow(euler_e * double(d) / (double(r) + 1.0), 1.0 + 1.0 / double(r)));
}
inline std::uint64_t ref_t(std::uint64_t d, std::uint64_t delta) { return up(std::log(4.0 * double(d) * double(delta))); }
inline std::uint64_t ref_genus_k(std::uint64_t g) { return g <= 1 ? 8 : 7 + up(std::sqrt(double(g) / std::log(double(g)))); }
inline std::uint64_t ref_caught_t(std::uint64_t n, std::uint64_t k) { return up(1.5 * double(k + 1) * std::log(double(n))); }
inline std::uint64_t ref_degenerate_target(std::uint64_t n, std::uint64_t k) {
  return std::max<std::uint64_t>(1, (k + 2) * up(2.0 * euler_e * std::log(double(std::max<std::uint64_t>(n, 1)))));
}
inline std::uint64_t ref_auto_d(std::uint64_t delta) { return up(100.0 * std::log(double(delta))); }

// ---------------------------------------------------------------- graphs

// Graph on n vertices whose edges are the set bits of `code` over the pairs
// (u, v), u < v, in lexicographic order.
inline graph graph_from_code(std::size_t n, std::uint64_t code) {
  std::vector<edge> es;
  std::size_t bit = 0;
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v, ++bit)
      if (code >> bit & 1U) es.emplace_back(u, v);
  return graph::from_edges(n, es);
}

// Lexicographically smallest adjacency code over all relabellings.
inline std::uint64_t canonical_code(const graph& g) {
  const std::size_t n = g.order();
  std::vector<vertex> perm(n);
  std::iota(perm.begin(), perm.end(), vertex{0});
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    std::size_t bit = 0;
    for (vertex u = 0; u < n; ++u)
      for (vertex v = u + 1; v < n; ++v, ++bit)
        if (g.adjacent(perm[u], perm[v])) code |= std::uint64_t{1} << bit;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// One graph per isomorphism class on n vertices (n <= 6).
inline std::vector<graph> graphs_up_to_iso(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::set<std::uint64_t> seen;
  std::vector<graph> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    const graph g = graph_from_code(n, code);
    if (seen.insert(canonical_code(g)).second) out.push_back(g);
  }
  return out;
}

// Connected components as sorted vertex lists, restricted to `keep`.
inline std::vector<std::vector<vertex>> components(const graph& g, const std::vector<char>& keep) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<vertex>> out;
  for (vertex s = 0; s < n; ++s) {
    if (!keep[s] || seen[s]) continue;
    std::vector<vertex> comp{s}, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const vertex v = stack.back();
      stack.pop_back();
      for (vertex w : g.neighbours(v))
        if (keep[w] && !seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// BFS layering from the lowest vertex of each component.
inline std::vector<std::uint32_t> bfs_layers(const graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> layer(n, ~0U);
  for (vertex s = 0; s < n; ++s) {
    if (layer[s] != ~0U) continue;
    layer[s] = 0;
    std::vector<vertex> queue{s};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (vertex w : g.neighbours(queue[i]))
        if (layer[w] == ~0U) {
          layer[w] = layer[queue[i]] + 1;
          queue.push_back(w);
        }
  }
  return layer;
}

inline std::size_t ref_degeneracy(const graph& g) {
  const std::size_t n = g.order();
  std::vector<char> gone(n, 0);
  std::vector<std::size_t> deg(n);
  for (vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::size_t worst = 0;
  for (std::size_t step = 0; step < n; ++step) {
    vertex best = 0;
    std::size_t low = n + 1;
    for (vertex v = 0; v < n; ++v)
      if (!gone[v] && deg[v] < low) {
        low = deg[v];
        best = v;
      }
    worst = std::max(worst, low);
    gone[best] = 1;
    for (vertex w : g.neighbours(best))
      if (!gone[w]) --deg[w];
  }
  return worst;
}

} // namespace boxlab::testing

#endif // BOXLAB_TESTS_SUPPORT_HPP
