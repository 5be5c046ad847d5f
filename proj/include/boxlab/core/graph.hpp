#ifndef BOXLAB_CORE_GRAPH_HPP
#define BOXLAB_CORE_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "boxlab/core/bitset.hpp"
#include "boxlab/core/error.hpp"

namespace boxlab {

using vertex = std::uint32_t;
using edge = std::pair<vertex, vertex>;

// Simple undirected graph on 0..n-1. Keeps both a bitset row per vertex (O(1)
// adjacency tests) and sorted neighbour lists.
class graph {
public:
  graph() = default;
  explicit graph(std::size_t n) : rows_(n, dyn_bitset(n)), adj_(n) {}

  // Throws structural_error on loops, out-of-range endpoints or repeated edges.
  static graph from_edges(std::size_t n, std::span<const edge> edges) {
    graph g(n);
    for (auto [u, v] : edges) {
      g.check_pair(u, v);
      if (g.rows_[u].test(v))
        throw structural_error("repeated edge " + std::to_string(u) + " " + std::to_string(v));
      g.rows_[u].set(v);
      g.rows_[v].set(u);
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
      ++g.m_;
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    return g;
  }

  static graph complete(std::size_t n) {
    graph g(n);
    for (vertex u = 0; u < n; ++u)
      for (vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t size() const noexcept { return m_; }

  bool adjacent(vertex u, vertex v) const noexcept { return rows_[u].test(v); }
  const dyn_bitset& row(vertex v) const noexcept { return rows_[v]; }
  std::span<const vertex> neighbours(vertex v) const noexcept { return adj_[v]; }
  std::size_t degree(vertex v) const noexcept { return adj_[v].size(); }

  std::size_t max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& list : adj_) d = std::max(d, list.size());
    return d;
  }

  bool is_complete() const noexcept {
    const std::size_t n = order();
    return 2 * m_ == n * (n == 0 ? 0 : n - 1);
  }

  // Idempotent; keeps neighbour lists sorted.
  void add_edge(vertex u, vertex v) {
    check_pair(u, v);
    if (rows_[u].test(v)) return;
    rows_[u].set(v);
    rows_[v].set(u);
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
  }

  std::vector<edge> edges() const {
    std::vector<edge> out;
    out.reserve(m_);
    for (vertex u = 0; u < order(); ++u)
      for (vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  // Subgraph induced by `keep`, relabelled so that keep[i] becomes vertex i.
  graph induced(std::span<const vertex> keep) const {
    std::vector<std::int64_t> local(order(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if (keep[i] >= order()) throw structural_error("induced: vertex out of range");
      if (local[keep[i]] >= 0) throw structural_error("induced: repeated vertex");
      local[keep[i]] = static_cast<std::int64_t>(i);
    }
    std::vector<edge> es;
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (vertex w : adj_[keep[i]])
        if (local[w] > static_cast<std::int64_t>(i)) es.emplace_back(static_cast<vertex>(i), static_cast<vertex>(local[w]));
    return from_edges(keep.size(), es);
  }

  bool operator==(const graph& o) const { return rows_ == o.rows_; }

private:
  void check_pair(vertex u, vertex v) const {
    if (u >= order() || v >= order())
      throw structural_error("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw structural_error("loop at vertex " + std::to_string(u));
  }

  std::vector<dyn_bitset> rows_;
  std::vector<std::vector<vertex>> adj_;
  std::size_t m_ = 0;
};

// Characteristic vector of a vertex list; throws on out-of-range or repeats.
inline dyn_bitset vertex_mask(std::size_t n, std::span<const vertex> vs, const char* what = "vertex set") {
  dyn_bitset mask(n);
  for (vertex v : vs) {
    if (v >= n) throw structural_error(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
    if (mask.test(v)) throw structural_error(std::string(what) + ": vertex " + std::to_string(v) + " repeated");
    mask.set(v);
  }
  return mask;
}

inline std::vector<vertex> mask_vertices(const dyn_bitset& mask) {
  std::vector<vertex> out;
  mask.for_each([&](std::size_t v) { out.push_back(static_cast<vertex>(v)); });
  return out;
}

inline std::vector<vertex> complement_vertices(std::size_t n, std::span<const vertex> vs) {
  auto mask = vertex_mask(n, vs);
  mask.flip();
  return mask_vertices(mask);
}

// Number of neighbours of v inside `mask`.
inline std::size_t degree_into(const graph& g, vertex v, const dyn_bitset& mask) {
  std::size_t c = 0;
  for (vertex w : g.neighbours(v)) c += mask.test(w) ? 1 : 0;
  return c;
}

} // namespace boxlab

#endif // BOXLAB_CORE_GRAPH_HPP
