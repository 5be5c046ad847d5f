#ifndef BOXLAB_CORE_COMPOSE_HPP
#define BOXLAB_CORE_COMPOSE_HPP

#include <span>
#include <string>
#include <vector>

#include "boxlab/core/box.hpp"
#include "boxlab/core/graph.hpp"
#include "boxlab/core/poset.hpp"

namespace boxlab {

// Cartesian product: concatenates dimensions. The intersection graph of the
// result is the intersection of the inputs' intersection graphs.
inline box_representation product_compose(std::span<const box_representation> reps) {
  if (reps.empty()) throw structural_error("product_compose: no representations");
  box_representation out(reps.front().vertices());
  for (const auto& r : reps) {
    if (r.vertices() != out.vertices())
      throw structural_error("product_compose: vertex sets differ (" + std::to_string(r.vertices()) + " vs " +
                             std::to_string(out.vertices()) + ")");
    out.append(r);
  }
  return out;
}

inline box_representation product_compose(std::initializer_list<box_representation> reps) {
  return product_compose(std::span<const box_representation>(reps.begin(), reps.size()));
}

// G<X>: every pair with an endpoint outside X becomes an edge.
inline graph local_supergraph(const graph& g, std::span<const vertex> x) {
  const auto in_x = vertex_mask(g.order(), x, "local_supergraph");
  graph out = g;
  for (vertex u = 0; u < g.order(); ++u)
    for (vertex v = u + 1; v < g.order(); ++v)
      if (!in_x.test(u) || !in_x.test(v)) out.add_edge(u, v);
  return out;
}

// G<X,Y>: the only surviving non-edges are non-edges of G between X and Y.
inline graph bipartite_supergraph(const graph& g, std::span<const vertex> x, std::span<const vertex> y) {
  const auto in_x = vertex_mask(g.order(), x, "bipartite_supergraph X");
  const auto in_y = vertex_mask(g.order(), y, "bipartite_supergraph Y");
  if (in_x.intersects(in_y)) throw structural_error("bipartite_supergraph: X and Y overlap");
  graph out = g;
  for (vertex u = 0; u < g.order(); ++u)
    for (vertex v = u + 1; v < g.order(); ++v) {
      const bool across = (in_x.test(u) && in_y.test(v)) || (in_y.test(u) && in_x.test(v));
      if (!across) out.add_edge(u, v);
    }
  return out;
}

// Lifts a representation of some vertex set into 0..n-1: rep's vertex i is
// placed at placement[i], every other vertex gets the full-space box.
inline box_representation extend_full(const box_representation& rep, std::span<const vertex> placement, std::size_t n) {
  if (placement.size() != rep.vertices())
    throw structural_error("extend_full: placement covers " + std::to_string(placement.size()) + " of " +
                           std::to_string(rep.vertices()) + " vertices");
  (void)vertex_mask(n, placement, "extend_full placement");  // range and collision check
  box_representation out(n);
  for (const auto& col : rep.columns()) {
    box_representation::column c(n, interval::full());
    for (std::size_t i = 0; i < placement.size(); ++i) c[placement[i]] = col[i];
    out.add_dim(std::move(c));
  }
  return out;
}

// Adds the vertices of `extra` (ids rep.vertices() .. in order) as universal
// boxes; the common case of extending 0..m-1 by further vertices.
inline box_representation extend_full(const box_representation& rep, std::size_t extra) {
  std::vector<vertex> placement(rep.vertices());
  for (std::size_t i = 0; i < placement.size(); ++i) placement[i] = static_cast<vertex>(i);
  return extend_full(rep, placement, rep.vertices() + extra);
}

inline graph comparability_graph(const poset& p) {
  std::vector<edge> es;
  for (vertex u = 0; u < p.size(); ++u)
    p.above(u).for_each([&](std::size_t v) { es.emplace_back(u, static_cast<vertex>(v)); });
  return graph::from_edges(p.size(), es);
}

} // namespace boxlab

#endif // BOXLAB_CORE_COMPOSE_HPP
