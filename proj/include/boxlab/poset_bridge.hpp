#ifndef BOXLAB_POSET_BRIDGE_HPP
#define BOXLAB_POSET_BRIDGE_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "boxlab/certificate.hpp"
#include "boxlab/core/compose.hpp"
#include "boxlab/core/verify.hpp"
#include "boxlab/pipelines/degree.hpp"

namespace boxlab {

// Element (v, i) of the doubled poset has id v + i*n.
inline vertex doubled_id(vertex v, std::uint32_t i, std::size_t n) { return static_cast<vertex>(v + i * n); }

// (u,0) < (v,1) iff u = v or uv is an edge; nothing else is related.
inline poset graph_to_doubled_poset(const graph& g) {
  const std::size_t n = g.order();
  std::vector<edge> rel;
  for (vertex u = 0; u < n; ++u) {
    rel.emplace_back(doubled_id(u, 0, n), doubled_id(u, 1, n));
    for (vertex v : g.neighbours(u)) rel.emplace_back(doubled_id(u, 0, n), doubled_id(v, 1, n));
  }
  return poset::from_relations(2 * n, rel);
}

// Box of v in dimension i: [position of (v,0), position of (v,1)] in order i.
inline box_representation boxes_from_realizer(const graph& g, const realizer& r) {
  const std::size_t n = g.order();
  const auto report = verify_realizer(graph_to_doubled_poset(g), r);
  if (!report.ok()) throw structural_error("boxes_from_realizer: not a realizer of the doubled poset: " + report.summary());
  box_representation rep(n);
  for (const auto& order : r.orders) {
    const auto rank = order_ranks(order, 2 * n);
    box_representation::column c(n);
    for (vertex v = 0; v < n; ++v)
      c[v] = {static_cast<std::int64_t>(rank[doubled_id(v, 0, n)]), static_cast<std::int64_t>(rank[doubled_id(v, 1, n)])};
    rep.add_dim(std::move(c));
  }
  return rep;
}

// Two total orders per dimension: by decreasing left endpoint and by
// increasing right endpoint, ties by vertex id. They satisfy the Füredi–Kahn
// condition but need not be linear extensions.
inline std::vector<std::vector<vertex>> realizer_from_boxes(const poset& p, const box_representation& rep) {
  const std::size_t n = p.size();
  const auto report = verify_box_rep(comparability_graph(p), rep);
  if (!report.ok()) throw structural_error("realizer_from_boxes: boxes do not represent the comparability graph: " + report.summary());
  std::vector<std::vector<vertex>> orders;
  for (const auto& col : rep.columns()) {
    std::vector<vertex> by_lo(n), by_hi(n);
    std::iota(by_lo.begin(), by_lo.end(), vertex{0});
    std::iota(by_hi.begin(), by_hi.end(), vertex{0});
    std::stable_sort(by_lo.begin(), by_lo.end(), [&](vertex a, vertex b) { return col[a].lo > col[b].lo; });
    std::stable_sort(by_hi.begin(), by_hi.end(), [&](vertex a, vertex b) { return col[a].hi < col[b].hi; });
    orders.push_back(std::move(by_lo));
    orders.push_back(std::move(by_hi));
  }
  return orders;
}

// The linear extension that keeps `order` as far as possible: repeatedly take
// the earliest element of `order` all of whose predecessors are placed.
inline std::vector<vertex> to_linear_extension(const poset& p, std::span<const vertex> order) {
  const std::size_t n = p.size();
  const auto rank = order_ranks(order, n);
  std::vector<std::size_t> below(n, 0);
  for (vertex u = 0; u < n; ++u) p.above(u).for_each([&](std::size_t v) { ++below[v]; });
  std::set<std::pair<std::size_t, vertex>> ready;
  for (vertex v = 0; v < n; ++v)
    if (below[v] == 0) ready.emplace(rank[v], v);
  std::vector<vertex> out;
  out.reserve(n);
  while (!ready.empty()) {
    const vertex v = ready.begin()->second;
    ready.erase(ready.begin());
    out.push_back(v);
    p.above(v).for_each([&](std::size_t w) {
      if (--below[w] == 0) ready.emplace(rank[w], static_cast<vertex>(w));
    });
  }
  return out;
}

struct dimension_result {
  std::vector<std::vector<vertex>> orders;
  certificate cert;
};

// Boxes for the comparability graph from the degree pipeline, then two
// orders per dimension.
inline dimension_result dimension_pipeline(const poset& p, std::uint64_t seed) {
  const graph comp = comparability_graph(p);
  dimension_result out;
  out.cert = bounded_degree_rep(comp, seed);
  out.orders = realizer_from_boxes(p, out.cert.boxes);
  const auto report = verify_fk_realizer(p, out.orders);
  if (!report.ok()) throw structural_error("dimension_pipeline: orders failed the Füredi–Kahn check: " + report.summary());
  return out;
}

} // namespace boxlab

#endif // BOXLAB_POSET_BRIDGE_HPP
