#ifndef BOXLAB_BUILDERS_SPAN_GADGET_HPP
#define BOXLAB_BUILDERS_SPAN_GADGET_HPP

// Two-dimensional gadget separating one side A from an ordered side B.
//
// B-vertex at position b (1-based):  x = (-inf, 2b],   y = [2b, +inf)
// A-vertex with span (lo, hi):       x = [2lo-1, +inf), y = (-inf, 2hi+1]
// A-vertex without a span:           the point (2|B|, -2|B|)
// Everything else gets the full box.
//
// Both sides are cliques and an (a, b) pair meets iff lo <= b <= hi.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boxlab/core/box.hpp"
#include "boxlab/core/error.hpp"
#include "boxlab/core/graph.hpp"

namespace boxlab {

struct position_span {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
};

struct span_entry {
  vertex v = 0;
  std::optional<position_span> span;  // nullopt: no neighbour in B
};

struct span_gadget_spec {
  std::vector<vertex> order;      // B, first to last
  std::vector<span_entry> spans;  // A
};

inline box_representation span_gadget(const span_gadget_spec& spec, std::size_t n) {
  const auto nb = static_cast<std::int64_t>(spec.order.size());
  auto in_b = vertex_mask(n, spec.order, "span_gadget B");
  box_representation::column x(n, interval::full()), y(n, interval::full());
  for (std::size_t i = 0; i < spec.order.size(); ++i) {
    const auto b = static_cast<std::int64_t>(i) + 1;
    x[spec.order[i]] = {neg_inf, 2 * b};
    y[spec.order[i]] = {2 * b, pos_inf};
  }
  dyn_bitset in_a(n);
  for (const auto& e : spec.spans) {
    if (e.v >= n) throw structural_error("span_gadget: vertex " + std::to_string(e.v) + " out of range");
    if (in_b.test(e.v) || in_a.test(e.v)) throw structural_error("span_gadget: vertex " + std::to_string(e.v) + " listed twice");
    in_a.set(e.v);
    if (!e.span) {
      x[e.v] = interval::point(2 * nb);
      y[e.v] = interval::point(-2 * nb);
      continue;
    }
    const auto lo = static_cast<std::int64_t>(e.span->lo), hi = static_cast<std::int64_t>(e.span->hi);
    if (lo < 1 || hi > nb || lo > hi) throw structural_error("span_gadget: bad span for vertex " + std::to_string(e.v));
    x[e.v] = {2 * lo - 1, pos_inf};
    y[e.v] = {neg_inf, 2 * hi + 1};
  }
  box_representation rep(n);
  rep.add_dim(std::move(x));
  rep.add_dim(std::move(y));
  return rep;
}

// Spans of the given A-vertices with respect to their G-neighbours in `order`.
inline span_gadget_spec spans_from_order(const graph& g, std::span<const vertex> a, std::vector<vertex> order) {
  std::vector<std::uint32_t> pos(g.order(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<std::uint32_t>(i + 1);
  span_gadget_spec spec{std::move(order), {}};
  spec.spans.reserve(a.size());
  for (vertex v : a) {
    span_entry e{v, std::nullopt};
    for (vertex w : g.neighbours(v)) {
      const auto p = pos[w];
      if (p == 0) continue;
      if (!e.span) e.span = position_span{p, p};
      else {
        e.span->lo = std::min(e.span->lo, p);
        e.span->hi = std::max(e.span->hi, p);
      }
    }
    spec.spans.push_back(e);
  }
  return spec;
}

} // namespace boxlab

#endif // BOXLAB_BUILDERS_SPAN_GADGET_HPP
