#ifndef BOXLAB_BUILDERS_VERTEX_DELETION_HPP
#define BOXLAB_BUILDERS_VERTEX_DELETION_HPP

#include <string>
#include <vector>

#include "boxlab/core/compose.hpp"
#include "boxlab/core/verify.hpp"

namespace boxlab {

// `rep` represents G - v with its vertices in ascending order of their ids in
// G. The result adds one dimension: v = [-4, 2], N(v) = [0, 8], the rest
// [4, 8]; v is universal in the old dimensions.
inline box_representation vertex_deletion_lift(const box_representation& rep, const graph& g, vertex v, bool check = true) {
  const std::size_t n = g.order();
  if (v >= n) throw structural_error("vertex_deletion_lift: vertex " + std::to_string(v) + " out of range");
  std::vector<vertex> others;
  others.reserve(n - 1);
  for (vertex u = 0; u < n; ++u)
    if (u != v) others.push_back(u);
  if (rep.vertices() != others.size())
    throw structural_error("vertex_deletion_lift: representation has " + std::to_string(rep.vertices()) + " vertices, expected " +
                           std::to_string(others.size()));
  if (check) {
    const auto report = verify_box_rep(g.induced(others), rep);
    if (!report.ok()) throw structural_error("vertex_deletion_lift: representation of G - v is invalid: " + report.summary());
  }
  box_representation out = extend_full(rep, others, n);
  box_representation::column c(n, interval{4, 8});
  for (vertex w : g.neighbours(v)) c[w] = {0, 8};
  c[v] = {-4, 2};
  out.add_dim(std::move(c));
  return out;
}

} // namespace boxlab

#endif // BOXLAB_BUILDERS_VERTEX_DELETION_HPP
