#ifndef BOXLAB_PIPELINES_DEGREE_HPP
#define BOXLAB_PIPELINES_DEGREE_HPP

#include <optional>
#include <string>
#include <vector>

#include "boxlab/builders/bipartite_suitable.hpp"
#include "boxlab/builders/degenerate.hpp"
#include "boxlab/certificate.hpp"
#include "boxlab/core/compose.hpp"
#include "boxlab/core/verify.hpp"
#include "boxlab/lll.hpp"

namespace boxlab {

// Per-class dimension targets (a_i, b_i) for class sizes |V_i|: the
// degenerate target of G[V_i] with degeneracy d, and the bipartite target
// when both V_i and its complement are non-empty.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> degree_piece_targets(std::span<const std::uint64_t> class_sizes,
                                                                                  std::uint64_t n, std::uint64_t d,
                                                                                  std::uint64_t delta) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (auto size : class_sizes) {
    const std::uint64_t a = size == 0 ? 0 : std::max<std::uint64_t>(1, formula::degenerate_target(size, d));
    const std::uint64_t b = (size == 0 || size == n) ? 0 : bipartite_params::from(d, delta).target;
    out.emplace_back(a, b);
  }
  return out;
}

struct degree_options {
  std::optional<partition_params> params;  // overrides auto_params_partition
  bool unsafe = false;                     // skip the partition class-count precondition
};

// Every vertex of G has at most Delta neighbours. G is the intersection over
// classes V_i of G<V_i> and G<V_i, V - V_i>.
inline certificate bounded_degree_rep(const graph& g, std::uint64_t seed, degree_options opt = {}) {
  const std::size_t n = g.order();
  const std::size_t delta = g.max_degree();
  certificate c;
  c.construction = "degree";
  c.seed = seed;
  c.params = {{"n", n}, {"Delta", delta}};

  if (g.is_complete() || delta <= 1) {
    // Components are single vertices or edges: one point per component.
    box_representation::column col(n);
    for (vertex v = 0; v < n; ++v) {
      vertex rep_v = v;
      if (!g.is_complete() && g.degree(v) == 1) rep_v = std::min(v, g.neighbours(v)[0]);
      col[v] = interval::point(g.is_complete() ? 0 : 2 * static_cast<std::int64_t>(rep_v));
    }
    c.boxes = box_representation(n);
    c.boxes.add_dim(std::move(col));
    c.params["short_circuit"] = g.is_complete() ? "complete" : "max_degree_le_1";
    c.target_d = 1;
    return c;
  }

  const partition_params pp = opt.params ? *opt.params : auto_params_partition(delta);
  c.params["d"] = pp.d;
  c.params["k"] = pp.k;
  c.params["clamped"] = pp.clamped;
  if (opt.unsafe) c.params["unsafe"] = true;

  seed_sequence seeds(seed);
  const std::uint64_t partition_seed = seeds.next();
  partition part;
  if (pp.k == 1) part = partition{1, std::vector<std::uint32_t>(n, 0)};
  else part = partition_bounded_mono(g, pp.d, pp.k, partition_seed, {opt.unsafe, 0});
  if (!check_partition(g, part, pp.d)) throw structural_error("bounded_degree_rep: partition check failed");

  const auto classes = part.classes();
  std::vector<std::uint64_t> sizes;
  for (const auto& cl : classes) sizes.push_back(cl.size());
  const auto targets = degree_piece_targets(sizes, n, pp.d, delta);

  c.boxes = box_representation(n);
  json pieces = json::array();
  std::uint64_t target = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& vi = classes[i];
    const std::uint64_t s1 = seeds.next(), s2 = seeds.next();
    json piece = {{"class", i}, {"size", vi.size()}};
    target += targets[i].first + targets[i].second;
    if (vi.empty()) {
      pieces.push_back(std::move(piece));
      continue;
    }
    auto inner = degenerate_rep(g.induced(vi), pp.d, s1);
    c.boxes.append(extend_full(inner.boxes, vi, n));
    c.fallback = c.fallback || inner.fallback;
    piece["degenerate"] = {{"d", inner.d()}, {"target_d", *inner.target_d}, {"fallback", inner.fallback}, {"seed", s1}};
    if (vi.size() < n) {
      const auto rest = complement_vertices(n, vi);
      auto cross = bipartite_suitable_rep(g, rest, vi, pp.d, delta, s2);
      c.boxes.append(cross.boxes);
      piece["bipartite"] = {{"d", cross.d()}, {"target_d", *cross.target_d}, {"blocks", cross.witness["blocks"]},
                            {"p_max", cross.witness["p_max"]}, {"seed", s2}};
      if (!c.params.contains("bipartite")) c.params["bipartite"] = cross.params;
    }
    pieces.push_back(std::move(piece));
  }
  ensure_nonzero_dims(c.boxes);
  json piece_targets = json::array();
  for (auto [a, b] : targets) piece_targets.push_back(json::array({a, b}));
  c.params["piece_targets"] = std::move(piece_targets);
  c.target_d = std::max<std::uint64_t>(1, target);
  c.witness = {{"partition", part.cls}, {"pieces", std::move(pieces)}};

  const auto report = verify_box_rep(g, c.boxes);
  if (!report.ok()) throw structural_error("bounded_degree_rep: assembled representation failed verification: " + report.summary());
  return c;
}

} // namespace boxlab

#endif // BOXLAB_PIPELINES_DEGREE_HPP
