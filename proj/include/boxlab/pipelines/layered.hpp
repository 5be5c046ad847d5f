#ifndef BOXLAB_PIPELINES_LAYERED_HPP
#define BOXLAB_PIPELINES_LAYERED_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "boxlab/builders/treewidth.hpp"
#include "boxlab/certificate.hpp"
#include "boxlab/core/compose.hpp"
#include "boxlab/core/verify.hpp"
#include "boxlab/formulas.hpp"

namespace boxlab {

// layer[v] is the index of the layer holding v. Valid iff every edge joins
// equal or consecutive layers.
inline void validate_layering(const graph& g, std::span<const std::uint32_t> layer) {
  if (layer.size() != g.order())
    throw structural_error("layering lists " + std::to_string(layer.size()) + " vertices, graph has " + std::to_string(g.order()));
  for (auto [u, v] : g.edges()) {
    const auto lu = layer[u], lv = layer[v];
    if ((lu > lv ? lu - lv : lv - lu) > 1)
      throw structural_error("layering: edge " + std::to_string(u) + " " + std::to_string(v) + " spans layers " + std::to_string(lu) +
                             " and " + std::to_string(lv));
  }
}

// Largest |bag ∩ layer|.
inline std::size_t layered_width(const tree_decomposition& td, std::span<const std::uint32_t> layer) {
  std::size_t best = 0;
  std::vector<std::size_t> count;
  for (const auto& bag : td.bags) {
    std::vector<std::uint32_t> ls;
    for (vertex v : bag) ls.push_back(layer[v]);
    std::sort(ls.begin(), ls.end());
    for (std::size_t i = 0, j = 0; i < ls.size(); i = j) {
      while (j < ls.size() && ls[j] == ls[i]) ++j;
      best = std::max(best, j - i);
    }
  }
  return best;
}

// Layers j, j+1 for j = i, i+3, i+6, ...
inline std::vector<std::uint32_t> group_parts(std::uint32_t group, std::uint32_t layers) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t j = group; j < layers; j += 3) out.push_back(j);
  return out;
}

// Decomposition of G[vs] (vs ascending, relabelled to 0..|vs|-1) made from
// the restriction of td to each part, with the part trees chained together.
inline tree_decomposition group_decomposition(const tree_decomposition& td, std::span<const std::uint32_t> layer,
                                              std::span<const vertex> vs, std::span<const std::uint32_t> parts) {
  std::vector<std::int64_t> local(layer.size(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = static_cast<std::int64_t>(i);
  tree_decomposition out;
  std::int64_t previous_root = -1;
  for (auto j : parts) {
    const auto offset = static_cast<std::uint32_t>(out.bags.size());
    bool nonempty = false;
    for (const auto& bag : td.bags) {
      std::vector<vertex> b;
      for (vertex v : bag)
        if (layer[v] == j || layer[v] == j + 1) b.push_back(static_cast<vertex>(local[v]));
      nonempty = nonempty || !b.empty();
      out.bags.push_back(std::move(b));
    }
    if (!nonempty) {
      out.bags.resize(offset);
      continue;
    }
    for (auto [x, y] : td.edges) out.edges.emplace_back(x + offset, y + offset);
    if (previous_root >= 0) out.edges.emplace_back(static_cast<std::uint32_t>(previous_root), offset);
    previous_root = offset;
  }
  return out;
}

// Three groups, each the disjoint union of G[V_j + V_{j+1}] over j = i mod 3,
// get D_sub dimensions apiece (padded with full intervals), plus one dimension
// with [2i, 2i+2] for layer i.
inline certificate layered_tw_rep(const graph& g, const tree_decomposition& td, std::span<const std::uint32_t> layer) {
  validate_decomposition(g, td);
  validate_layering(g, layer);
  const std::size_t n = g.order();
  const std::size_t ltw = std::max<std::size_t>(1, layered_width(td, layer));
  const std::uint32_t layers = n == 0 ? 0 : *std::max_element(layer.begin(), layer.end()) + 1;

  std::vector<box_representation> group_reps;
  json groups = json::array();
  std::size_t d_sub = 0;
  for (std::uint32_t i = 0; i < 3; ++i) {
    const auto parts = group_parts(i, layers);
    std::vector<vertex> vs;
    for (vertex v = 0; v < n; ++v)
      for (auto j : parts)
        if (layer[v] == j || layer[v] == j + 1) {
          vs.push_back(v);
          break;
        }
    json info = {{"group", i}, {"parts", parts}, {"vertices", vs.size()}};
    if (vs.empty()) {
      group_reps.emplace_back(n);
      info["d"] = 0;
      info["width"] = 0;
      groups.push_back(std::move(info));
      continue;
    }
    const auto sub_td = group_decomposition(td, layer, vs, parts);
    auto sub = treewidth_rep(g.induced(vs), sub_td);
    info["d"] = sub.d();
    info["width"] = sub_td.width();
    info["target_d"] = *sub.target_d;
    d_sub = std::max(d_sub, sub.d());
    group_reps.push_back(extend_full(sub.boxes, vs, n));
    groups.push_back(std::move(info));
  }

  certificate c;
  c.construction = "layered_treewidth";
  c.boxes = box_representation(n);
  for (auto& r : group_reps) {
    c.boxes.append(r);
    for (std::size_t pad = r.dims(); pad < d_sub; ++pad) c.boxes.add_dim(box_representation::column(n, interval::full()));
  }
  box_representation::column last(n);
  for (vertex v = 0; v < n; ++v) last[v] = {2 * static_cast<std::int64_t>(layer[v]), 2 * static_cast<std::int64_t>(layer[v]) + 2};
  c.boxes.add_dim(std::move(last));
  c.params = {{"n", n}, {"ltw", ltw}, {"layers", layers}, {"D_sub", d_sub}};
  c.target_d = formula::ltw_target(ltw);
  c.witness = {{"groups", std::move(groups)}};

  const auto report = verify_box_rep(g, c.boxes);
  if (!report.ok()) throw structural_error("layered_tw_rep: assembled representation failed verification: " + report.summary());
  return c;
}

} // namespace boxlab

#endif // BOXLAB_PIPELINES_LAYERED_HPP
