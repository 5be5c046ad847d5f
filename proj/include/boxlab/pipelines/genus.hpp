#ifndef BOXLAB_PIPELINES_GENUS_HPP
#define BOXLAB_PIPELINES_GENUS_HPP

#include <string>
#include <vector>

#include "boxlab/builders/caught_permutation.hpp"
#include "boxlab/builders/degenerate.hpp"
#include "boxlab/builders/pair_elimination.hpp"
#include "boxlab/builders/span_gadget.hpp"
#include "boxlab/builders/vertex_deletion.hpp"
#include "boxlab/certificate.hpp"
#include "boxlab/core/compose.hpp"
#include "boxlab/core/verify.hpp"
#include "boxlab/suitable.hpp"

namespace boxlab {

inline constexpr std::size_t genus_default_threshold = 10000;

struct genus_options {
  std::size_t threshold = genus_default_threshold;  // |X| below this: deletion branch
};

// Classification of V - X by the number of neighbours in X.
struct genus_classes {
  std::vector<vertex> y0;  // none
  std::vector<vertex> y;   // exactly one or two
  std::vector<vertex> z;   // three or more
};

inline genus_classes classify_by_cut(const graph& g, std::span<const vertex> x) {
  const auto in_x = vertex_mask(g.order(), x, "cut set");
  genus_classes out;
  for (vertex v = 0; v < g.order(); ++v) {
    if (in_x.test(v)) continue;
    const std::size_t k = degree_into(g, v, in_x);
    (k == 0 ? out.y0 : k <= 2 ? out.y : out.z).push_back(v);
  }
  return out;
}

// `rep_gx` represents G - X with its vertices in ascending id order.
inline certificate genus_rep(const graph& g, std::uint64_t genus, std::span<const vertex> x_in, const box_representation& rep_gx,
                             std::uint64_t seed, genus_options opt = {}) {
  const std::size_t n = g.order();
  std::vector<vertex> x(x_in.begin(), x_in.end());
  std::sort(x.begin(), x.end());
  const auto others = complement_vertices(n, x);
  if (rep_gx.vertices() != others.size())
    throw structural_error("genus_rep: representation of G - X has " + std::to_string(rep_gx.vertices()) + " vertices, expected " +
                           std::to_string(others.size()));
  {
    const auto report = verify_box_rep(g.induced(others), rep_gx);
    if (!report.ok()) throw structural_error("genus_rep: supplied representation of G - X is invalid: " + report.summary());
  }
  const std::uint64_t k = formula::genus_k(genus);
  certificate c;
  c.construction = "genus";
  c.seed = seed;
  c.params = {{"n", n}, {"g", genus}, {"k", k}, {"X_size", x.size()}, {"threshold", opt.threshold}, {"d_repGX", rep_gx.dims()}};
  json warnings = json::array();
  if (x.size() > 60 * genus) warnings.push_back("|X| exceeds 60g");

  if (x.size() < opt.threshold) {
    c.params["branch"] = "deletion";
    std::vector<vertex> current = others;
    box_representation rep = rep_gx;
    for (vertex v : x) {
      current.insert(std::upper_bound(current.begin(), current.end(), v), v);
      const auto idx = static_cast<vertex>(std::lower_bound(current.begin(), current.end(), v) - current.begin());
      rep = vertex_deletion_lift(rep, g.induced(current), idx, false);
    }
    c.boxes = std::move(rep);
    ensure_nonzero_dims(c.boxes);
    c.target_d = std::max<std::uint64_t>(1, rep_gx.dims() + x.size());
    c.witness = {{"X", x}, {"warnings", std::move(warnings)}};
  } else {
    c.params["branch"] = "suitable";
    seed_sequence seeds(seed);
    c.boxes = extend_full(rep_gx, others, n);

    // G2 = G<X, Y>, with X ordered by each permutation of a 3-suitable family.
    const auto cls = classify_by_cut(g, x);
    std::vector<vertex> side = cls.y;
    side.insert(side.end(), cls.y0.begin(), cls.y0.end());
    std::sort(side.begin(), side.end());
    const std::uint64_t suitable_seed = seeds.next();
    std::vector<std::vector<vertex>> perms;
    if (x.size() < 2) perms.push_back({0});
    else perms = build_suitable(static_cast<std::uint32_t>(x.size()), 3, suitable_seed).perms;
    json jperms = json::array();
    for (const auto& pi : perms) {
      std::vector<vertex> order;
      for (vertex q : pi) order.push_back(x[q]);
      c.boxes.append(span_gadget(spans_from_order(g, side, order), n));
      jperms.push_back(std::move(order));
    }

    // G3 = G<X + Z> from H = G[X + Z] split along the min-degree ordering.
    std::vector<vertex> xz = x;
    xz.insert(xz.end(), cls.z.begin(), cls.z.end());
    std::sort(xz.begin(), xz.end());
    const graph h = g.induced(xz);
    const auto elim = min_degree_elimination(h);
    std::size_t split = elim.order.size();
    for (std::size_t i = 0; i < elim.order.size(); ++i)
      if (elim.removal_degree[i] >= k) {
        split = i;
        break;
      }
    std::vector<vertex> a_loc(elim.order.begin(), elim.order.begin() + static_cast<std::ptrdiff_t>(split));
    std::vector<vertex> b_loc(elim.order.begin() + static_cast<std::ptrdiff_t>(split), elim.order.end());
    std::sort(a_loc.begin(), a_loc.end());
    std::sort(b_loc.begin(), b_loc.end());
    auto to_global = [&](const std::vector<vertex>& loc) {
      std::vector<vertex> out;
      for (vertex v : loc) out.push_back(xz[v]);
      return out;
    };
    const auto a_glob = to_global(a_loc), b_glob = to_global(b_loc);

    std::uint64_t target = rep_gx.dims() + perms.size() * 2;
    json pieces = json::object();
    if (!a_loc.empty()) {
      auto ra = degenerate_rep(h.induced(a_loc), static_cast<std::uint32_t>(k), seeds.next());
      c.boxes.append(extend_full(ra.boxes, a_glob, n));
      c.fallback = c.fallback || ra.fallback;
      target += *ra.target_d;
      pieces["A"] = {{"d", ra.d()}, {"target_d", *ra.target_d}, {"fallback", ra.fallback}};
    }
    if (!b_loc.empty()) {
      auto rb = pair_elimination_rep(h.induced(b_loc));
      c.boxes.append(extend_full(rb.boxes, b_glob, n));
      target += *rb.target_d;
      pieces["B"] = {{"d", rb.d()}, {"target_d", *rb.target_d}};
    }
    std::uint64_t t = 0;
    if (!a_loc.empty() && !b_loc.empty()) {
      auto rab = caught_permutation_rep(h, a_loc, b_loc, static_cast<std::uint32_t>(k), seeds.next());
      c.boxes.append(extend_full(rab.boxes, xz, n));
      t = rab.params["t"].get<std::uint64_t>();
      target += *rab.target_d;
      json gperms = json::array();
      for (const auto& sigma : rab.witness["permutations"]) {
        std::vector<vertex> order;
        for (const auto& v : sigma) order.push_back(xz[v.get<vertex>()]);
        gperms.push_back(std::move(order));
      }
      pieces["AB"] = {{"d", rab.d()}, {"target_d", *rab.target_d}, {"permutations", std::move(gperms)}};
    }
    c.params["p"] = perms.size();
    c.params["n_H"] = xz.size();
    c.params["A_size"] = a_loc.size();
    c.params["B_size"] = b_loc.size();
    c.params["t"] = t;
    c.target_d = std::max<std::uint64_t>(1, target);
    c.witness = {{"X", x},          {"Y", cls.y},          {"Y0", cls.y0}, {"Z", cls.z}, {"A", a_glob},
                 {"B", b_glob},     {"permutations", jperms}, {"pieces", std::move(pieces)}, {"warnings", std::move(warnings)}};
  }
  const auto report = verify_box_rep(g, c.boxes);
  if (!report.ok()) throw structural_error("genus_rep: assembled representation failed verification: " + report.summary());
  return c;
}

} // namespace boxlab

#endif // BOXLAB_PIPELINES_GENUS_HPP
