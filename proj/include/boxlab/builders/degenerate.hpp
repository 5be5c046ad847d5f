#ifndef BOXLAB_BUILDERS_DEGENERATE_HPP
#define BOXLAB_BUILDERS_DEGENERATE_HPP

#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "boxlab/builders/cover.hpp"
#include "boxlab/builders/pair_elimination.hpp"
#include "boxlab/certificate.hpp"
#include "boxlab/core/random.hpp"
#include "boxlab/formulas.hpp"

namespace boxlab {

// Repeatedly removes a vertex of minimum remaining degree (lowest id on ties).
// removal_degree[i] is the degree of order[i] at the moment it was removed.
struct elimination {
  std::vector<vertex> order;
  std::vector<std::size_t> removal_degree;

  std::size_t degeneracy() const noexcept {
    std::size_t worst = 0;
    for (auto d : removal_degree) worst = std::max(worst, d);
    return worst;
  }
};

inline elimination min_degree_elimination(const graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, vertex>> queue;
  for (vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<char> gone(n, 0);
  elimination out;
  out.order.reserve(n);
  out.removal_degree.reserve(n);
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    gone[v] = 1;
    out.order.push_back(v);
    out.removal_degree.push_back(d);
    for (vertex w : g.neighbours(v))
      if (!gone[w]) {
        queue.erase({deg[w], w});
        queue.emplace(--deg[w], w);
      }
  }
  return out;
}

inline constexpr std::uint32_t degenerate_restarts = 8;
// Random rankings scored per dimension.
inline constexpr std::uint32_t degenerate_batch = 8;

// With a degeneracy ordering every vertex v has at most k later neighbours
// N+(v). A uniformly random ranking of V gives v the interval spanned by the
// ranks of {v} + N+(v); each edge uv (u earlier) has v in that set for u, so
// the dimension is an interval supergraph of G. The same holds for the earlier
// neighbours N-(v), and the batch alternates between the two. Each dimension is
// the best of a batch of such rankings and the layout of the busiest open pair,
// judged by newly separated non-edges. At most `trials` rankings are drawn per
// attempt.
inline certificate degenerate_rep(const graph& g, std::uint32_t k, std::uint64_t seed) {
  const std::size_t n = g.order();
  const auto elim = min_degree_elimination(g);
  const auto& order = elim.order;
  const std::size_t degeneracy = elim.degeneracy();
  if (degeneracy > k)
    throw parameter_error("degenerate_rep: graph is " + std::to_string(degeneracy) + "-degenerate, not " + std::to_string(k) +
                          "-degenerate");
  const std::uint64_t target = std::max<std::uint64_t>(1, formula::degenerate_target(n, k));
  const std::uint64_t trials = formula::degenerate_trials(n, k);

  certificate c;
  c.construction = "degenerate";
  c.seed = seed;
  c.params = {{"n", n}, {"k", k}, {"trials", trials}, {"batch", degenerate_batch}, {"restarts", degenerate_restarts}};
  c.target_d = target;
  if (g.is_complete()) {
    c.boxes = complete_representation(n);
    c.witness = {{"ordering", order}, {"attempts", 0}};
    return c;
  }

  std::vector<std::uint32_t> place(n);
  for (std::size_t i = 0; i < n; ++i) place[order[i]] = static_cast<std::uint32_t>(i);
  std::vector<std::vector<vertex>> later(n), earlier(n);
  for (vertex v = 0; v < n; ++v)
    for (vertex w : g.neighbours(v)) (place[w] > place[v] ? later : earlier)[v].push_back(w);

  seed_sequence seeds(seed);
  std::vector<std::int64_t> rank(n);
  std::vector<vertex> perm(n);
  for (std::uint32_t attempt = 0; attempt <= degenerate_restarts; ++attempt) {
    rng gen(seeds.next());
    nonedge_cover cover(g);
    box_representation rep(n);
    std::uint64_t drawn = 0, kept = 0;
    json jp = json::array();
    while (!cover.done() && rep.dims() <= target) {
      const vertex a = cover.busiest(), b0 = cover.busiest_partner(a);
      const vertex lo = std::min(a, b0), hi = std::max(a, b0);
      auto best = pair_layout_column(g, lo, hi);
      std::size_t best_gain = cover.gain(best);
      bool ranked = false;
      for (std::uint32_t j = 0; j < degenerate_batch && drawn < trials; ++j, ++drawn) {
        std::iota(perm.begin(), perm.end(), vertex{0});
        gen.shuffle(perm);
        for (std::size_t p = 0; p < n; ++p) rank[perm[p]] = static_cast<std::int64_t>(p);
        auto col = hull_column(j % 2 == 0 ? later : earlier, rank);
        const std::size_t gain = cover.gain(col);
        if (gain > best_gain) {
          best_gain = gain;
          best = std::move(col);
          ranked = true;
        }
      }
      cover.apply(best);
      rep.add_dim(std::move(best));
      if (ranked) ++kept;
      else jp.push_back(json::array({lo, hi}));
    }
    if (cover.done() && rep.dims() <= target) {
      c.boxes = std::move(rep);
      c.witness = {{"ordering", order}, {"attempts", attempt + 1}, {"permutation_dims", kept}, {"pair_dims", std::move(jp)}};
      return c;
    }
  }
  auto fb = pair_elimination_rep(g);
  c.boxes = std::move(fb.boxes);
  c.fallback = true;
  c.witness = {{"ordering", order}, {"attempts", degenerate_restarts + 1}, {"pairs", fb.witness["pairs"]}};
  return c;
}

} // namespace boxlab

#endif // BOXLAB_BUILDERS_DEGENERATE_HPP
