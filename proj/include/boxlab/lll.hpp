#ifndef BOXLAB_LLL_HPP
#define BOXLAB_LLL_HPP

// Constructive counterparts of two Local Lemma existence results, realised
// with Moser–Tardos resampling: sample every variable independently, then
// repeatedly pick the first occurring bad event and resample only the
// variables it depends on. Outputs are verified before being returned.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "boxlab/core/error.hpp"
#include "boxlab/core/graph.hpp"
#include "boxlab/core/random.hpp"
#include "boxlab/suitable.hpp"

namespace boxlab {

// Vertex v belongs to class cls[v] in 0..k-1.
struct partition {
  std::uint32_t k = 0;
  std::vector<std::uint32_t> cls;

  std::vector<std::vector<vertex>> classes() const {
    std::vector<std::vector<vertex>> out(k);
    for (vertex v = 0; v < cls.size(); ++v) out[cls[v]].push_back(v);
    return out;
  }
};

struct resampling_stats {
  std::uint64_t resamplings = 0;
};

// Smallest admissible class count for the bounded-monochromatic partition:
// ((4d+4)^{1/d} e / d) * Delta^{1+1/d}.
inline double partition_class_bound(std::uint64_t max_degree, std::uint32_t d) {
  const double dd = d;
  return std::pow(4.0 * dd + 4.0, 1.0 / dd) * std::numbers::e / dd * std::pow(static_cast<double>(max_degree), 1.0 + 1.0 / dd);
}

// Largest number of neighbours of v sharing one class.
inline std::uint32_t max_class_load(const graph& g, const partition& p, vertex v, std::vector<std::uint32_t>& scratch) {
  std::uint32_t best = 0;
  for (vertex w : g.neighbours(v)) best = std::max(best, ++scratch[p.cls[w]]);
  for (vertex w : g.neighbours(v)) scratch[p.cls[w]] = 0;
  return best;
}

inline bool check_partition(const graph& g, const partition& p, std::uint32_t d) {
  if (p.cls.size() != g.order()) return false;
  for (auto c : p.cls)
    if (c >= p.k) return false;
  std::vector<std::uint32_t> scratch(p.k, 0);
  for (vertex v = 0; v < g.order(); ++v)
    if (max_class_load(g, p, v, scratch) > d) return false;
  return true;
}

struct partition_options {
  bool unsafe = false;  // skip the class-count precondition
  std::uint64_t resample_cap = 0; // 0: 10^4 * (number of bad events), saturated
};

// Partition into exactly k classes so that every vertex has at most d
// neighbours in each class.
inline partition partition_bounded_mono(const graph& g, std::uint32_t d, std::uint32_t k, std::uint64_t seed,
                                        partition_options opt = {}, resampling_stats* stats = nullptr) {
  const std::size_t delta = g.max_degree();
  if (d < 1) throw parameter_error("partition_bounded_mono: need d >= 1");
  if (k < 1) throw parameter_error("partition_bounded_mono: need k >= 1");
  if (!opt.unsafe && delta > 0) {
    const double bound = partition_class_bound(delta, d);
    if (!(k >= bound * (1.0 + bound_margin)))
      throw parameter_error("partition_bounded_mono: k=" + std::to_string(k) + " is below the admissible bound " +
                            std::to_string(bound) + " for d=" + std::to_string(d) +
                            " max degree=" + std::to_string(delta));
  }
  std::uint64_t cap = opt.resample_cap;
  if (cap == 0) {
    // events: (d+1)-subsets of neighbourhoods, n * C(Delta, d+1) at most
    const double events = static_cast<double>(g.order()) * detail::binomial(delta, d + 1);
    const double c = 1e4 * std::max(events, 1.0);
    cap = c >= 1e18 ? std::uint64_t{1000000000000000000ULL} : static_cast<std::uint64_t>(c);
  }

  rng gen(seed);
  partition p{k, std::vector<std::uint32_t>(g.order())};
  for (auto& c : p.cls) c = static_cast<std::uint32_t>(gen.below(k));

  // count[v*k + i] = |N(v) ∩ V_i|
  std::vector<std::uint32_t> count(static_cast<std::size_t>(g.order()) * k, 0);
  for (vertex v = 0; v < g.order(); ++v)
    for (vertex w : g.neighbours(v)) ++count[static_cast<std::size_t>(v) * k + p.cls[w]];

  std::set<vertex> dirty;
  for (vertex v = 0; v < g.order(); ++v) dirty.insert(v);
  std::uint64_t resamplings = 0;
  std::vector<vertex> subset;
  while (!dirty.empty()) {
    const vertex v = *dirty.begin();
    std::uint32_t bad = k;
    for (std::uint32_t i = 0; i < k; ++i)
      if (count[static_cast<std::size_t>(v) * k + i] > d) {
        bad = i;
        break;
      }
    if (bad == k) {
      dirty.erase(dirty.begin());
      continue;
    }
    if (++resamplings > cap) throw randomized_failure("partition_bounded_mono: resampling cap exceeded", resamplings - 1);
    // The occurring event: the d+1 lowest-indexed neighbours of v in class `bad`.
    subset.clear();
    for (vertex w : g.neighbours(v))
      if (p.cls[w] == bad) {
        subset.push_back(w);
        if (subset.size() == d + 1U) break;
      }
    for (vertex w : subset) {
      const std::uint32_t old = p.cls[w];
      const auto fresh = static_cast<std::uint32_t>(gen.below(k));
      if (fresh == old) continue;
      p.cls[w] = fresh;
      for (vertex x : g.neighbours(w)) {
        --count[static_cast<std::size_t>(x) * k + old];
        ++count[static_cast<std::size_t>(x) * k + fresh];
        dirty.insert(x);
      }
    }
  }
  if (stats) stats->resamplings = resamplings;
  if (!check_partition(g, p, d)) throw randomized_failure("partition_bounded_mono: output failed verification", resamplings);
  return p;
}

struct partition_params {
  std::uint32_t d = 0;
  std::uint32_t k = 0;
  bool clamped = false;
};

// d = ceil(100 ln Delta), k = ceil(3 Delta / d); when d >= Delta the trivial
// single-class partition is valid and (Delta, 1) is returned instead.
inline partition_params auto_params_partition(std::uint64_t max_degree) {
  if (max_degree < 2) throw parameter_error("auto_params_partition: need max degree >= 2");
  const auto d = static_cast<std::uint64_t>(std::ceil(100.0 * std::log(static_cast<double>(max_degree))));
  if (d >= max_degree) return {static_cast<std::uint32_t>(max_degree), 1, true};
  const std::uint64_t k = (3 * max_degree + d - 1) / d;
  return {static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(k), false};
}

// colours[i][w] in 0..l-1 for colouring i and vertex w (entries for vertices
// outside B are unused and zero). assignment[v] is the index of a colouring
// under which A-vertex v has at most r neighbours of every colour; vertices
// outside A hold npos.
struct colouring_family {
  static constexpr std::uint32_t npos = ~std::uint32_t{0};

  std::uint32_t t = 0;
  std::uint32_t l = 0;
  std::uint32_t r = 0;
  std::vector<std::vector<std::uint32_t>> colours;
  std::vector<std::uint32_t> assignment;
};

inline std::uint32_t colour_count_bound_ceil(double d, double r) {
  return static_cast<std::uint32_t>(std::ceil(std::numbers::e * std::pow(std::numbers::e * d / (r + 1.0), 1.0 + 1.0 / r)));
}

// l >= e (e d/(r+1))^{1+1/r}
inline double colour_count_bound(double d, double r) {
  return std::numbers::e * std::pow(std::numbers::e * d / (r + 1.0), 1.0 + 1.0 / r);
}

// t >= ln(4 d Delta)
inline double colouring_count_bound(double d, double max_b_degree) { return std::log(4.0 * d * max_b_degree); }

namespace detail {

// Largest multiplicity of a colour among N_B(v) under one colouring.
inline std::uint32_t max_colour_multiplicity(std::span<const vertex> nb, const std::vector<std::uint32_t>& colour,
                                             std::vector<std::uint32_t>& scratch) {
  scratch.clear();
  for (vertex w : nb) scratch.push_back(colour[w]);
  std::sort(scratch.begin(), scratch.end());
  std::uint32_t best = 0, run = 0;
  for (std::size_t i = 0; i < scratch.size(); ++i) {
    run = (i > 0 && scratch[i] == scratch[i - 1]) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

} // namespace detail

struct colouring_options {
  bool unsafe = false;
  std::uint32_t d_bound = 0;     // 0: max degree of an A-vertex into B
  std::uint32_t delta_bound = 0; // 0: max degree of a B-vertex into A
  std::uint64_t resample_cap = 0; // 0: 10^4 * |A|
};

// t colourings of B with l colours such that every A-vertex has a colouring
// in which no colour appears on more than r of its neighbours in B.
inline colouring_family family_colourings(const graph& g, std::span<const vertex> a, std::span<const vertex> b,
                                          std::uint32_t r, std::uint32_t l, std::uint32_t t, std::uint64_t seed,
                                          colouring_options opt = {}, resampling_stats* stats = nullptr) {
  const std::size_t n = g.order();
  const auto in_a = vertex_mask(n, a, "family_colourings A");
  const auto in_b = vertex_mask(n, b, "family_colourings B");
  if (in_a.intersects(in_b)) throw structural_error("family_colourings: A and B overlap");
  if (r < 1 || l < 1 || t < 1) throw parameter_error("family_colourings: r, l, t must be positive");

  std::vector<std::vector<vertex>> nb(n);
  std::uint32_t d_actual = 0, delta_actual = 0;
  for (vertex v : a) {
    for (vertex w : g.neighbours(v))
      if (in_b.test(w)) nb[v].push_back(w);
    d_actual = std::max<std::uint32_t>(d_actual, static_cast<std::uint32_t>(nb[v].size()));
  }
  for (vertex w : b) delta_actual = std::max<std::uint32_t>(delta_actual, static_cast<std::uint32_t>(degree_into(g, w, in_a)));
  const std::uint32_t d = opt.d_bound ? opt.d_bound : d_actual;
  const std::uint32_t delta = opt.delta_bound ? opt.delta_bound : delta_actual;
  if (d_actual > d || delta_actual > delta) throw parameter_error("family_colourings: degree bounds exceeded");
  // No event can occur when every A-vertex has at most r neighbours in B.
  if (!opt.unsafe && d_actual > r) {
    if (!(l >= colour_count_bound(d, r) * (1.0 + bound_margin)))
      throw parameter_error("family_colourings: l=" + std::to_string(l) + " below e(ed/(r+1))^{1+1/r}=" +
                            std::to_string(colour_count_bound(d, r)));
    if (!(t >= colouring_count_bound(d, delta) * (1.0 + bound_margin)))
      throw parameter_error("family_colourings: t=" + std::to_string(t) + " below ln(4 d Delta)=" +
                            std::to_string(colouring_count_bound(d, delta)));
  }

  rng gen(seed);
  colouring_family fam{t, l, r, std::vector<std::vector<std::uint32_t>>(t, std::vector<std::uint32_t>(n, 0)),
                       std::vector<std::uint32_t>(n, colouring_family::npos)};
  for (std::uint32_t i = 0; i < t; ++i)
    for (vertex w : b) fam.colours[i][w] = static_cast<std::uint32_t>(gen.below(l));

  // A-neighbours of each B vertex, to know whose events a resampling touches.
  std::vector<std::vector<vertex>> back(n);
  for (vertex v : a)
    for (vertex w : nb[v]) back[w].push_back(v);

  const std::uint64_t cap = opt.resample_cap ? opt.resample_cap : std::uint64_t{10000} * std::max<std::size_t>(a.size(), 1);
  std::set<vertex> dirty(a.begin(), a.end());
  std::vector<std::uint32_t> scratch;
  std::uint64_t resamplings = 0;
  while (!dirty.empty()) {
    const vertex v = *dirty.begin();
    std::uint32_t good = colouring_family::npos;
    for (std::uint32_t i = 0; i < t && good == colouring_family::npos; ++i)
      if (detail::max_colour_multiplicity(nb[v], fam.colours[i], scratch) <= r) good = i;
    if (good != colouring_family::npos) {
      dirty.erase(dirty.begin());
      continue;
    }
    if (++resamplings > cap) throw randomized_failure("family_colourings: resampling cap exceeded", resamplings - 1);
    for (std::uint32_t i = 0; i < t; ++i)
      for (vertex w : nb[v]) fam.colours[i][w] = static_cast<std::uint32_t>(gen.below(l));
    for (vertex w : nb[v])
      for (vertex x : back[w]) dirty.insert(x);
  }
  for (vertex v : a)
    for (std::uint32_t i = 0; i < t; ++i)
      if (detail::max_colour_multiplicity(nb[v], fam.colours[i], scratch) <= r) {
        fam.assignment[v] = i;
        break;
      }
  for (vertex v : a)
    if (fam.assignment[v] == colouring_family::npos)
      throw randomized_failure("family_colourings: output failed verification", resamplings);
  if (stats) stats->resamplings = resamplings;
  return fam;
}

// Re-checks the certified index of every A-vertex.
inline bool check_colouring_family(const graph& g, std::span<const vertex> a, std::span<const vertex> b,
                                   const colouring_family& fam) {
  const auto in_b = vertex_mask(g.order(), b);
  std::vector<std::uint32_t> scratch;
  for (vertex v : a) {
    const auto i = fam.assignment.at(v);
    if (i >= fam.t) return false;
    std::vector<vertex> nb;
    for (vertex w : g.neighbours(v))
      if (in_b.test(w)) nb.push_back(w);
    for (vertex w : nb)
      if (fam.colours[i][w] >= fam.l) return false;
    if (detail::max_colour_multiplicity(nb, fam.colours[i], scratch) > fam.r) return false;
  }
  return true;
}

} // namespace boxlab

#endif // BOXLAB_LLL_HPP
