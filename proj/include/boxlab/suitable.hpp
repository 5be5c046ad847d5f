#ifndef BOXLAB_SUITABLE_HPP
#define BOXLAB_SUITABLE_HPP

// Scrambling set families and k-suitable permutation families.
//
// A family of permutations of an n-set is k-suitable when, for every k-subset
// S and every x in S, some permutation ranks x ahead of the rest of S. The
// builder follows the scrambling-set construction: pick a (k-1)-scrambling
// family S_1..S_M of subsets of [s], give every element a distinct code
// Q_a within [M], and derive s orders from the codes. Each order is a
// lexicographic order on codes whose per-coordinate polarity is chosen by
// membership of the order index in S_j.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "boxlab/core/error.hpp"
#include "boxlab/core/graph.hpp"
#include "boxlab/core/random.hpp"

namespace boxlab {

struct scrambling_family {
  std::uint32_t s = 0;                        // ground set is 1..s
  std::uint32_t t = 0;                        // scrambling order
  std::vector<std::vector<std::uint32_t>> sets; // each a subset of 1..s
};

enum class suitable_route { scrambling, rotations };

inline const char* to_string(suitable_route r) { return r == suitable_route::scrambling ? "scrambling" : "rotations"; }

struct permutation_family {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  // perms[i] lists the elements 0..n-1 from first to last.
  std::vector<std::vector<vertex>> perms;

  suitable_route route = suitable_route::rotations;
  std::uint32_t ground = 0;    // s of the scrambling family (== perms.size())
  std::uint32_t code_sets = 0; // M, number of scrambling sets

  std::size_t size() const noexcept { return perms.size(); }

  std::vector<std::vector<std::uint32_t>> ranks() const {
    std::vector<std::vector<std::uint32_t>> out(perms.size(), std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < perms.size(); ++i)
      for (std::uint32_t pos = 0; pos < n; ++pos) out[i][perms[i][pos]] = pos;
    return out;
  }
};

namespace detail {

// Calls f(combo) for every size-k subset of 0..n-1 in lexicographic order;
// stops early when f returns false. Returns false iff stopped early.
template <class F>
bool for_each_combination(std::uint32_t n, std::uint32_t k, F&& f) {
  if (k > n) return true;
  std::vector<std::uint32_t> c(k);
  std::iota(c.begin(), c.end(), 0U);
  while (true) {
    if (!f(c)) return false;
    std::int64_t i = static_cast<std::int64_t>(k) - 1;
    while (i >= 0 && c[i] == n - k + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) return true;
    ++c[i];
    for (auto j = static_cast<std::size_t>(i) + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

inline double log_binomial(double m, double t) {
  if (t > m) return -std::numeric_limits<double>::infinity();
  return std::lgamma(m + 1) - std::lgamma(t + 1) - std::lgamma(m - t + 1);
}

inline double binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0.0;
  return std::exp(log_binomial(static_cast<double>(n), static_cast<double>(k)));
}

} // namespace detail

// True iff every Venn cell over every at-most-t subfamily is non-empty.
inline bool verify_scrambling(const scrambling_family& f) {
  const auto r = static_cast<std::uint32_t>(f.sets.size());
  // pattern[e] = membership bits of element e over the sets; we check cells
  // over subfamilies of exactly min(t, r) sets, which implies all smaller ones.
  std::vector<std::vector<bool>> member(f.s + 1, std::vector<bool>(r, false));
  for (std::uint32_t i = 0; i < r; ++i)
    for (auto e : f.sets[i]) {
      if (e < 1 || e > f.s) return false;
      member[e][i] = true;
    }
  const std::uint32_t width = std::min(f.t, r);
  if (width == 0) return f.s >= 1;  // only the empty subfamily: its cell is [s]
  if (width > 20) throw parameter_error("verify_scrambling: subfamily width too large");
  std::vector<char> seen(std::size_t{1} << width);
  return detail::for_each_combination(r, width, [&](const std::vector<std::uint32_t>& combo) {
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t distinct = 0;
    for (std::uint32_t e = 1; e <= f.s; ++e) {
      std::size_t pattern = 0;
      for (std::uint32_t b = 0; b < width; ++b) pattern |= static_cast<std::size_t>(member[e][combo[b]]) << b;
      if (!seen[pattern]) {
        seen[pattern] = 1;
        ++distinct;
      }
    }
    return distinct == seen.size();
  });
}

// Left-hand side of 2^t C(m,t) (1-2^-t)^s < 1, the condition under which a
// uniformly random m-family of subsets of [s] is t-scrambling with positive
// probability.
inline double scrambling_claim_lhs(std::uint32_t s, std::uint32_t t, std::uint32_t m) {
  const double log_lhs = t * std::log(2.0) + detail::log_binomial(m, t) + s * std::log1p(-std::ldexp(1.0, -static_cast<int>(t)));
  return std::exp(log_lhs);
}

// Safety margin applied to every transcendental bound check.
inline constexpr double bound_margin = 1e-9;

inline scrambling_family build_scrambling(std::uint32_t s, std::uint32_t t, std::uint32_t m, std::uint64_t seed) {
  if (t < 1 || s < t) throw parameter_error("build_scrambling: need s >= t >= 1");
  if (m < 1) throw parameter_error("build_scrambling: need m >= 1");
  const double lhs = scrambling_claim_lhs(s, t, m);
  if (!(lhs * (1.0 + bound_margin) < 1.0))
    throw parameter_error("build_scrambling: 2^t C(m,t) (1-2^-t)^s = " + std::to_string(lhs) + " is not below 1 for s=" +
                          std::to_string(s) + " t=" + std::to_string(t) + " m=" + std::to_string(m));
  rng gen(seed);
  const std::uint64_t cap = retry_cap();
  for (std::uint64_t attempt = 1; attempt <= cap; ++attempt) {
    scrambling_family f{s, t, std::vector<std::vector<std::uint32_t>>(m)};
    for (auto& set : f.sets)
      for (std::uint32_t e = 1; e <= s; ++e)
        if (gen.coin()) set.push_back(e);
    if (verify_scrambling(f)) return f;
  }
  throw randomized_failure("build_scrambling: no t-scrambling family found", cap);
}

// Constructive lower bound floor((t/2e) e^{s/(t 2^t)}) on the largest
// t-scrambling family over [s].
inline std::uint32_t scrambling_size_bound(std::uint32_t s, std::uint32_t t) {
  const double v = (t / (2.0 * std::numbers::e)) * std::exp(s / (t * std::ldexp(1.0, static_cast<int>(t))));
  return v >= 4e9 ? 4000000000U : static_cast<std::uint32_t>(std::floor(v));
}

inline permutation_family rotation_family(std::uint32_t n, std::uint32_t k) {
  permutation_family f;
  f.n = n;
  f.k = k;
  f.route = suitable_route::rotations;
  for (std::uint32_t start = 0; start < n; ++start) {
    std::vector<vertex> p(n);
    for (std::uint32_t i = 0; i < n; ++i) p[i] = (start + i) % n;
    f.perms.push_back(std::move(p));
  }
  f.ground = n;
  return f;
}

namespace detail {

inline permutation_family suitable_from_scrambling(std::uint32_t n, std::uint32_t k, const scrambling_family& sf) {
  const auto code_sets = static_cast<std::uint32_t>(sf.sets.size());
  if (code_sets > 63) throw parameter_error("build_suitable: code length exceeds 63 bits");
  if (n > 1 && code_sets < 64 && (std::uint64_t{1} << code_sets) < n)
    throw parameter_error("build_suitable: not enough codes");
  // in_set[j][i]: order index i (1-based) belongs to S_{j+1}.
  std::vector<std::vector<bool>> in_set(code_sets, std::vector<bool>(sf.s + 1, false));
  for (std::uint32_t j = 0; j < code_sets; ++j)
    for (auto e : sf.sets[j]) in_set[j][e] = true;

  permutation_family f;
  f.n = n;
  f.k = k;
  f.route = suitable_route::scrambling;
  f.ground = sf.s;
  f.code_sets = code_sets;
  std::vector<std::uint64_t> key(n);
  for (std::uint32_t i = 1; i <= sf.s; ++i) {
    // Code Q_a = binary digits of a; coordinate j (1-based) is the j-th most
    // significant key bit. Key bit 0 means "comes first" when codes first
    // differ at j: members of Q come first iff i is in S_j.
    for (std::uint32_t a = 0; a < n; ++a) {
      std::uint64_t kv = 0;
      for (std::uint32_t j = 0; j < code_sets; ++j) {
        const bool in_code = (a >> j) & 1U;
        const bool bit = in_set[j][i] ? !in_code : in_code;
        kv |= static_cast<std::uint64_t>(bit) << (code_sets - 1 - j);
      }
      key[a] = kv;
    }
    std::vector<vertex> order(n);
    std::iota(order.begin(), order.end(), vertex{0});
    std::sort(order.begin(), order.end(), [&](vertex x, vertex y) { return key[x] < key[y]; });
    f.perms.push_back(std::move(order));
  }
  return f;
}

} // namespace detail

// Builds a k-suitable family of permutations of 0..n-1. The scrambling route
// is used unless the plain rotation family (always k-suitable, n members) is
// no larger.
inline permutation_family build_suitable(std::uint32_t n, std::uint32_t k, std::uint64_t seed) {
  if (n < 2) throw parameter_error("build_suitable: need n >= 2");
  if (k < 2) throw parameter_error("build_suitable: need k >= 2");
  const std::uint32_t k_eff = std::min(k, n);
  const std::uint32_t t = k_eff - 1;
  std::uint32_t bits = 0;
  while ((std::uint64_t{1} << bits) < n) ++bits;

  std::uint32_t s = t;
  while (scrambling_size_bound(s, t) < bits) ++s;
  if (s >= n) {
    auto f = rotation_family(n, k);
    return f;
  }
  const std::uint32_t m = scrambling_size_bound(s, t);
  const auto sf = build_scrambling(s, t, m, seed);
  auto f = detail::suitable_from_scrambling(n, k_eff, sf);
  f.k = k;
  return f;
}

// Upper bound k 2^k log log n on the size of the family (natural logs).
inline double suitable_size_bound(std::uint32_t n, std::uint32_t k) {
  return k * std::ldexp(1.0, static_cast<int>(k)) * std::log(std::log(static_cast<double>(n)));
}

struct exhaustive_mode {};
struct sampled_mode {
  std::uint64_t trials = 1000000;
  std::uint64_t seed = 0;
};

inline constexpr double exhaustive_budget = 1e8;

// Exhaustive check of every (S, x) requirement.
inline bool verify_suitable(const permutation_family& f, exhaustive_mode) {
  const std::uint32_t n = f.n, k = f.k;
  if (k > n) return true;
  if (detail::binomial(n, k) * k > exhaustive_budget)
    throw parameter_error("verify_suitable: C(n,k)*k exceeds the exhaustive budget");
  const auto rk = f.ranks();
  std::vector<char> first(k);
  return detail::for_each_combination(n, k, [&](const std::vector<std::uint32_t>& combo) {
    std::fill(first.begin(), first.end(), 0);
    std::uint32_t hit = 0;
    for (const auto& r : rk) {
      std::uint32_t best = 0;
      for (std::uint32_t i = 1; i < k; ++i)
        if (r[combo[i]] < r[combo[best]]) best = i;
      if (!first[best]) {
        first[best] = 1;
        if (++hit == k) return true;
      }
    }
    return false;
  });
}

// Random (S, x) requirements; true iff no counterexample is found.
inline bool verify_suitable(const permutation_family& f, sampled_mode mode) {
  const std::uint32_t n = f.n, k = f.k;
  if (k > n) return true;
  const auto rk = f.ranks();
  rng gen(mode.seed);
  std::vector<std::uint32_t> subset;
  for (std::uint64_t trial = 0; trial < mode.trials; ++trial) {
    subset.clear();
    while (subset.size() < k) {
      const auto e = static_cast<std::uint32_t>(gen.below(n));
      if (std::find(subset.begin(), subset.end(), e) == subset.end()) subset.push_back(e);
    }
    const std::uint32_t x = subset[gen.below(k)];
    bool witnessed = false;
    for (const auto& r : rk) {
      bool ahead = true;
      for (auto y : subset)
        if (y != x && r[y] < r[x]) {
          ahead = false;
          break;
        }
      if (ahead) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) return false;
  }
  return true;
}

} // namespace boxlab

#endif // BOXLAB_SUITABLE_HPP
