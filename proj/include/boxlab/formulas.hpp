#ifndef BOXLAB_FORMULAS_HPP
#define BOXLAB_FORMULAS_HPP

// Closed-form parameters and dimension targets. All logarithms are natural.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "boxlab/core/error.hpp"
#include "boxlab/suitable.hpp"

namespace boxlab::formula {

inline std::uint64_t ceil_u(double x) { return x <= 0 ? 0 : static_cast<std::uint64_t>(std::ceil(x)); }

// (k+2) * ceil(2e ln n)
inline std::uint64_t degenerate_target(std::uint64_t n, std::uint64_t k) {
  return (k + 2) * ceil_u(2.0 * std::numbers::e * std::log(static_cast<double>(std::max<std::uint64_t>(n, 1))));
}

// Random permutations tried per attempt by the degenerate builder:
// ceil(3/2 (k+1) 2e ln n).
inline std::uint64_t degenerate_trials(std::uint64_t n, std::uint64_t k) {
  return ceil_u(1.5 * static_cast<double>(k + 1) * 2.0 * std::numbers::e * std::log(static_cast<double>(std::max<std::uint64_t>(n, 1))));
}

// ceil(3/2 (k+1) ln n)
inline std::uint64_t caught_t(std::uint64_t n, std::uint64_t k) {
  return ceil_u(1.5 * static_cast<double>(k + 1) * std::log(static_cast<double>(std::max<std::uint64_t>(n, 1))));
}

// r = ceil(sqrt(ln d))
inline std::uint64_t bip_r(std::uint64_t d) { return ceil_u(std::sqrt(std::log(static_cast<double>(d)))); }

// l = ceil(e (e d/(r+1))^{1+1/r})
inline std::uint64_t bip_l(std::uint64_t d, std::uint64_t r) {
  const double rr = static_cast<double>(r);
  return ceil_u(std::numbers::e * std::pow(std::numbers::e * static_cast<double>(d) / (rr + 1.0), 1.0 + 1.0 / rr));
}

// t = ceil(ln(4 d Delta))
inline std::uint64_t bip_t(std::uint64_t d, std::uint64_t delta) {
  return ceil_u(std::log(4.0 * static_cast<double>(d) * static_cast<double>(delta)));
}

// h = r Delta + 1 colours suffice for the conflict graph.
inline std::uint64_t bip_h(std::uint64_t r, std::uint64_t delta) { return r * delta + 1; }

// Size of the family build_suitable(n, k, .) returns; it does not depend on
// the seed, and it is non-decreasing in n.
inline std::uint64_t suitable_size(std::uint64_t n, std::uint64_t k) {
  if (n < 2) return 1;
  const auto k_eff = static_cast<std::uint32_t>(std::min<std::uint64_t>(std::max<std::uint64_t>(k, 2), n));
  const std::uint32_t t = k_eff - 1;
  std::uint32_t bits = 0;
  while ((std::uint64_t{1} << bits) < n) ++bits;
  std::uint32_t s = t;
  while (scrambling_size_bound(s, t) < bits) ++s;
  return s >= n ? n : s;
}

inline std::uint64_t bip_target(std::uint64_t t, std::uint64_t l, std::uint64_t p) { return 4 * t * l * p; }

// k = 7 + ceil(sqrt(g / ln g)), and 8 when g <= 1.
inline std::uint64_t genus_k(std::uint64_t g) {
  if (g <= 1) return 8;
  const double gg = static_cast<double>(g);
  return 7 + ceil_u(std::sqrt(gg / std::log(gg)));
}

inline std::uint64_t ltw_target(std::uint64_t ltw) { return 6 * ltw + 4; }

inline std::uint64_t pair_elimination_target(std::uint64_t n) { return std::max<std::uint64_t>(1, n / 2); }

} // namespace boxlab::formula

#endif // BOXLAB_FORMULAS_HPP
