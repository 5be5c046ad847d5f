#ifndef BOXLAB_PIPELINES_BOUND_HPP
#define BOXLAB_PIPELINES_BOUND_HPP

#include <string>

#include "boxlab/builders/bipartite_suitable.hpp"
#include "boxlab/certificate.hpp"
#include "boxlab/formulas.hpp"

namespace boxlab {

namespace detail {

inline std::uint64_t need(const json& params, const char* key) {
  if (!params.contains(key)) throw parameter_error(std::string("bound_formula: missing parameter '") + key + "'");
  return params[key].get<std::uint64_t>();
}

} // namespace detail

// Dimension target of a construction from its recorded parameters; for the
// composed pipelines it is the sum of the targets of the composed pieces.
inline std::uint64_t bound_formula(const std::string& construction, const json& params) {
  using detail::need;
  if (construction == "pair_elimination") return formula::pair_elimination_target(need(params, "n"));
  if (construction == "degenerate") return std::max<std::uint64_t>(1, formula::degenerate_target(need(params, "n"), need(params, "k")));
  if (construction == "treewidth") return need(params, "width") + 2;
  if (construction == "caught_permutation") return std::max<std::uint64_t>(1, 2 * need(params, "t"));
  if (construction == "bipartite_suitable") return formula::bip_target(need(params, "t"), need(params, "l"), need(params, "p_bound"));
  if (construction == "layered_treewidth") return formula::ltw_target(need(params, "ltw"));
  if (construction == "degree") {
    if (params.contains("short_circuit")) return 1;
    if (!params.contains("piece_targets")) throw parameter_error("bound_formula: missing parameter 'piece_targets'");
    std::uint64_t sum = 0;
    for (const auto& p : params["piece_targets"]) sum += p[0].get<std::uint64_t>() + p[1].get<std::uint64_t>();
    return std::max<std::uint64_t>(1, sum);
  }
  if (construction == "genus") {
    if (!params.contains("branch")) throw parameter_error("bound_formula: missing parameter 'branch'");
    const std::uint64_t base = need(params, "d_repGX");
    if (params["branch"] == "deletion") return std::max<std::uint64_t>(1, base + need(params, "X_size"));
    const std::uint64_t k = need(params, "k");
    const std::uint64_t a = need(params, "A_size"), b = need(params, "B_size");
    std::uint64_t sum = base + 2 * need(params, "p");
    if (a > 0) sum += std::max<std::uint64_t>(1, formula::degenerate_target(a, k));
    if (b > 0) sum += formula::pair_elimination_target(b);
    if (a > 0 && b > 0) sum += std::max<std::uint64_t>(1, 2 * formula::caught_t(a + b, k));
    return std::max<std::uint64_t>(1, sum);
  }
  if (construction == "dimension") return 2 * need(params, "box_target");
  throw parameter_error("bound_formula: unknown construction '" + construction + "'");
}

} // namespace boxlab

#endif // BOXLAB_PIPELINES_BOUND_HPP
