#ifndef BOXLAB_CORE_BOX_HPP
#define BOXLAB_CORE_BOX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "boxlab/core/error.hpp"
#include "boxlab/core/graph.hpp"

namespace boxlab {

// Integer coordinate extended by -inf/+inf. The sentinels sit at the ends of
// the int64 range, so the natural integer order is the extended order; finite
// values are restricted to the open range between them.
class ext_int {
public:
  using rep = std::int64_t;

  constexpr ext_int() noexcept = default;
  constexpr ext_int(rep value) : value_(value) {
    if (value == std::numeric_limits<rep>::min() || value == std::numeric_limits<rep>::max())
      throw parameter_error("coordinate collides with an infinity sentinel");
  }

  static constexpr ext_int neg_inf() noexcept { return ext_int(raw_tag{}, std::numeric_limits<rep>::min()); }
  static constexpr ext_int pos_inf() noexcept { return ext_int(raw_tag{}, std::numeric_limits<rep>::max()); }

  constexpr bool is_neg_inf() const noexcept { return value_ == std::numeric_limits<rep>::min(); }
  constexpr bool is_pos_inf() const noexcept { return value_ == std::numeric_limits<rep>::max(); }
  constexpr bool finite() const noexcept { return !is_neg_inf() && !is_pos_inf(); }
  constexpr rep value() const noexcept { return value_; }

  constexpr auto operator<=>(const ext_int&) const noexcept = default;

  std::string to_string() const {
    if (is_neg_inf()) return "-inf";
    if (is_pos_inf()) return "+inf";
    return std::to_string(value_);
  }

private:
  struct raw_tag {};
  constexpr ext_int(raw_tag, rep value) noexcept : value_(value) {}

  rep value_ = 0;
};

inline constexpr ext_int neg_inf = ext_int::neg_inf();
inline constexpr ext_int pos_inf = ext_int::pos_inf();

// Closed interval [lo, hi].
struct interval {
  ext_int lo;
  ext_int hi;

  static constexpr interval full() noexcept { return {neg_inf, pos_inf}; }
  static constexpr interval point(ext_int x) noexcept { return {x, x}; }

  constexpr bool valid() const noexcept { return lo <= hi; }
  constexpr bool is_full() const noexcept { return lo.is_neg_inf() && hi.is_pos_inf(); }
  constexpr bool meets(const interval& o) const noexcept { return lo <= o.hi && o.lo <= hi; }

  constexpr bool operator==(const interval&) const noexcept = default;
};

// d-dimensional box representation of a vertex set 0..n-1, stored one column
// (dimension) at a time since every construction emits whole dimensions.
class box_representation {
public:
  using column = std::vector<interval>;

  box_representation() = default;
  explicit box_representation(std::size_t n) : n_(n) {}

  std::size_t vertices() const noexcept { return n_; }
  std::size_t dims() const noexcept { return cols_.size(); }

  const column& dim(std::size_t i) const noexcept { return cols_[i]; }
  const std::vector<column>& columns() const noexcept { return cols_; }

  const interval& at(vertex v, std::size_t i) const noexcept { return cols_[i][v]; }

  std::vector<interval> box(vertex v) const {
    std::vector<interval> b;
    b.reserve(cols_.size());
    for (const auto& c : cols_) b.push_back(c[v]);
    return b;
  }

  // Appends one dimension; the column must cover every vertex with a valid
  // closed interval.
  void add_dim(column c) {
    if (c.size() != n_)
      throw structural_error("dimension has " + std::to_string(c.size()) + " intervals for " + std::to_string(n_) +
                             " vertices");
    for (std::size_t v = 0; v < c.size(); ++v)
      if (!c[v].valid()) throw structural_error("empty interval at vertex " + std::to_string(v));
    cols_.push_back(std::move(c));
  }

  void append(const box_representation& o) {
    if (o.n_ != n_) throw structural_error("cannot append representation over a different vertex set");
    for (const auto& c : o.cols_) cols_.push_back(c);
  }

  bool boxes_meet(vertex u, vertex v) const noexcept {
    for (const auto& c : cols_)
      if (!c[u].meets(c[v])) return false;
    return true;
  }

  bool operator==(const box_representation&) const = default;

private:
  std::size_t n_ = 0;
  std::vector<column> cols_;
};

// A representation with a single dimension in which every vertex has the same
// point; its intersection graph is complete.
inline box_representation complete_representation(std::size_t n) {
  box_representation rep(n);
  rep.add_dim(box_representation::column(n, interval::point(0)));
  return rep;
}

// Final outputs must have at least one dimension; an empty product is the
// complete graph, so a single constant dimension preserves it.
inline void ensure_nonzero_dims(box_representation& rep) {
  if (rep.dims() == 0) rep.add_dim(box_representation::column(rep.vertices(), interval::point(0)));
}

} // namespace boxlab

#endif // BOXLAB_CORE_BOX_HPP
