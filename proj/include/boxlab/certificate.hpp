#ifndef BOXLAB_CERTIFICATE_HPP
#define BOXLAB_CERTIFICATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "boxlab/core/box.hpp"
#include "boxlab/core/error.hpp"

namespace boxlab {

using json = nlohmann::ordered_json;

// Output of every builder and pipeline: the boxes plus everything needed to
// replay the run. `params` holds the recorded inputs and formula values,
// `witness` the auxiliary objects (partitions, permutations, orderings).
struct certificate {
  std::string construction;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> target_d;
  bool fallback = false;
  json params = json::object();
  json witness = json::object();
  box_representation boxes;

  std::size_t d() const noexcept { return boxes.dims(); }
};

inline json ext_to_json(ext_int x) {
  if (x.is_neg_inf()) return "-inf";
  if (x.is_pos_inf()) return "+inf";
  return x.value();
}

inline ext_int ext_from_json(const json& j) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "-inf") return neg_inf;
    if (s == "+inf" || s == "inf") return pos_inf;
    throw parse_error("bad coordinate string '" + s + "'");
  }
  if (!j.is_number_integer()) throw parse_error("coordinate must be an integer or \"-inf\"/\"+inf\"");
  try {
    return ext_int(j.get<std::int64_t>());
  } catch (const parameter_error& e) {
    throw parse_error(e.what());
  }
}

// {"<v>": [[lo,hi], ...], ...} in vertex order.
inline json boxes_to_json(const box_representation& rep) {
  json out = json::object();
  for (vertex v = 0; v < rep.vertices(); ++v) {
    json b = json::array();
    for (std::size_t i = 0; i < rep.dims(); ++i) b.push_back(json::array({ext_to_json(rep.at(v, i).lo), ext_to_json(rep.at(v, i).hi)}));
    out[std::to_string(v)] = std::move(b);
  }
  return out;
}

// Keys must be exactly 0..n-1 (any order); every box must have the same number
// of intervals.
inline box_representation boxes_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("\"boxes\" must be an object");
  const std::size_t n = j.size();
  std::vector<const json*> rows(n, nullptr);
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::size_t v = 0;
    const std::string& key = it.key();
    std::size_t used = 0;
    try {
      v = std::stoull(key, &used);
    } catch (const std::exception&) {
      throw parse_error("box key '" + key + "' is not a vertex id");
    }
    if (used != key.size()) throw parse_error("box key '" + key + "' is not a vertex id");
    if (v >= n) throw structural_error("box key " + key + " out of range for " + std::to_string(n) + " boxes");
    if (rows[v]) throw parse_error("repeated box key " + key);
    rows[v] = &it.value();
  }
  const std::size_t d = n == 0 ? 0 : rows[0]->size();
  box_representation rep(n);
  std::vector<box_representation::column> cols(d, box_representation::column(n));
  for (std::size_t v = 0; v < n; ++v) {
    const json& b = *rows[v];
    if (!b.is_array()) throw parse_error("box of vertex " + std::to_string(v) + " must be an array");
    if (b.size() != d)
      throw structural_error("box of vertex " + std::to_string(v) + " has " + std::to_string(b.size()) + " intervals, expected " +
                             std::to_string(d));
    for (std::size_t i = 0; i < d; ++i) {
      if (!b[i].is_array() || b[i].size() != 2) throw parse_error("interval must be a [lo, hi] pair");
      cols[i][v] = {ext_from_json(b[i][0]), ext_from_json(b[i][1])};
    }
  }
  for (auto& c : cols) rep.add_dim(std::move(c));
  return rep;
}

inline json to_json(const certificate& c) {
  json out = json::object();
  out["construction"] = c.construction;
  out["seed"] = c.seed;
  out["d"] = c.d();
  if (c.target_d) out["target_d"] = *c.target_d;
  out["fallback"] = c.fallback;
  out["params"] = c.params;
  out["witness"] = c.witness;
  out["boxes"] = boxes_to_json(c.boxes);
  return out;
}

inline certificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("certificate must be a JSON object");
  if (!j.contains("boxes")) throw parse_error("certificate has no \"boxes\"");
  certificate c;
  try {
    c.construction = j.value("construction", std::string{});
    c.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("target_d") && !j["target_d"].is_null()) c.target_d = j["target_d"].get<std::uint64_t>();
    c.fallback = j.value("fallback", false);
    if (j.contains("params")) c.params = j["params"];
    if (j.contains("witness")) c.witness = j["witness"];
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("certificate: ") + e.what());
  }
  c.boxes = boxes_from_json(j["boxes"]);
  if (j.contains("d") && j["d"].is_number_integer() && j["d"].get<std::uint64_t>() != c.boxes.dims())
    throw structural_error("certificate records d=" + j["d"].dump() + " but boxes have " + std::to_string(c.boxes.dims()) +
                           " dimensions");
  return c;
}

} // namespace boxlab

#endif // BOXLAB_CERTIFICATE_HPP
