#ifndef BOXLAB_IO_HPP
#define BOXLAB_IO_HPP

// Text formats:
//   graph <n> <m>            then m lines "u v"          (0-based)
//   poset <n> <k>            then k lines "u v", u < v   (0-based)
//   td <bags> <w+1> <n>      then "b <id> v..." (1-based id, 0-based vertices)
//                            and bags-1 tree edges "x y" (1-based ids)
//   layers                   one layer index per vertex, whitespace separated
//   vertex list              whitespace separated vertex ids
// Blank lines and lines starting with '#' are ignored everywhere; td files
// also skip PACE comment lines starting with 'c'.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "boxlab/builders/treewidth.hpp"
#include "boxlab/certificate.hpp"
#include "boxlab/core/error.hpp"
#include "boxlab/core/graph.hpp"
#include "boxlab/core/poset.hpp"

namespace boxlab::io {

namespace detail {

class line_reader {
public:
  line_reader(std::istream& in, std::string what, bool pace_comments = false)
      : in_(in), what_(std::move(what)), pace_(pace_comments) {}

  // Next meaningful line split into tokens; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      std::istringstream ss(line);
      tokens.clear();
      for (std::string tok; ss >> tok;) tokens.push_back(tok);
      if (tokens.empty() || tokens[0][0] == '#') continue;
      if (pace_ && tokens[0] == "c") continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(what_ + " line " + std::to_string(line_no_) + ": " + msg);
  }

  std::uint64_t number(const std::string& tok) const {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      if (tok.empty() || tok[0] == '-' || tok[0] == '+') throw std::invalid_argument("sign");
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      fail("expected a non-negative integer, got '" + tok + "'");
    }
    if (used != tok.size()) fail("expected a non-negative integer, got '" + tok + "'");
    return v;
  }

  vertex vertex_id(const std::string& tok, std::size_t n) const {
    const auto v = number(tok);
    if (v >= n) fail("vertex " + tok + " out of range 0.." + std::to_string(n == 0 ? 0 : n - 1));
    return static_cast<vertex>(v);
  }

private:
  std::istream& in_;
  std::string what_;
  bool pace_;
  std::size_t line_no_ = 0;
};

inline std::vector<edge> read_pairs(line_reader& r, const char* keyword, std::size_t& n) {
  std::vector<std::string> tok;
  if (!r.next(tok)) r.fail(std::string("empty input, expected '") + keyword + " <n> <m>'");
  if (tok.size() != 3 || tok[0] != keyword) r.fail(std::string("expected header '") + keyword + " <n> <m>'");
  n = r.number(tok[1]);
  const auto m = r.number(tok[2]);
  std::vector<edge> pairs;
  pairs.reserve(m);
  while (r.next(tok)) {
    if (tok.size() != 2) r.fail("expected two vertex ids");
    if (pairs.size() == m) r.fail("more than " + std::to_string(m) + " pairs");
    pairs.emplace_back(r.vertex_id(tok[0], n), r.vertex_id(tok[1], n));
  }
  if (pairs.size() != m) r.fail("expected " + std::to_string(m) + " pairs, found " + std::to_string(pairs.size()));
  return pairs;
}

inline std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  return in;
}

inline std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write '" + path + "'");
  return out;
}

} // namespace detail

inline graph read_graph(std::istream& in, const std::string& name = "graph") {
  detail::line_reader r(in, name);
  std::size_t n = 0;
  const auto pairs = detail::read_pairs(r, "graph", n);
  return graph::from_edges(n, pairs);
}

inline void write_graph(std::ostream& out, const graph& g) {
  out << "graph " << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline poset read_poset(std::istream& in, const std::string& name = "poset") {
  detail::line_reader r(in, name);
  std::size_t n = 0;
  const auto pairs = detail::read_pairs(r, "poset", n);
  return poset::from_relations(n, pairs);
}

// Writes the cover relations only.
inline void write_poset(std::ostream& out, const poset& p) {
  std::vector<edge> cover;
  for (const auto& [u, v] : p.relations()) {
    bool direct = true;
    p.above(u).for_each([&](std::size_t z) { direct = direct && !(z != v && p.less(static_cast<vertex>(z), v)); });
    if (direct) cover.emplace_back(u, v);
  }
  out << "poset " << p.size() << ' ' << cover.size() << '\n';
  for (auto [u, v] : cover) out << u << ' ' << v << '\n';
}

inline tree_decomposition read_td(std::istream& in, std::size_t n, const std::string& name = "td") {
  detail::line_reader r(in, name, true);
  std::vector<std::string> tok;
  if (!r.next(tok)) r.fail("empty input, expected 'td <bags> <width+1> <n>'");
  std::size_t at = 0;
  if (tok.size() == 5 && tok[0] == "s") at = 1;
  if (tok.size() != at + 4 || tok[at] != "td") r.fail("expected header 'td <bags> <width+1> <n>'");
  const auto bags = r.number(tok[at + 1]);
  const auto width1 = r.number(tok[at + 2]);
  const auto nv = r.number(tok[at + 3]);
  if (nv != n) r.fail("decomposition is for " + std::to_string(nv) + " vertices, graph has " + std::to_string(n));
  tree_decomposition td;
  td.bags.resize(bags);
  std::vector<char> seen(bags, 0);
  std::size_t bag_lines = 0;
  while (bag_lines < bags && r.next(tok)) {
    if (tok[0] != "b" || tok.size() < 2) r.fail("expected a bag line 'b <id> v...'");
    const auto id = r.number(tok[1]);
    if (id < 1 || id > bags) r.fail("bag id out of range");
    if (seen[id - 1]) r.fail("bag " + tok[1] + " listed twice");
    seen[id - 1] = 1;
    for (std::size_t i = 2; i < tok.size(); ++i) td.bags[id - 1].push_back(r.vertex_id(tok[i], n));
    if (td.bags[id - 1].size() > width1) r.fail("bag " + tok[1] + " larger than the declared width+1");
    ++bag_lines;
  }
  if (bag_lines != bags) r.fail("expected " + std::to_string(bags) + " bag lines");
  while (r.next(tok)) {
    if (tok.size() != 2) r.fail("expected a tree edge 'x y'");
    const auto x = r.number(tok[0]), y = r.number(tok[1]);
    if (x < 1 || x > bags || y < 1 || y > bags) r.fail("tree edge endpoint out of range");
    td.edges.emplace_back(static_cast<std::uint32_t>(x - 1), static_cast<std::uint32_t>(y - 1));
  }
  return td;
}

inline void write_td(std::ostream& out, const tree_decomposition& td, std::size_t n) {
  out << "td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (vertex v : td.bags[i]) out << ' ' << v;
    out << '\n';
  }
  for (auto [x, y] : td.edges) out << x + 1 << ' ' << y + 1 << '\n';
}

inline std::vector<std::uint32_t> read_layers(std::istream& in, std::size_t n, const std::string& name = "layers") {
  detail::line_reader r(in, name);
  std::vector<std::uint32_t> out;
  std::vector<std::string> tok;
  while (r.next(tok))
    for (const auto& t : tok) out.push_back(static_cast<std::uint32_t>(r.number(t)));
  if (out.size() != n) r.fail("expected " + std::to_string(n) + " layer indices, found " + std::to_string(out.size()));
  return out;
}

inline void write_layers(std::ostream& out, std::span<const std::uint32_t> layers) {
  for (std::size_t i = 0; i < layers.size(); ++i) out << (i ? " " : "") << layers[i];
  out << '\n';
}

inline std::vector<vertex> read_vertex_list(std::istream& in, std::size_t n, const std::string& name = "vertex list") {
  detail::line_reader r(in, name);
  std::vector<vertex> out;
  std::vector<std::string> tok;
  while (r.next(tok))
    for (const auto& t : tok) out.push_back(r.vertex_id(t, n));
  (void)vertex_mask(n, out, name.c_str());
  return out;
}

inline json read_json(std::istream& in, const std::string& name = "json") {
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(name + ": " + e.what());
  }
}

inline certificate read_certificate(std::istream& in, const std::string& name = "certificate") {
  return certificate_from_json(read_json(in, name));
}

inline void write_certificate(std::ostream& out, const certificate& c) { out << to_json(c).dump() << '\n'; }

inline graph load_graph(const std::string& path) {
  auto in = detail::open_in(path);
  return read_graph(in, path);
}

inline poset load_poset(const std::string& path) {
  auto in = detail::open_in(path);
  return read_poset(in, path);
}

inline tree_decomposition load_td(const std::string& path, std::size_t n) {
  auto in = detail::open_in(path);
  return read_td(in, n, path);
}

inline std::vector<std::uint32_t> load_layers(const std::string& path, std::size_t n) {
  auto in = detail::open_in(path);
  return read_layers(in, n, path);
}

inline std::vector<vertex> load_vertex_list(const std::string& path, std::size_t n) {
  auto in = detail::open_in(path);
  return read_vertex_list(in, n, path);
}

inline certificate load_certificate(const std::string& path) {
  auto in = detail::open_in(path);
  return read_certificate(in, path);
}

// Boxes of a representation file: either a certificate or a bare
// {"boxes": ...} object.
inline box_representation load_boxes(const std::string& path) { return load_certificate(path).boxes; }

inline void save_graph(const std::string& path, const graph& g) {
  auto out = detail::open_out(path);
  write_graph(out, g);
}

inline void save_certificate(const std::string& path, const certificate& c) {
  auto out = detail::open_out(path);
  write_certificate(out, c);
}

} // namespace boxlab::io

#endif // BOXLAB_IO_HPP
