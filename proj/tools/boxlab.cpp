// boxlab command-line front end.
//
// Exit status: 0 success, 2 unreadable input or bad command line, 3 invalid
// parameters or inconsistent objects, 4 randomized failure or a certificate
// that does not verify.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <thread>

#include <CLI11.hpp>

#include "boxlab/boxlab.hpp"

namespace {

using namespace boxlab;

constexpr int exit_parse = 2;
constexpr int exit_parameter = 3;
constexpr int exit_failure = 4;

class verification_failed : public error {
public:
  using error::error;
};

std::uint64_t fresh_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

struct output {
  std::string path;

  void write(const json& j) const {
    if (path.empty() || path == "-") {
      std::cout << j.dump() << '\n';
      return;
    }
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write '" + path + "'");
    out << j.dump() << '\n';
  }
};

std::string summary_line(const certificate& c, std::size_t n) {
  std::string s = "construction=" + c.construction + " n=" + std::to_string(n) + " d=" + std::to_string(c.d());
  s += " target_d=" + (c.target_d ? std::to_string(*c.target_d) : std::string("none"));
  if (c.fallback) s += " fallback=true";
  return s + " verified=true";
}

// The graph a certificate claims to represent: G itself, or G<A,B> for the
// bipartite builders.
graph certificate_target(const graph& g, const certificate& c) {
  if (c.construction == "bipartite_suitable" || c.construction == "caught_permutation") {
    if (!c.witness.contains("A") || !c.witness.contains("B")) throw parse_error("certificate lacks witness sets A and B");
    const auto a = c.witness["A"].get<std::vector<vertex>>();
    const auto b = c.witness["B"].get<std::vector<vertex>>();
    return bipartite_supergraph(g, a, b);
  }
  return g;
}

void check_or_throw(const graph& target, const box_representation& rep) {
  const auto report = verify_box_rep(target, rep);
  if (report.ok()) return;
  std::string msg = "verification failed: " + report.summary();
  throw verification_failed(msg);
}

// Verify before writing; every path that emits a certificate goes through here.
void emit(const certificate& c, const graph& g, const output& out) {
  check_or_throw(certificate_target(g, c), c.boxes);
  out.write(to_json(c));
  std::cerr << summary_line(c, g.order()) << '\n';
}

json realizer_json(const std::vector<std::vector<vertex>>& orders) { return orders; }

// ---------------------------------------------------------------- bench

struct bench_config {
  std::uint64_t dmin = 2;
  std::uint64_t dmax = 64;
  std::size_t trials = 1;
  double n_factor = 4.0;
  std::size_t n_cap = 1200;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  bool no_verify = false;
  std::string csv;
};

void run_bench(const bench_config& cfg) {
  std::vector<std::uint64_t> deltas;
  for (std::uint64_t d = std::max<std::uint64_t>(2, cfg.dmin); d <= cfg.dmax; d = std::max(d + 1, d * 2)) deltas.push_back(d);
  if (deltas.empty() || deltas.back() != cfg.dmax) deltas.push_back(cfg.dmax);

  struct job {
    std::uint64_t delta;
    std::size_t n;
    std::uint64_t seed;
  };
  std::vector<job> jobs;
  seed_sequence seeds(cfg.seed);
  for (auto delta : deltas)
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const auto n = std::max<std::size_t>(delta + 1, std::min<std::size_t>(cfg.n_cap, static_cast<std::size_t>(cfg.n_factor * delta)));
      jobs.push_back({delta, n, seeds.next()});
    }

  std::ofstream file;
  if (!cfg.csv.empty()) {
    const bool fresh = !std::ifstream(cfg.csv).good();
    file.open(cfg.csv, std::ios::app);
    if (!file) throw parse_error("cannot write '" + cfg.csv + "'");
    if (fresh) file << "Delta,n,d,target_d,seconds,seed\n";
  } else {
    std::cout << "Delta,n,d,target_d,seconds,seed\n";
  }
  std::ostream& out = cfg.csv.empty() ? std::cout : file;

  std::mutex lock;
  std::size_t next = 0;
  std::exception_ptr failure;
  auto worker = [&] {
    while (true) {
      job j;
      {
        std::lock_guard<std::mutex> guard(lock);
        if (next == jobs.size() || failure) return;
        j = jobs[next++];
      }
      try {
        const graph g = gen::degree_capped(j.n, j.delta, child_seed(j.seed, 0));
        const auto start = std::chrono::steady_clock::now();
        const certificate c = bounded_degree_rep(g, child_seed(j.seed, 1));
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!cfg.no_verify) check_or_throw(g, c.boxes);
        std::lock_guard<std::mutex> guard(lock);
        out << g.max_degree() << ',' << j.n << ',' << c.d() << ',' << c.target_d.value_or(0) << ',' << secs << ',' << j.seed << '\n';
        out.flush();
      } catch (...) {
        std::lock_guard<std::mutex> guard(lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < std::max<std::size_t>(1, cfg.threads); ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// ---------------------------------------------------------------- gen

struct gen_config {
  std::string family;
  std::size_t n = 0, rows = 0, cols = 0, lower = 0, upper = 0, delta = 0, cap_a = 0, cap_b = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string out, td_out, layers_out;
};

void write_text(const std::string& path, const std::function<void(std::ostream&)>& f) {
  if (path.empty() || path == "-") {
    f(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write '" + path + "'");
  f(out);
}

void run_gen(const gen_config& cfg) {
  const auto& f = cfg.family;
  std::optional<graph> g;
  std::optional<poset> p;
  if (f == "path") g = gen::path(cfg.n);
  else if (f == "cycle") g = gen::cycle(cfg.n);
  else if (f == "complete") g = gen::complete(cfg.n);
  else if (f == "star") g = gen::star(cfg.n);
  else if (f == "matching-complement") g = gen::matching_complement(cfg.n);
  else if (f == "grid") g = gen::grid(cfg.rows, cfg.cols);
  else if (f == "subdivided-complete") g = gen::subdivided_complete(cfg.n);
  else if (f == "tree") g = gen::random_tree(cfg.n, cfg.seed);
  else if (f == "gnp") g = gen::gnp(cfg.n, cfg.p, cfg.delta, cfg.seed);
  else if (f == "capped") g = gen::degree_capped(cfg.n, cfg.delta, cfg.seed);
  else if (f == "bipartite") g = gen::random_bipartite(cfg.lower, cfg.upper, cfg.p, cfg.cap_a, cfg.cap_b, cfg.seed);
  else if (f == "chain") p = gen::chain(cfg.n);
  else if (f == "antichain") p = gen::antichain(cfg.n);
  else if (f == "boolean") p = gen::boolean_lattice(cfg.n);
  else if (f == "crown") p = gen::crown(cfg.n);
  else if (f == "height2") p = gen::random_height2(cfg.lower, cfg.upper, cfg.p, cfg.cap_a, cfg.cap_b, cfg.seed);
  else if (f == "poset") p = gen::random_poset(cfg.n, cfg.p, cfg.seed);
  else throw parameter_error("gen: unknown family '" + f + "'");

  if (g) write_text(cfg.out, [&](std::ostream& o) { io::write_graph(o, *g); });
  if (p) write_text(cfg.out, [&](std::ostream& o) { io::write_poset(o, *p); });
  if (f == "grid") {
    if (!cfg.td_out.empty())
      write_text(cfg.td_out, [&](std::ostream& o) { io::write_td(o, gen::grid_decomposition(cfg.rows, cfg.cols), g->order()); });
    if (!cfg.layers_out.empty())
      write_text(cfg.layers_out, [&](std::ostream& o) { io::write_layers(o, gen::grid_layers(cfg.rows, cfg.cols)); });
  }
}

int run(int argc, char** argv) {
  CLI::App app{"boxlab: verified box representations and poset realizers"};
  app.require_subcommand(1);

  std::string graph_path, poset_path, cert_path, out_path;
  std::optional<std::uint64_t> seed_opt;
  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", seed_opt, "64-bit seed (random when omitted)"); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("-o,--out", out_path, "output path (stdout when omitted)"); };
  auto add_graph = [&](CLI::App* sub) { sub->add_option("graph", graph_path, "graph file")->required(); };

  // suitable
  auto* suitable_cmd = app.add_subcommand("suitable", "build a k-suitable permutation family");
  std::uint32_t s_n = 0, s_k = 3;
  std::string s_check = "auto";
  std::uint64_t s_trials = 1'000'000;
  suitable_cmd->add_option("--n", s_n, "ground set size")->required();
  suitable_cmd->add_option("--k", s_k, "suitability order");
  suitable_cmd->add_option("--check", s_check, "auto, exhaustive, sampled or none")->check(CLI::IsMember({"auto", "exhaustive", "sampled", "none"}));
  suitable_cmd->add_option("--trials", s_trials, "sampled-check trials");
  add_seed(suitable_cmd);
  add_out(suitable_cmd);

  // partition
  auto* partition_cmd = app.add_subcommand("partition", "partition with few neighbours per class");
  std::optional<std::uint32_t> p_d, p_k;
  bool p_unsafe = false;
  add_graph(partition_cmd);
  partition_cmd->add_option("--d", p_d, "per-class neighbour bound (automatic when omitted with --k)");
  partition_cmd->add_option("--k", p_k, "class count");
  partition_cmd->add_flag("--unsafe", p_unsafe, "skip the class-count precondition");
  add_seed(partition_cmd);
  add_out(partition_cmd);

  auto* degree_cmd = app.add_subcommand("degree", "bounded-degree pipeline");
  add_graph(degree_cmd);
  add_seed(degree_cmd);
  add_out(degree_cmd);

  auto* genus_cmd = app.add_subcommand("genus", "Euler-genus pipeline from a cut set X and a representation of G - X");
  std::uint64_t g_genus = 0;
  std::size_t g_threshold = genus_default_threshold;
  std::string g_cut, g_rep;
  add_graph(genus_cmd);
  genus_cmd->add_option("--g", g_genus, "Euler genus")->required();
  genus_cmd->add_option("--cut", g_cut, "vertex list file for X")->required();
  genus_cmd->add_option("--rep", g_rep, "certificate or boxes of G - X (vertices in ascending order)")->required();
  genus_cmd->add_option("--threshold", g_threshold, "|X| at which the suitable branch replaces vertex deletion");
  add_seed(genus_cmd);
  add_out(genus_cmd);

  auto* ltw_cmd = app.add_subcommand("ltw", "layered-treewidth pipeline");
  std::string l_td, l_layers;
  add_graph(ltw_cmd);
  ltw_cmd->add_option("--td", l_td, "tree decomposition file")->required();
  ltw_cmd->add_option("--layers", l_layers, "layer index per vertex")->required();
  add_out(ltw_cmd);

  auto* dim_cmd = app.add_subcommand("dim", "poset dimension pipeline");
  dim_cmd->add_option("poset", poset_path, "poset file")->required();
  add_seed(dim_cmd);
  add_out(dim_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "exact values for tiny inputs");
  oracle_cmd->require_subcommand(1);
  auto* oracle_bx = oracle_cmd->add_subcommand("bx", "exact boxicity (n <= 8)");
  add_graph(oracle_bx);
  add_out(oracle_bx);
  auto* oracle_dim = oracle_cmd->add_subcommand("dim", "exact dimension (n <= 8)");
  oracle_dim->add_option("poset", poset_path, "poset file")->required();
  add_out(oracle_dim);

  auto* verify_cmd = app.add_subcommand("verify", "check a certificate against its graph, or orders against a poset");
  bool v_poset = false;
  verify_cmd->add_option("input", graph_path, "graph file (poset file with --poset)")->required();
  verify_cmd->add_option("certificate", cert_path, "certificate JSON")->required();
  verify_cmd->add_flag("--poset", v_poset, "input is a poset and the JSON holds \"orders\"");

  auto* pair_cmd = app.add_subcommand("pair", "pair-elimination representation");
  add_graph(pair_cmd);
  add_out(pair_cmd);

  auto* degenerate_cmd = app.add_subcommand("degenerate", "representation of a k-degenerate graph");
  std::optional<std::uint32_t> dg_k;
  add_graph(degenerate_cmd);
  degenerate_cmd->add_option("--k", dg_k, "degeneracy bound (computed when omitted)");
  add_seed(degenerate_cmd);
  add_out(degenerate_cmd);

  auto* tw_cmd = app.add_subcommand("treewidth", "representation from a tree decomposition");
  std::string tw_td;
  add_graph(tw_cmd);
  tw_cmd->add_option("--td", tw_td, "tree decomposition (heuristic min-degree decomposition when omitted)");
  add_out(tw_cmd);

  auto* bip_cmd = app.add_subcommand("bipartite", "representation of G<A,B> from suitable permutations");
  std::string b_a, b_b;
  std::optional<std::uint64_t> b_d, b_delta;
  add_graph(bip_cmd);
  bip_cmd->add_option("--a", b_a, "vertex list for A")->required();
  bip_cmd->add_option("--b", b_b, "vertex list for B")->required();
  bip_cmd->add_option("--d", b_d, "A-side degree bound (observed when omitted)");
  bip_cmd->add_option("--delta", b_delta, "B-side degree bound (observed when omitted)");
  add_seed(bip_cmd);
  add_out(bip_cmd);

  auto* caught_cmd = app.add_subcommand("caught", "representation of G<A,B> from random permutations of B");
  std::optional<std::uint32_t> c_k;
  add_graph(caught_cmd);
  caught_cmd->add_option("--a", b_a, "vertex list for A")->required();
  caught_cmd->add_option("--b", b_b, "vertex list for B")->required();
  caught_cmd->add_option("--k", c_k, "A-side degree bound (observed when omitted)");
  add_seed(caught_cmd);
  add_out(caught_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "write a generated graph or poset");
  gen_config gc;
  gen_cmd->add_option("family", gc.family,
                      "path cycle complete star matching-complement grid subdivided-complete tree gnp capped bipartite "
                      "chain antichain boolean crown height2 poset")
      ->required();
  gen_cmd->add_option("--n", gc.n, "size parameter");
  gen_cmd->add_option("--rows", gc.rows, "grid rows");
  gen_cmd->add_option("--cols", gc.cols, "grid columns");
  gen_cmd->add_option("--lower", gc.lower, "bipartite/height-2 lower side size");
  gen_cmd->add_option("--upper", gc.upper, "bipartite/height-2 upper side size");
  gen_cmd->add_option("--p", gc.p, "edge or relation probability");
  gen_cmd->add_option("--delta", gc.delta, "degree cap (gnp, capped)");
  gen_cmd->add_option("--cap-lower", gc.cap_a, "degree cap on the lower side");
  gen_cmd->add_option("--cap-upper", gc.cap_b, "degree cap on the upper side");
  gen_cmd->add_option("--td-out", gc.td_out, "grid: also write the three-column decomposition");
  gen_cmd->add_option("--layers-out", gc.layers_out, "grid: also write the BFS layering");
  gen_cmd->add_option("--seed", gc.seed, "seed for random families");
  gen_cmd->add_option("-o,--out", gc.out, "output path (stdout when omitted)");

  auto* bench_cmd = app.add_subcommand("bench", "benchmarks");
  bench_cmd->require_subcommand(1);
  auto* bench_degree = bench_cmd->add_subcommand("degree", "degree pipeline over a range of Delta");
  bench_config bc;
  bench_degree->add_option("--dmin", bc.dmin, "smallest Delta");
  bench_degree->add_option("--dmax", bc.dmax, "largest Delta");
  bench_degree->add_option("--trials", bc.trials, "instances per Delta");
  bench_degree->add_option("--n-factor", bc.n_factor, "n = factor * Delta");
  bench_degree->add_option("--n-cap", bc.n_cap, "upper limit on n");
  bench_degree->add_option("--threads", bc.threads, "worker threads");
  bench_degree->add_flag("--no-verify", bc.no_verify, "skip the external re-check");
  bench_degree->add_option("--csv", bc.csv, "append rows to this file (stdout when omitted)");
  bench_degree->add_option("--seed", bc.seed, "base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_parse;
  }

  const std::uint64_t seed = seed_opt.value_or(fresh_seed());
  const output out{out_path};

  if (*suitable_cmd) {
    const auto fam = build_suitable(s_n, s_k, seed);
    std::string check = s_check;
    if (check == "auto") check = detail::binomial(s_n, s_k) * s_k <= 1e8 ? "exhaustive" : "sampled";
    bool ok = true;
    if (check == "exhaustive") ok = verify_suitable(fam, exhaustive_mode{});
    else if (check == "sampled") ok = verify_suitable(fam, sampled_mode{s_trials, child_seed(seed, 1)});
    if (!ok) throw verification_failed("suitable family failed its " + check + " check");
    out.write({{"n", fam.n}, {"k", fam.k}, {"seed", seed}, {"route", to_string(fam.route)}, {"size", fam.size()},
               {"check", check}, {"perms", fam.perms}});
    std::cerr << "construction=suitable n=" << fam.n << " k=" << fam.k << " size=" << fam.size() << " check=" << check << '\n';
    return 0;
  }
  if (*partition_cmd) {
    const graph g = io::load_graph(graph_path);
    partition_params pp;
    if (p_d && p_k) pp = {*p_d, *p_k, false};
    else if (!p_d && !p_k) pp = auto_params_partition(g.max_degree());
    else throw parameter_error("partition: give both --d and --k, or neither");
    resampling_stats stats;
    const auto part = partition_bounded_mono(g, pp.d, pp.k, seed, {p_unsafe, 0}, &stats);
    out.write({{"d", pp.d}, {"k", pp.k}, {"seed", seed}, {"resamplings", stats.resamplings}, {"classes", part.cls}});
    std::cerr << "construction=partition n=" << g.order() << " d=" << pp.d << " k=" << pp.k << " resamplings=" << stats.resamplings
              << " verified=true\n";
    return 0;
  }
  if (*degree_cmd) {
    const graph g = io::load_graph(graph_path);
    emit(bounded_degree_rep(g, seed), g, out);
    return 0;
  }
  if (*genus_cmd) {
    const graph g = io::load_graph(graph_path);
    const auto x = io::load_vertex_list(g_cut, g.order());
    const auto rep = io::load_boxes(g_rep);
    emit(genus_rep(g, g_genus, x, rep, seed, {g_threshold}), g, out);
    return 0;
  }
  if (*ltw_cmd) {
    const graph g = io::load_graph(graph_path);
    const auto td = io::load_td(l_td, g.order());
    const auto layers = io::load_layers(l_layers, g.order());
    emit(layered_tw_rep(g, td, layers), g, out);
    return 0;
  }
  if (*dim_cmd) {
    const poset p = io::load_poset(poset_path);
    const auto res = dimension_pipeline(p, seed);
    const auto report = verify_fk_realizer(p, res.orders);
    if (!report.ok()) throw verification_failed("orders failed verification: " + report.summary());
    out.write({{"orders", realizer_json(res.orders)}, {"certificate", to_json(res.cert)}});
    std::cerr << "construction=dimension n=" << p.size() << " orders=" << res.orders.size() << " d=" << res.cert.d()
              << " verified=true\n";
    return 0;
  }
  if (*oracle_bx) {
    const graph g = io::load_graph(graph_path);
    const auto res = exact_boxicity(g);
    check_or_throw(g, res.witness);
    out.write({{"value", res.value}, {"witness", boxes_to_json(res.witness)}});
    std::cerr << "oracle=boxicity n=" << g.order() << " value=" << res.value << " verified=true\n";
    return 0;
  }
  if (*oracle_dim) {
    const poset p = io::load_poset(poset_path);
    const auto res = exact_dimension(p);
    const auto report = verify_realizer(p, res.witness);
    if (!report.ok()) throw verification_failed("realizer failed verification: " + report.summary());
    out.write({{"value", res.value}, {"witness", realizer_json(res.witness.orders)}});
    std::cerr << "oracle=dimension n=" << p.size() << " value=" << res.value << " verified=true\n";
    return 0;
  }
  if (*verify_cmd) {
    if (v_poset) {
      const poset p = io::load_poset(graph_path);
      std::ifstream in(cert_path);
      if (!in) throw parse_error("cannot open '" + cert_path + "'");
      const json j = io::read_json(in, cert_path);
      if (!j.contains("orders")) throw parse_error(cert_path + ": no \"orders\"");
      std::vector<std::vector<vertex>> orders;
      try {
        orders = j["orders"].get<std::vector<std::vector<vertex>>>();
      } catch (const nlohmann::json::exception& e) {
        throw parse_error(cert_path + ": " + e.what());
      }
      const auto report = verify_fk_realizer(p, orders);
      if (!report.ok()) {
        std::cout << "verified=false " << report.summary() << '\n';
        return exit_failure;
      }
      std::cout << "verified=true orders=" << orders.size() << '\n';
      return 0;
    }
    const graph g = io::load_graph(graph_path);
    const certificate c = io::load_certificate(cert_path);
    const auto report = verify_box_rep(certificate_target(g, c), c.boxes);
    if (!report.ok()) {
      std::cout << "verified=false " << report.summary() << '\n';
      return exit_failure;
    }
    std::string bound;
    if (c.target_d && !c.construction.empty()) {
      const auto recomputed = bound_formula(c.construction, c.params);
      if (recomputed != *c.target_d) {
        std::cout << "verified=false target_d=" << *c.target_d << " but the recorded parameters give " << recomputed << '\n';
        return exit_failure;
      }
      bound = " target_d=" + std::to_string(recomputed);
    }
    std::cout << "verified=true construction=" << c.construction << " n=" << g.order() << " d=" << c.d() << bound << '\n';
    return 0;
  }
  if (*pair_cmd) {
    const graph g = io::load_graph(graph_path);
    emit(pair_elimination_rep(g), g, out);
    return 0;
  }
  if (*degenerate_cmd) {
    const graph g = io::load_graph(graph_path);
    const auto k = dg_k.value_or(static_cast<std::uint32_t>(min_degree_elimination(g).degeneracy()));
    emit(degenerate_rep(g, k, seed), g, out);
    return 0;
  }
  if (*tw_cmd) {
    const graph g = io::load_graph(graph_path);
    const auto td = tw_td.empty() ? min_degree_decomposition(g) : io::load_td(tw_td, g.order());
    emit(treewidth_rep(g, td), g, out);
    return 0;
  }
  if (*bip_cmd || *caught_cmd) {
    const graph g = io::load_graph(graph_path);
    const auto a = io::load_vertex_list(b_a, g.order());
    const auto b = io::load_vertex_list(b_b, g.order());
    const auto in_a = vertex_mask(g.order(), a), in_b = vertex_mask(g.order(), b);
    std::uint64_t d_obs = 0, delta_obs = 0;
    for (vertex v : a) d_obs = std::max<std::uint64_t>(d_obs, degree_into(g, v, in_b));
    for (vertex w : b) delta_obs = std::max<std::uint64_t>(delta_obs, degree_into(g, w, in_a));
    if (*bip_cmd) {
      const auto d = b_d.value_or(std::max<std::uint64_t>(2, d_obs));
      const auto delta = b_delta.value_or(std::max(d, delta_obs));
      emit(bipartite_suitable_rep(g, a, b, d, delta, seed), g, out);
    } else {
      emit(caught_permutation_rep(g, a, b, c_k.value_or(static_cast<std::uint32_t>(d_obs)), seed), g, out);
    }
    return 0;
  }
  if (*gen_cmd) {
    run_gen(gc);
    return 0;
  }
  if (*bench_degree) {
    run_bench(bc);
    return 0;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const boxlab::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const verification_failed& e) {
    std::cerr << e.what() << '\n';
    return exit_failure;
  } catch (const boxlab::randomized_failure& e) {
    std::cerr << "randomized failure: " << e.what() << '\n';
    return exit_failure;
  } catch (const boxlab::parameter_error& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return exit_parameter;
  } catch (const boxlab::structural_error& e) {
    std::cerr << "structural error: " << e.what() << '\n';
    return exit_parameter;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
