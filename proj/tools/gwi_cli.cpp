// gwi: command-line front end for the generalized Wiener index library.
//
//   gwi compute   --input FILE | --stdin  [--index I] [--k K] [--method M]
//   gwi gen       --family F  [family parameters] [--out FILE]
//   gwi verify    --claim C   [--n N] [--k K] [--trials T] [--seed S]
//   gwi enumerate --n N       [--count-only]
//
// Output is JSON on stdout (or a flat key/value table with --pretty).
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 method precondition failure, 4 disconnected input.

#include <chrono>
#include <functional>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwi/benzenoid.hpp"
#include "gwi/enumerate.hpp"
#include "gwi/extremal.hpp"
#include "gwi/generators.hpp"
#include "gwi/io.hpp"
#include "gwi/oracle.hpp"
#include "gwi/partial_cube.hpp"
#include "gwi/tree_algo.hpp"

namespace {

using json = nlohmann::ordered_json;
using gwi::Count;
using gwi::ErrorCode;
using gwi::Graph;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitMethod = 3;
constexpr int kExitDisconnected = 4;

constexpr std::uint64_t kDefaultSeed = 20110607;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotATree:
    case ErrorCode::NotBipartite:
    case ErrorCode::ClassRemovalNotTwoComponents:
    case ErrorCode::NotPartialCube:
      return kExitMethod;
    case ErrorCode::Disconnected:
      return kExitDisconnected;
    default:
      return kExitInput;
  }
}

struct OutputOptions {
  bool pretty = false;
  bool no_timing = false;
};

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
  } else if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

void emit(const json& j, const OutputOptions& opts) {
  if (!opts.pretty) {
    std::cout << j.dump() << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  for (const auto& [key, value] : rows) {
    std::cout << key << std::string(width - key.size() + 2, ' ') << value << '\n';
  }
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// ---------------------------------------------------------------- compute

struct ComputeArgs {
  std::string input;
  bool use_stdin = false;
  std::string index = "all";
  std::optional<unsigned> k;
  std::string method = "auto";
  OutputOptions out;
};

Graph read_input(const ComputeArgs& args) {
  if (args.use_stdin) return gwi::read_edge_list(std::cin);
  std::ifstream file(args.input);
  if (!file) throw gwi::Error(ErrorCode::Parse, "cannot open " + args.input);
  return gwi::read_edge_list(file);
}

int run_compute(const ComputeArgs& args) {
  if (args.use_stdin == !args.input.empty()) {
    throw gwi::Error(ErrorCode::Parse, "exactly one of --input or --stdin is required");
  }
  const bool needs_k = args.index == "wk" || args.index == "twk" || args.index == "wk-star" ||
                       args.index == "twk-star";
  if (needs_k && !args.k) throw gwi::Error(ErrorCode::OutOfRange, "--index " + args.index + " requires --k");
  if (args.k && *args.k == 0 && args.index != "twk") {
    throw gwi::Error(ErrorCode::OutOfRange, "--k must be positive for --index " + args.index);
  }

  const Stopwatch clock;
  const Graph g = read_input(args);
  gwi::require_connected(g);

  const bool wants_wk = args.index == "wk" || (args.index == "all" && args.k);
  const bool wants_twk = args.index == "twk" || args.index == "all";

  std::optional<gwi::ThetaPartition> partition;
  bool linear = false;
  if (args.method == "linear") {
    gwi::require_tree(g);
    linear = true;
  } else if (args.method == "cut") {
    auto verdict = gwi::is_partial_cube(g);
    if (!verdict) {
      throw gwi::Error(ErrorCode::NotPartialCube,
                       "not a partial cube (" + std::string(gwi::to_string(*verdict.reason)) + "): " +
                           verdict.detail);
    }
    partition = std::move(verdict.partition);
  } else if (args.method == "auto") {
    linear = wants_wk && gwi::is_tree(g);
    if (wants_twk) {
      auto verdict = gwi::is_partial_cube(g);
      if (verdict) partition = std::move(verdict.partition);
    }
  }

  json out;
  out["n"] = g.order();
  out["m"] = g.size();
  out["index"] = args.index;
  if (args.k) out["k"] = *args.k;
  json methods = json::object();

  auto compute_wk = [&](unsigned k) -> Count {
    methods["wk"] = linear ? "linear" : "oracle";
    return linear ? gwi::gwp_linear(g, k) : gwi::wk(g, k);
  };
  auto compute_twk = [&](unsigned k) -> Count {
    methods["twk"] = partition ? "cut" : "oracle";
    return partition ? gwi::twk_cut(g, *partition, k) : gwi::twk(g, k);
  };

  if (args.index == "wk") {
    out["wk"] = compute_wk(*args.k);
  } else if (args.index == "twk") {
    out["twk"] = compute_twk(*args.k);
  } else if (args.index == "wiener") {
    out["wiener"] = gwi::wiener(g);
    methods["wiener"] = "oracle";
  } else if (args.index == "poly") {
    out["poly"] = gwi::wiener_polynomial(g).coeffs;
    methods["poly"] = "oracle";
  } else if (args.index == "zagreb") {
    out["M1"] = gwi::zagreb_m1(g);
    out["M2"] = gwi::zagreb_m2(g);
    methods["zagreb"] = "oracle";
  } else if (args.index == "wk-star") {
    out["wk_star"] = gwi::wk_star(g, *args.k);
    methods["wk_star"] = "oracle";
  } else if (args.index == "twk-star") {
    out["twk_star"] = gwi::twk_star(g, *args.k);
    methods["twk_star"] = "oracle";
  } else {
    const auto report = gwi::index_report(g, args.k);
    out["wiener"] = report.wiener;
    out["poly"] = report.polynomial.coeffs;
    out["M1"] = report.m1;
    out["M2"] = report.m2;
    json by_degree = json::object();
    for (const auto& [deg, value] : report.twk) {
      by_degree[std::to_string(deg)] = partition ? gwi::twk_cut(g, *partition, deg) : value;
    }
    out["twk_by_degree"] = by_degree;
    for (const char* key : {"wiener", "poly", "zagreb"}) methods[key] = "oracle";
    methods["twk_by_degree"] = partition ? "cut" : "oracle";
    if (args.k) {
      out["wk"] = compute_wk(*args.k);
      out["twk"] = compute_twk(*args.k);
      out["wk_star"] = *report.wk_star;
      out["twk_star"] = *report.twk_star;
      methods["wk_star"] = "oracle";
      methods["twk_star"] = "oracle";
    }
  }

  if (args.index == "all") {
    out["method"] = args.method;
  } else {
    out["method"] = methods.begin().value();
  }
  out["methods"] = methods;
  if (!args.out.no_timing) out["elapsed_ms"] = clock.elapsed_ms();
  emit(out, args.out);
  return kExitOk;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string family;
  std::optional<std::size_t> n;
  std::optional<unsigned> k;
  std::optional<unsigned> kdeg;
  std::optional<std::size_t> p;
  std::optional<std::size_t> a1;
  std::optional<std::size_t> a2;
  std::vector<std::size_t> parts;
  std::optional<unsigned> dim;
  std::string out_path;
  OutputOptions out;
};

template <class T>
T need(const std::optional<T>& value, const char* flag, const std::string& family) {
  if (!value) throw gwi::Error(ErrorCode::InfeasibleSpec, "--family " + family + " requires " + flag);
  return *value;
}

int run_gen(const GenArgs& args) {
  Graph g;
  json params = json::object();
  json predicted = json::object();
  std::string spec;
  const auto& f = args.family;

  auto from_tree_spec = [&](const gwi::TreeSpec& s) {
    spec = gwi::describe(s);
    g = gwi::gen(s);
  };

  if (f == "path" || f == "star") {
    const auto n = need(args.n, "--n", f);
    params["n"] = n;
    if (f == "path") {
      from_tree_spec(gwi::family::Path{n});
    } else {
      from_tree_spec(gwi::family::Star{n});
    }
    const auto N = static_cast<Count>(n);
    predicted["W"] = f == "path" ? (N + 1) * N * (N - 1) / 6 : (N - 1) * (N - 1);
  } else if (f == "double-broom") {
    const auto k = need(args.k, "--k", f);
    const auto a1 = need(args.a1, "--a1", f), a2 = need(args.a2, "--a2", f);
    params = {{"k", k}, {"a1", a1}, {"a2", a2}};
    from_tree_spec(gwi::family::DoubleBroom{k, a1, a2});
    predicted["W_" + std::to_string(k)] = static_cast<Count>(a1 * a2);
  } else if (f == "starlike-broom") {
    const auto k = need(args.k, "--k", f);
    if (args.parts.empty()) throw gwi::Error(ErrorCode::InfeasibleSpec, "--family starlike-broom requires --parts");
    params = {{"k", k}, {"parts", args.parts}};
    from_tree_spec(gwi::family::StarlikeBroom{k, args.parts});
    Count q = 0, squares = 0;
    for (std::size_t a : args.parts) {
      q += static_cast<Count>(a);
      squares += static_cast<Count>(a * a);
    }
    predicted["W_" + std::to_string(k)] = (q * q - squares) / 2;
  } else if (f == "caterpillar") {
    const auto n = need(args.n, "--n", f);
    const auto kdeg = need(args.kdeg, "--kdeg", f);
    const auto p = need(args.p, "--p", f);
    params = {{"n", n}, {"kdeg", kdeg}, {"p", p}};
    from_tree_spec(gwi::family::Caterpillar{n, kdeg, p});
    predicted["TW_" + std::to_string(kdeg)] = gwi::twk_caterpillar_formula(n, kdeg, p);
  } else if (f == "coronene") {
    const auto k = need(args.k, "--k", f);
    params["k"] = k;
    const auto h = gwi::gen_coronene(k);
    g = h.graph;
    spec = "coronene(k=" + std::to_string(k) + ")";
    const auto K = static_cast<Count>(k);
    predicted["vertices"] = 6 * K * K;
    predicted["degree2_vertices"] = 6 * K;
    predicted["TW_3"] = gwi::tw3_coronene_formula(k);
  } else if (f == "hypercube") {
    const auto d = need(args.dim, "--dim", f);
    params["dim"] = d;
    g = gwi::hypercube_graph(d);
    spec = "hypercube(d=" + std::to_string(d) + ")";
    const Count w = d == 0 ? 0 : static_cast<Count>(d) << (2 * (d - 1));
    predicted["W"] = w;
    predicted["TW_" + std::to_string(d)] = w;
  } else if (f == "cycle") {
    const auto n = need(args.n, "--n", f);
    params["n"] = n;
    g = gwi::cycle_graph(n);
    spec = "cycle(n=" + std::to_string(n) + ")";
    const auto N = static_cast<Count>(n);
    const Count w = n % 2 == 0 ? N * N * N / 8 : (N * N * N - N) / 8;
    predicted["W"] = w;
    predicted["TW_2"] = w;
  } else {
    throw gwi::Error(ErrorCode::InfeasibleSpec, "unknown family " + f);
  }

  json summary;
  summary["family"] = f;
  summary["params"] = params;
  summary["spec"] = spec;
  summary["n"] = g.order();
  summary["m"] = g.size();
  summary["predicted"] = predicted;
  if (args.out_path.empty()) {
    gwi::write_edge_list(std::cout, g);
    std::cerr << summary.dump() << '\n';
    return kExitOk;
  }
  std::ofstream file(args.out_path, std::ios::binary);
  if (!file) throw gwi::Error(ErrorCode::Parse, "cannot write " + args.out_path);
  gwi::write_edge_list(file, g);
  summary["out"] = args.out_path;
  emit(summary, args.out);
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string claim;
  std::optional<std::size_t> n;
  std::optional<unsigned> k;
  std::size_t trials = 0;
  std::uint64_t seed = kDefaultSeed;
  OutputOptions out;
};

struct Suite {
  json checks = json::array();
  bool all_pass = true;

  void add(json check) {
    all_pass = all_pass && check["pass"].get<bool>();
    checks.push_back(std::move(check));
  }
};

// Aggregates many small comparisons into one reported check.
struct Tally {
  explicit Tally(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  json first_failure;

  void record(bool ok, const std::function<json()>& describe_failure) {
    ++cases;
    if (!ok && failures++ == 0) first_failure = describe_failure();
  }

  json to_json() const {
    json j{{"name", name}, {"pass", failures == 0}, {"cases", cases}, {"failures", failures}};
    if (failures) j["first_failure"] = first_failure;
    return j;
  }
};

json extremal_json(const gwi::ExtremalReport& r) {
  json j{{"name", r.claim},
         {"pass", r.passed()},
         {"n", r.n},
         {"trees_scanned", r.trees_scanned},
         {"observed_max", r.observed_max},
         {"predicted_max", r.predicted_max},
         {"maximizer_count", r.maximizers.size()},
         {"unique_maximizer", r.unique_maximizer}};
  if (r.maximizers.size() <= 20) j["maximizers"] = r.maximizers;
  if (r.observed_min) {
    j["observed_min"] = *r.observed_min;
    j["predicted_min"] = *r.predicted_min;
    j["minimizer_count"] = r.minimizers.size();
  }
  j["failures"] = r.failures;
  return j;
}

std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

void suite_eq1(Suite& suite, std::size_t max_n, std::optional<unsigned> only_k) {
  Tally forms{"caterpillar_forms_agree"}, oracle{"caterpillar_matches_oracle"};
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (unsigned k = 3; k < n; ++k) {
      if (only_k && k != *only_k) continue;
      for (std::size_t p = 0;; ++p) {
        const auto s = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(p) * (k - 2) - 2;
        if (s < static_cast<std::int64_t>(p)) break;
        const auto f = gwi::caterpillar_formula_forms(n, k, p);
        const json where{{"n", n}, {"k", k}, {"p", p}};
        forms.record(f.by_spine == f.by_order, [&] {
          return json{{"case", where}, {"by_spine", f.by_spine}, {"by_order", f.by_order}};
        });
        const Count truth = gwi::twk(gwi::gen(gwi::family::Caterpillar{n, k, p}), k);
        oracle.record(truth == f.by_spine, [&] {
          return json{{"case", where}, {"formula", f.by_spine}, {"oracle", truth}};
        });
      }
    }
  }
  suite.add(forms.to_json());
  suite.add(oracle.to_json());
  if (max_n >= 20 && (!only_k || *only_k == 4)) {
    const Count value = gwi::twk_caterpillar_formula(20, 4, 5);
    suite.add({{"name", "caterpillar_n20_k4_p5"}, {"pass", value == 38}, {"value", value}, {"expected", 38}});
  }
}

void suite_coronene(Suite& suite, unsigned max_k) {
  for (unsigned k = 1; k <= max_k; ++k) {
    const auto h = gwi::gen_coronene(k);
    const Count formula = gwi::tw3_coronene_formula(k);
    const Count cut = gwi::twk_cut(h.graph, 3);
    const Count oracle = gwi::twk(h.graph, 3);
    suite.add({{"name", "H_" + std::to_string(k) + "_three_routes"},
               {"pass", formula == cut && cut == oracle},
               {"formula", formula},
               {"cut", cut},
               {"oracle", oracle}});
    json profile_check{{"name", "H_" + std::to_string(k) + "_cut_profile"}};
    try {
      json rows = json::array();
      for (const auto& [above, deg2] : gwi::horizontal_cut_profile(h)) rows.push_back({above, deg2});
      profile_check["pass"] = true;
      profile_check["profile"] = rows;
    } catch (const std::logic_error& e) {
      profile_check["pass"] = false;
      profile_check["detail"] = e.what();
    }
    suite.add(profile_check);
    const auto sizes = gwi::orientation_group_sizes(h, gwi::theta_classes(h.graph));
    const bool groups_ok = sizes[0] == 2 * k - 1 && sizes[1] == 2 * k - 1 && sizes[2] == 2 * k - 1;
    suite.add({{"name", "H_" + std::to_string(k) + "_orientation_groups"},
               {"pass", groups_ok},
               {"sizes", sizes}});
  }
}

void suite_cut_vs_oracle(Suite& suite, std::size_t trials, std::size_t max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally trees{"random_trees"};
  for (std::size_t t = 0; t < trials; ++t) {
    const Graph tree = gwi::random_tree(draw(rng, 2, max_n), rng);
    const auto partition = gwi::theta_classes(tree);
    std::set<unsigned> degrees;
    for (gwi::Vertex v = 0; v < tree.order(); ++v) degrees.insert(static_cast<unsigned>(tree.degree(v)));
    for (unsigned k : degrees) {
      const Count cut = gwi::twk_cut(tree, partition, k), oracle = gwi::twk(tree, k);
      trees.record(cut == oracle, [&] {
        return json{{"trial", t}, {"n", tree.order()}, {"k", k}, {"cut", cut}, {"oracle", oracle}};
      });
    }
  }
  suite.add(trees.to_json());

  Tally cycles{"even_cycles_C4_C40"};
  for (std::size_t n = 4; n <= 40; n += 2) {
    const Graph c = gwi::cycle_graph(n);
    const Count cut = gwi::twk_cut(c, 2), oracle = gwi::twk(c, 2);
    cycles.record(cut == oracle, [&] { return json{{"n", n}, {"cut", cut}, {"oracle", oracle}}; });
  }
  suite.add(cycles.to_json());

  Tally cubes{"hypercubes_Q1_Q6"};
  for (unsigned d = 1; d <= 6; ++d) {
    const Graph q = gwi::hypercube_graph(d);
    const Count cut = gwi::twk_cut(q, d), oracle = gwi::twk(q, d);
    cubes.record(cut == oracle, [&] { return json{{"d", d}, {"cut", cut}, {"oracle", oracle}}; });
  }
  suite.add(cubes.to_json());

  Tally coronenes{"coronenes_H1_H4"};
  for (unsigned k = 1; k <= 4; ++k) {
    const Graph h = gwi::gen_coronene(k).graph;
    const auto partition = gwi::theta_classes(h);
    for (unsigned deg : {2u, 3u}) {
      const Count cut = gwi::twk_cut(h, partition, deg), oracle = gwi::twk(h, deg);
      coronenes.record(cut == oracle, [&] {
        return json{{"k", k}, {"degree", deg}, {"cut", cut}, {"oracle", oracle}};
      });
    }
  }
  suite.add(coronenes.to_json());
}

void suite_linear_vs_oracle(Suite& suite, std::size_t trials, std::size_t max_n, unsigned max_k,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Tally tally{"random_trees"};
  for (std::size_t t = 0; t < trials; ++t) {
    const Graph tree = gwi::random_tree(draw(rng, 2, max_n), rng);
    const auto poly = gwi::wiener_polynomial(tree);
    const gwi::RootedTree rooted(tree, 0);
    for (unsigned k = 1; k <= max_k; ++k) {
      const Count linear = gwi::gwp_linear(rooted, k), oracle = poly.at(k);
      tally.record(linear == oracle, [&] {
        return json{{"trial", t}, {"n", tree.order()}, {"k", k}, {"linear", linear}, {"oracle", oracle}};
      });
    }
  }
  suite.add(tally.to_json());
}

int run_verify(const VerifyArgs& args) {
  const Stopwatch clock;
  Suite suite;
  json params = json::object();
  const auto& c = args.claim;

  if (c == "max-wk" || c == "max-tw3" || c == "degree-count" || c == "wiener-bounds") {
    const std::size_t n = args.n.value_or(c == "max-tw3" ? 8 : 10);
    params["n"] = n;
    gwi::Claim claim = gwi::claim::WienerBounds{};
    if (c == "max-wk") {
      claim = gwi::claim::MaxWk{args.k.value_or(3)};
      params["k"] = args.k.value_or(3);
    } else if (c == "max-tw3") {
      claim = gwi::claim::MaxTw3{};
    } else if (c == "degree-count") {
      claim = gwi::claim::MaxDegreeCount{args.k.value_or(3)};
      params["k"] = args.k.value_or(3);
    }
    suite.add(extremal_json(gwi::verify_extremal(n, claim)));
  } else if (c == "eq1") {
    const std::size_t n = args.n.value_or(60);
    params["n"] = n;
    if (args.k) params["k"] = *args.k;
    suite_eq1(suite, n, args.k);
  } else if (c == "coronene") {
    const unsigned k = args.k.value_or(5);
    params["k"] = k;
    suite_coronene(suite, k);
  } else if (c == "cut-vs-oracle") {
    const std::size_t trials = args.trials ? args.trials : 200;
    const std::size_t n = args.n.value_or(200);
    params = {{"trials", trials}, {"n", n}, {"seed", args.seed}};
    suite_cut_vs_oracle(suite, trials, n, args.seed);
  } else if (c == "linear-vs-oracle") {
    const std::size_t trials = args.trials ? args.trials : 1000;
    const std::size_t n = args.n.value_or(200);
    const unsigned k = args.k.value_or(10);
    params = {{"trials", trials}, {"n", n}, {"k", k}, {"seed", args.seed}};
    suite_linear_vs_oracle(suite, trials, n, k, args.seed);
  } else {
    throw gwi::Error(ErrorCode::OutOfRange, "unknown claim " + c);
  }

  json report{{"claim", c}, {"params", params}, {"checks", suite.checks}, {"pass", suite.all_pass}};
  if (!args.out.no_timing) report["elapsed_ms"] = clock.elapsed_ms();
  emit(report, args.out);
  return suite.all_pass ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------- enumerate

int run_enumerate(std::size_t n, bool count_only, const OutputOptions& opts) {
  json trees = json::array();
  std::size_t count = 0;
  gwi::for_each_free_tree(n, [&](const Graph& t) {
    ++count;
    if (count_only) return;
    json edges = json::array();
    for (const auto& [u, v] : t.edges()) edges.push_back({u, v});
    trees.push_back({{"canonical", gwi::canonical_form(t)}, {"edges", edges}});
  });
  json out{{"n", n}, {"count", count}};
  if (!count_only) out["trees"] = trees;
  emit(out, opts);
  return kExitOk;
}

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_flag("--pretty", opts.pretty, "Print a key/value table instead of JSON");
  cmd->add_flag("--no-timing", opts.no_timing, "Omit elapsed time so output is byte-reproducible");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Wiener polarity and terminal Wiener indices"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* compute_cmd = app.add_subcommand("compute", "Compute indices of a graph in edge-list format");
  compute_cmd->add_option("--input", compute.input, "Edge-list file");
  compute_cmd->add_flag("--stdin", compute.use_stdin, "Read the edge list from stdin");
  compute_cmd->add_option("--index", compute.index, "Index to compute")
      ->check(CLI::IsMember({"wk", "twk", "wiener", "poly", "zagreb", "wk-star", "twk-star", "all"}));
  compute_cmd->add_option("--k", compute.k, "Distance (wk, wk-star) or degree (twk, twk-star)");
  compute_cmd->add_option("--method", compute.method, "Computation route")
      ->check(CLI::IsMember({"oracle", "linear", "cut", "auto"}));
  add_output_flags(compute_cmd, compute.out);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a named graph family as an edge list");
  gen_cmd->add_option("--family", gen.family, "Graph family")
      ->required()
      ->check(CLI::IsMember({"path", "star", "double-broom", "starlike-broom", "caterpillar", "coronene",
                             "hypercube", "cycle"}));
  gen_cmd->add_option("--n", gen.n, "Vertex count (path, star, cycle, caterpillar)");
  gen_cmd->add_option("--k", gen.k, "Leaf distance (brooms) or ring count (coronene)");
  gen_cmd->add_option("--kdeg", gen.kdeg, "Degree of decorated caterpillar vertices");
  gen_cmd->add_option("--p", gen.p, "Number of decorated caterpillar vertices");
  gen_cmd->add_option("--a1", gen.a1, "First leaf group (double broom)");
  gen_cmd->add_option("--a2", gen.a2, "Second leaf group (double broom)");
  gen_cmd->add_option("--parts", gen.parts, "Leaf group sizes (starlike broom)")->delimiter(',');
  gen_cmd->add_option("--dim", gen.dim, "Hypercube dimension");
  gen_cmd->add_option("--out", gen.out_path, "Edge-list output file (default: stdout, summary on stderr)");
  add_output_flags(gen_cmd, gen.out);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a claim by enumeration or randomized comparison");
  verify_cmd->add_option("--claim", verify.claim, "Claim to verify")
      ->required()
      ->check(CLI::IsMember({"max-wk", "max-tw3", "degree-count", "wiener-bounds", "eq1", "coronene",
                             "cut-vs-oracle", "linear-vs-oracle"}));
  verify_cmd->add_option("--n", verify.n, "Tree order, or the largest order for randomized suites");
  verify_cmd->add_option("--k", verify.k, "Distance, degree, or ring count depending on the claim");
  verify_cmd->add_option("--trials", verify.trials, "Random trials");
  verify_cmd->add_option("--seed", verify.seed, "Seed for randomized suites")->capture_default_str();
  add_output_flags(verify_cmd, verify.out);

  std::size_t enum_n = 0;
  bool count_only = false;
  OutputOptions enum_out;
  auto* enum_cmd = app.add_subcommand("enumerate", "List all non-isomorphic trees of an order");
  enum_cmd->add_option("--n", enum_n, "Tree order")->required();
  enum_cmd->add_flag("--count-only", count_only, "Report only the number of trees");
  add_output_flags(enum_cmd, enum_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*compute_cmd) return run_compute(compute);
    if (*gen_cmd) return run_gen(gen);
    if (*verify_cmd) return run_verify(verify);
    return run_enumerate(enum_n, count_only, enum_out);
  } catch (const gwi::Error& e) {
    std::cerr << "error: " << gwi::to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}
