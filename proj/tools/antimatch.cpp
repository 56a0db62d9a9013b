// Command-line front end: C4-freeness checks, triangle enumeration, the
// special/general neighbourly-set solvers, exact oracles, structure
// reports, fixture/graph generation and a scaling benchmark.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "antimatch/antimatch.hpp"

using nlohmann::ordered_json;
using namespace antimatch;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotC4Free = 3;
constexpr int kExitOracleLimit = 4;
constexpr int kExitInternal = 5;

// Input-data problem (bad file, bad edge set): exit code 2.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string fixture_name;
  std::string format = "text";
  std::string set_file;
  std::string out;
  bool skip_c4_check = false;
  bool no_timing = false;
  bool oracle_special = false;
  // gen
  int gen_n = 0;
  int gen_m = 0;
  std::uint64_t gen_seed = 0;
  long gen_attempts = 0;
  // bench
  std::vector<int> bench_sizes;
  double bench_density = 0.5;
  std::uint64_t bench_seed = 1;
  int bench_repeats = 3;
};

class Stopwatch {
 public:
  Stopwatch() : last_(std::chrono::steady_clock::now()) {}
  double lap_ms() {
    const auto now = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_;
};

class Phases {
 public:
  void add(const std::string& name, double ms) { v_.emplace_back(name, ms); }

  ordered_json to_json(bool no_timing) const {
    ordered_json j = ordered_json::object();
    if (!no_timing)
      for (const auto& [name, ms] : v_) j[name] = ms;
    return j;
  }

  std::string to_text(bool no_timing) const {
    if (no_timing) return "disabled";
    std::ostringstream os;
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i) os << ' ';
      os << v_[i].first << '=' << v_[i].second;
    }
    return os.str();
  }

 private:
  std::vector<std::pair<std::string, double>> v_;
};

Graph load_graph(const Options& o) {
  if (!o.fixture_name.empty()) return fixture(o.fixture_name);
  if (o.input == "-") return parse_edge_list(std::cin);
  std::ifstream in(o.input);
  if (!in) throw DataError("cannot open input file: " + o.input);
  return parse_edge_list(in);
}

std::vector<Edge> load_edge_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open set file: " + path);
  std::vector<Edge> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream es(line);
    long long u, v;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra) || u < 0 || v < 0 || u == v)
      throw DataError("set file line " + std::to_string(line_no) +
                      ": expected \"<u> <v>\"");
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return edges;
}

ordered_json edges_json(const std::vector<Edge>& edges) {
  ordered_json arr = ordered_json::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

std::string edges_text(const std::vector<Edge>& edges) {
  std::ostringstream os;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) os << ' ';
    os << '(' << edges[i].u << ',' << edges[i].v << ')';
  }
  return os.str();
}

void emit_witness(const Options& o, const std::string& command, const Graph& g,
                  const Witness& w, bool verified, const Phases& phases) {
  if (o.format == "json") {
    ordered_json j;
    j["command"] = command;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["cardinality"] = w.cardinality;
    j["kind"] = kind_name(w);
    j["edges"] = edges_json(w.edges);
    j["verified"] = verified;
    j["timing_ms"] = phases.to_json(o.no_timing);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "command: " << command << '\n'
              << "n: " << g.vertex_count() << '\n'
              << "m: " << g.edge_count() << '\n'
              << "cardinality: " << w.cardinality << '\n'
              << "kind: " << kind_name(w) << '\n'
              << "edges: " << edges_text(w.edges) << '\n'
              << "verified: " << (verified ? "yes" : "no") << '\n'
              << "timing_ms: " << phases.to_text(o.no_timing) << '\n';
  }
}

// Returns exit 3 and reports when the graph holds a quadrilateral.
std::optional<int> c4_gate(const Options& o, const Graph& g, Phases& phases,
                           Stopwatch& sw) {
  if (o.skip_c4_check) return std::nullopt;
  const auto cycle = find_quadrilateral(g);
  phases.add("c4_check", sw.lap_ms());
  if (!cycle) return std::nullopt;
  std::cerr << "input is not quadrilateral-free: cycle (" << (*cycle)[0] << ','
            << (*cycle)[1] << ',' << (*cycle)[2] << ',' << (*cycle)[3]
            << ")\n";
  return kExitNotC4Free;
}

int run_check(const Options& o) {
  Stopwatch sw;
  Phases phases;
  const Graph g = load_graph(o);
  phases.add("load", sw.lap_ms());
  const auto cycle = find_quadrilateral(g);
  phases.add("c4_check", sw.lap_ms());
  if (o.format == "json") {
    ordered_json j;
    j["command"] = "check";
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    ordered_json result;
    result["c4_free"] = !cycle;
    result["cycle"] =
        cycle ? ordered_json({(*cycle)[0], (*cycle)[1], (*cycle)[2],
                              (*cycle)[3]})
              : ordered_json(nullptr);
    j["result"] = result;
    j["timing_ms"] = phases.to_json(o.no_timing);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "command: check\n"
              << "n: " << g.vertex_count() << '\n'
              << "m: " << g.edge_count() << '\n'
              << "c4_free: " << (cycle ? "no" : "yes") << '\n';
    if (cycle)
      std::cout << "cycle: (" << (*cycle)[0] << ',' << (*cycle)[1] << ','
                << (*cycle)[2] << ',' << (*cycle)[3] << ")\n";
    std::cout << "timing_ms: " << phases.to_text(o.no_timing) << '\n';
  }
  return cycle ? kExitNotC4Free : kExitOk;
}

int run_triangles(const Options& o) {
  Stopwatch sw;
  Phases phases;
  const Graph g = load_graph(o);
  phases.add("load", sw.lap_ms());
  if (const auto code = c4_gate(o, g, phases, sw)) return *code;
  const std::vector<Triangle> tris = enumerate_triangles(g);
  phases.add("solve", sw.lap_ms());
  if (o.format == "json") {
    ordered_json j;
    j["command"] = "triangles";
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    ordered_json list = ordered_json::array();
    for (const Triangle& t : tris) list.push_back({t.a, t.b, t.c});
    j["result"] = {{"count", tris.size()}, {"triangles", list}};
    j["timing_ms"] = phases.to_json(o.no_timing);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "command: triangles\n"
              << "n: " << g.vertex_count() << '\n'
              << "m: " << g.edge_count() << '\n'
              << "count: " << tris.size() << '\n';
    for (const Triangle& t : tris)
      std::cout << "triangle: (" << t.a << ',' << t.b << ',' << t.c << ")\n";
    std::cout << "timing_ms: " << phases.to_text(o.no_timing) << '\n';
  }
  return kExitOk;
}

int run_solver(const Options& o, const std::string& command) {
  Stopwatch sw;
  Phases phases;
  const Graph g = load_graph(o);
  phases.add("load", sw.lap_ms());
  if (const auto code = c4_gate(o, g, phases, sw)) return *code;
  const bool special = command == "special";
  const Witness w = special ? max_special(g) : max_neighbourly(g);
  phases.add("solve", sw.lap_ms());
  const bool verified = verify_neighbourly(g, w.edges, special);
  phases.add("verify", sw.lap_ms());
  emit_witness(o, command, g, w, verified, phases);
  if (!verified) {
    std::cerr << "internal error: witness failed re-verification\n";
    return kExitInternal;
  }
  return kExitOk;
}

int run_oracle(const Options& o) {
  Stopwatch sw;
  Phases phases;
  const Graph g = load_graph(o);
  phases.add("load", sw.lap_ms());
  const Witness w =
      o.oracle_special ? oracle_max_special(g) : oracle_max_neighbourly(g);
  phases.add("solve", sw.lap_ms());
  const bool verified = verify_neighbourly(g, w.edges, o.oracle_special);
  phases.add("verify", sw.lap_ms());
  emit_witness(o, "oracle", g, w, verified, phases);
  if (!verified) {
    std::cerr << "internal error: witness failed re-verification\n";
    return kExitInternal;
  }
  return kExitOk;
}

int run_report(const Options& o) {
  Stopwatch sw;
  Phases phases;
  const Graph g = load_graph(o);
  phases.add("load", sw.lap_ms());
  const std::vector<Edge> set = load_edge_set(o.set_file);
  StructureReport rep;
  try {
    rep = structure_report(g, set);
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
  phases.add("solve", sw.lap_ms());
  if (o.format == "json") {
    ordered_json j;
    j["command"] = "report";
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    ordered_json result;
    result["cardinality"] = set.size();
    result["condition1"] =
        rep.covering_triangle
            ? ordered_json({rep.covering_triangle->a, rep.covering_triangle->b,
                            rep.covering_triangle->c})
            : ordered_json(nullptr);
    result["condition2"] =
        rep.covering_edge
            ? ordered_json({rep.covering_edge->u, rep.covering_edge->v})
            : ordered_json(nullptr);
    result["min_outside"] = {{"vertex", rep.min_outside_vertex},
                             {"count", rep.min_outside_count}};
    j["result"] = result;
    j["timing_ms"] = phases.to_json(o.no_timing);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "command: report\n"
              << "n: " << g.vertex_count() << '\n'
              << "m: " << g.edge_count() << '\n'
              << "cardinality: " << set.size() << '\n';
    if (rep.covering_triangle)
      std::cout << "condition1: triangle (" << rep.covering_triangle->a << ','
                << rep.covering_triangle->b << ',' << rep.covering_triangle->c
                << ")\n";
    else
      std::cout << "condition1: none\n";
    if (rep.covering_edge)
      std::cout << "condition2: edge (" << rep.covering_edge->u << ','
                << rep.covering_edge->v << ")\n";
    else
      std::cout << "condition2: none\n";
    std::cout << "min_outside: vertex=" << rep.min_outside_vertex
              << " count=" << rep.min_outside_count << '\n'
              << "timing_ms: " << phases.to_text(o.no_timing) << '\n';
  }
  return kExitOk;
}

void write_graph_file(const Graph& g, const std::string& out) {
  if (out == "-") {
    write_edge_list(std::cout, g);
    return;
  }
  std::ofstream f(out);
  if (!f) throw DataError("cannot open output file: " + out);
  write_edge_list(f, g);
}

int run_gen(const Options& o) {
  Stopwatch sw;
  Phases phases;
  GenConfig cfg;
  cfg.n = o.gen_n;
  cfg.target_m = o.gen_m;
  cfg.seed = o.gen_seed;
  cfg.max_attempts =
      o.gen_attempts > 0 ? o.gen_attempts : default_gen_attempts(o.gen_m);
  const GenResult r = gen_c4free(cfg);
  phases.add("solve", sw.lap_ms());
  write_graph_file(r.graph, o.out);
  phases.add("write", sw.lap_ms());
  if (o.out == "-") return kExitOk;
  if (o.format == "json") {
    ordered_json j;
    j["command"] = "gen";
    j["n"] = r.graph.vertex_count();
    j["m"] = r.graph.edge_count();
    j["result"] = {{"target_m", r.target_m},
                   {"attempts", r.attempts_used},
                   {"seed", cfg.seed},
                   {"out", o.out}};
    j["timing_ms"] = phases.to_json(o.no_timing);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "command: gen\n"
              << "n: " << r.graph.vertex_count() << '\n'
              << "m: " << r.graph.edge_count() << '\n'
              << "target_m: " << r.target_m << '\n'
              << "attempts: " << r.attempts_used << '\n'
              << "out: " << o.out << '\n'
              << "timing_ms: " << phases.to_text(o.no_timing) << '\n';
  }
  return kExitOk;
}

int run_fixture(const Options& o) {
  const Graph g = fixture(o.fixture_name);
  write_graph_file(g, o.out);
  if (o.out == "-") return kExitOk;
  if (o.format == "json") {
    ordered_json j;
    j["command"] = "fixture";
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["result"] = {{"name", o.fixture_name}, {"out", o.out}};
    j["timing_ms"] = ordered_json::object();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "command: fixture\n"
              << "n: " << g.vertex_count() << '\n'
              << "m: " << g.edge_count() << '\n'
              << "name: " << o.fixture_name << '\n'
              << "out: " << o.out << '\n';
  }
  return kExitOk;
}

int run_bench(const Options& o) {
  const std::vector<BenchRow> rows =
      ::antimatch::run_bench(o.bench_sizes, o.bench_density, o.bench_seed,
                             o.bench_repeats);
  if (o.format == "json") {
    ordered_json j;
    j["command"] = "bench";
    ordered_json list = ordered_json::array();
    for (const BenchRow& r : rows)
      list.push_back({{"n", r.n},
                      {"m", r.m},
                      {"t_triangles_ms", r.t_triangles_ms},
                      {"t_general_ms", r.t_general_ms}});
    j["result"] = {{"rows", list}};
    j["timing_ms"] = ordered_json::object();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "n,m,t_triangles_ms,t_general_ms\n";
    for (const BenchRow& r : rows)
      std::cout << r.n << ',' << r.m << ',' << r.t_triangles_ms << ','
                << r.t_general_ms << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "maximum neighbourly sets (antimatchings), special neighbourly sets "
      "and triangles in quadrilateral-free graphs"};
  app.require_subcommand(1);
  Options o;

  const auto add_input = [&o](CLI::App* cmd) {
    auto* in = cmd->add_option("--input", o.input,
                               "edge-list file ('-' reads stdin)");
    auto* fx =
        cmd->add_option("--fixture", o.fixture_name, "named fixture graph");
    in->excludes(fx);
    fx->excludes(in);
  };
  const auto add_format = [&o](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_flag("--no-timing", o.no_timing,
                  "emit an empty timing_ms object (reproducible output)");
  };
  const auto add_gate = [&o](CLI::App* cmd) {
    cmd->add_flag("--skip-c4-check", o.skip_c4_check,
                  "skip the quadrilateral-freeness gate (experimentation "
                  "only; results are not guaranteed maximal)");
  };

  CLI::App* c_check = app.add_subcommand("check", "test C4-freeness");
  add_input(c_check);
  add_format(c_check);

  CLI::App* c_tri = app.add_subcommand("triangles", "enumerate all triangles");
  add_input(c_tri);
  add_format(c_tri);
  add_gate(c_tri);

  CLI::App* c_special = app.add_subcommand(
      "special", "maximum special neighbourly set");
  add_input(c_special);
  add_format(c_special);
  add_gate(c_special);

  CLI::App* c_general =
      app.add_subcommand("general", "maximum neighbourly set");
  add_input(c_general);
  add_format(c_general);
  add_gate(c_general);

  CLI::App* c_oracle = app.add_subcommand(
      "oracle", "exact brute-force solver (small graphs)");
  add_input(c_oracle);
  add_format(c_oracle);
  c_oracle->add_flag("--special", o.oracle_special,
                     "maximum special neighbourly set instead of general");

  CLI::App* c_report = app.add_subcommand(
      "report", "classify a neighbourly set against the containment "
                "conditions");
  add_input(c_report);
  add_format(c_report);
  c_report->add_option("--set", o.set_file, "edge-set file (\"u v\" lines)")
      ->required();

  CLI::App* c_gen =
      app.add_subcommand("gen", "generate a seeded C4-free graph");
  add_format(c_gen);
  c_gen->add_option("--n", o.gen_n, "vertex count")->required();
  c_gen->add_option("--m", o.gen_m, "target edge count")->required();
  c_gen->add_option("--seed", o.gen_seed, "generator seed")->required();
  c_gen->add_option("--out", o.out, "output file ('-' for stdout)")
      ->required();
  c_gen->add_option("--attempts", o.gen_attempts,
                    "proposal budget (default 50*m + 1000)");

  CLI::App* c_fixture =
      app.add_subcommand("fixture", "write a named fixture graph");
  add_format(c_fixture);
  c_fixture->add_option("--name", o.fixture_name, "fixture name")->required();
  c_fixture->add_option("--out", o.out, "output file ('-' for stdout)")
      ->required();

  CLI::App* c_bench =
      app.add_subcommand("bench", "time triangle enumeration and the "
                                  "general solver on generated graphs");
  c_bench->add_option("--sizes", o.bench_sizes, "ascending vertex counts")
      ->required()
      ->delimiter(',');
  c_bench->add_option("--density", o.bench_density,
                      "fraction of the extremal C4-free edge bound")
      ->capture_default_str();
  c_bench->add_option("--seed", o.bench_seed, "generator seed")
      ->capture_default_str();
  c_bench->add_option("--repeats", o.bench_repeats,
                      "timing repetitions (median is reported)")
      ->capture_default_str();
  c_bench->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const bool needs_input = c_check->parsed() || c_tri->parsed() ||
                             c_special->parsed() || c_general->parsed() ||
                             c_oracle->parsed() || c_report->parsed();
    if (needs_input && o.input.empty() && o.fixture_name.empty()) {
      std::cerr << "error: one of --input or --fixture is required\n";
      return kExitUsage;
    }
    if (c_check->parsed()) return run_check(o);
    if (c_tri->parsed()) return run_triangles(o);
    if (c_special->parsed()) return run_solver(o, "special");
    if (c_general->parsed()) return run_solver(o, "general");
    if (c_oracle->parsed()) return run_oracle(o);
    if (c_report->parsed()) return run_report(o);
    if (c_gen->parsed()) return run_gen(o);
    if (c_fixture->parsed()) return run_fixture(o);
    if (c_bench->parsed()) return run_bench(o);
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const OracleLimitError& e) {
    std::cerr << "oracle limit: " << e.what() << '\n';
    return kExitOracleLimit;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
