// Acceptance suite: runs every acceptance check at its stated tolerance and
// prints one pass/fail line per criterion. Exit code is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "antimatch/antimatch.hpp"
#include "support.hpp"

using namespace antimatch;

namespace {

constexpr int kCorpusSize = 1100;  // seeds 0..1099, all n <= 12, m <= 20

int failures = 0;

void criterion(int num, const std::string& name, bool pass,
               const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", num,
              name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string run_cli(const std::string& args) {
  const std::string cmd =
      std::string(ANTIMATCH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

void criterion1_general_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  int mismatches = 0;
  for (std::uint64_t seed = 0; seed < kCorpusSize; ++seed) {
    const Graph g = support::corpus_graph(seed).graph;
    if (max_neighbourly(g).cardinality !=
        oracle_max_neighbourly(g).cardinality)
      ++mismatches;
  }
  const double secs = seconds_since(start);
  std::ostringstream detail;
  detail << kCorpusSize << " graphs, " << mismatches << " mismatches, "
         << secs << " s";
  criterion(1, "oracle equivalence, general solver",
            mismatches == 0 && secs < 60.0, detail.str());
}

void criterion2_special_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  int mismatches = 0;
  for (std::uint64_t seed = 0; seed < kCorpusSize; ++seed) {
    const Graph g = support::corpus_graph(seed).graph;
    if (max_special(g).cardinality != oracle_max_special(g).cardinality)
      ++mismatches;
  }
  const double secs = seconds_since(start);
  std::ostringstream detail;
  detail << kCorpusSize << " graphs, " << mismatches << " mismatches, "
         << secs << " s";
  criterion(2, "oracle equivalence, special solver",
            mismatches == 0 && secs < 120.0, detail.str());
}

void criterion3_triangles() {
  int bad_sets = 0;
  int shared_edges = 0;
  int graphs = 0;
  auto check_graph = [&](const Graph& g) {
    ++graphs;
    std::vector<Triangle> fast = enumerate_triangles(g);
    std::vector<Triangle> slow = naive_triangles(g);
    std::sort(fast.begin(), fast.end());
    if (fast != slow) ++bad_sets;
    std::map<Edge, int> uses;
    for (const Triangle& t : fast) {
      ++uses[Edge(t.a, t.b)];
      ++uses[Edge(t.b, t.c)];
      ++uses[Edge(t.a, t.c)];
    }
    for (const auto& [e, count] : uses)
      if (count > 1) ++shared_edges;
  };
  for (std::uint64_t seed = 0; seed < kCorpusSize; ++seed)
    check_graph(support::corpus_graph(seed).graph);
  for (const char* name :
       {"pentagon", "petersen", "triangle_pendants", "pseudo_prism",
        "three_spoke", "two_spoke_leaf", "fig19", "path(9)", "star(8)"})
    check_graph(fixture(name));
  std::ostringstream detail;
  detail << graphs << " graphs, " << bad_sets << " set mismatches, "
         << shared_edges << " edges in two triangles";
  criterion(3, "triangle enumeration equals the naive oracle",
            bad_sets == 0 && shared_edges == 0, detail.str());
}

void criterion4_appendix() {
  const Graph fig19 = fixture("fig19");
  const std::vector<Edge> set = {{0, 1}, {1, 2}, {3, 4}, {4, 5},
                                 {6, 7}, {7, 8}, {9, 10}};
  const bool c4free = !find_quadrilateral(fig19).has_value();
  const bool verifies = verify_neighbourly(fig19, set, false);
  bool shape = false;
  int min_count = -1;
  if (verifies) {
    const StructureReport rep = structure_report(fig19, set);
    min_count = rep.min_outside_count;
    shape = !rep.covering_triangle && !rep.covering_edge &&
            rep.min_outside_count == 5 && rep.min_outside_vertex == 1;
  }
  std::ostringstream detail;
  detail << "c4free=" << c4free << " verifies=" << verifies
         << " min_outside=" << min_count;
  criterion(4, "fig19 set escapes both containments, 5 edges off-star",
            c4free && verifies && shape, detail.str());
}

void criterion5_named_values() {
  const int fig_special = max_special(fixture("fig19")).cardinality;
  const int fig_general = max_neighbourly(fixture("fig19")).cardinality;
  const int c5 = max_neighbourly(fixture("pentagon")).cardinality;
  const int petersen = max_neighbourly(fixture("petersen")).cardinality;
  const Witness spokes = max_neighbourly(fixture("three_spoke"));
  const bool pass = fig_special == 9 && fig_general == 9 && c5 == 5 &&
                    petersen == 5 && spokes.cardinality == 6 &&
                    std::holds_alternative<SpokesKind>(spokes.kind);
  std::ostringstream detail;
  detail << "fig19=" << fig_special << "/" << fig_general << " C5=" << c5
         << " petersen=" << petersen << " three_spoke=" << spokes.cardinality
         << "/" << kind_name(spokes);
  criterion(5, "named fixture values", pass, detail.str());
}

void criterion6_witness_structure() {
  int violations = 0;
  for (std::uint64_t seed = 0; seed < kCorpusSize; ++seed) {
    const Graph g = support::corpus_graph(seed).graph;
    const Witness w = oracle_max_neighbourly(g);

    if (support::longest_cycle_len(w.edges) > 5) ++violations;
    if (support::longest_path_edges(w.edges) > 4) ++violations;

    for (const auto& t : support::triangles_in(w.edges))
      for (const Edge& e : w.edges)
        if (!e.touches(t[0]) && !e.touches(t[1]) && !e.touches(t[2]))
          ++violations;

    for (const auto& cyc : support::five_cycles_in(w.edges))
      for (const Edge& e : w.edges)
        if ((cyc.count(e.u) != 0) != (cyc.count(e.v) != 0)) ++violations;
  }
  std::ostringstream detail;
  detail << kCorpusSize << " oracle witnesses, " << violations
         << " violations";
  criterion(6, "structural invariants on oracle witnesses", violations == 0,
            detail.str());
}

void criterion7_extremal_bound() {
  int over = 0;
  int graphs = 0;
  for (std::uint64_t seed = 0; seed < kCorpusSize; ++seed) {
    const Graph g = support::corpus_graph(seed).graph;
    ++graphs;
    if (g.edge_count() > max_c4free_edges(g.vertex_count())) ++over;
  }
  for (const int n : {100, 300, 1000}) {
    GenConfig cfg;
    cfg.n = n;
    cfg.target_m = static_cast<int>(max_c4free_edges(n));
    cfg.seed = 1000 + n;
    cfg.max_attempts = default_gen_attempts(cfg.target_m);
    const Graph g = gen_c4free(cfg).graph;
    ++graphs;
    if (g.edge_count() > max_c4free_edges(n)) ++over;
  }
  std::ostringstream detail;
  detail << graphs << " generated graphs, " << over << " over the bound";
  criterion(7, "extremal edge bound on generated graphs", over == 0,
            detail.str());
}

void criterion8_scaling() {
  const std::vector<int> sizes = {1000, 2000, 4000};
  const std::vector<BenchRow> rows = run_bench(sizes, 0.5, 8, 5);
  const double r_tri_1 = rows[1].t_triangles_ms / rows[0].t_triangles_ms;
  const double r_tri_2 = rows[2].t_triangles_ms / rows[1].t_triangles_ms;
  const double r_gen_1 = rows[1].t_general_ms / rows[0].t_general_ms;
  const double r_gen_2 = rows[2].t_general_ms / rows[1].t_general_ms;
  bool in_band = true;
  for (const double r : {r_tri_1, r_tri_2, r_gen_1, r_gen_2})
    if (r < 2.0 || r > 8.0) in_band = false;
  bool fast_enough = true;
  for (const BenchRow& row : rows)
    if (row.t_triangles_ms > 30000.0 || row.t_general_ms > 30000.0)
      fast_enough = false;
  std::ostringstream detail;
  detail.precision(2);
  detail << std::fixed << "triangle ratios " << r_tri_1 << "," << r_tri_2
         << "; general ratios " << r_gen_1 << "," << r_gen_2 << "; t(4000)="
         << rows[2].t_general_ms << " ms";
  criterion(8, "quadratic scaling at n=1000/2000/4000", in_band && fast_enough,
            detail.str());
}

void criterion9_determinism() {
  bool pass = true;
  std::ostringstream detail;
  for (const std::string args :
       {std::string("general --fixture fig19 --format json --no-timing"),
        std::string("special --fixture pentagon --format json --no-timing"),
        std::string("triangles --fixture petersen --format json --no-timing"),
        std::string("oracle --fixture three_spoke --format json "
                    "--no-timing")}) {
    const std::string a = run_cli(args);
    const std::string b = run_cli(args);
    if (a.empty() || a != b) {
      pass = false;
      detail << "mismatch on: " << args << "; ";
    }
  }
  const std::string gen_args = "gen --n 50 --m 80 --seed 5 --out -";
  if (run_cli(gen_args) != run_cli(gen_args)) {
    pass = false;
    detail << "mismatch on: " << gen_args << "; ";
  }
  if (pass) detail << "5 commands byte-identical across two runs";
  criterion(9, "byte-identical JSON output", pass, detail.str());
}

}  // namespace

int main() {
  criterion1_general_equivalence();
  criterion2_special_equivalence();
  criterion3_triangles();
  criterion4_appendix();
  criterion5_named_values();
  criterion6_witness_structure();
  criterion7_extremal_bound();
  criterion8_scaling();
  criterion9_determinism();
  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures;
}
