#pragma once

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <vector>

#include "antimatch/generators.hpp"
#include "antimatch/graph.hpp"
#include "antimatch/neighbourly.hpp"
#include "antimatch/triangles.hpp"

namespace antimatch {

struct BenchRow {
  int n = 0;
  int m = 0;
  long triangle_count = 0;
  int general_cardinality = 0;
  double t_triangles_ms = 0.0;
  double t_general_ms = 0.0;
};

namespace detail {

template <typename F>
double median_run_ms(int repeats, F&& body) {
  std::vector<double> times;
  times.reserve(repeats);
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const auto stop = std::chrono::steady_clock::now();
    times.push_back(
        std::chrono::duration<double, std::milli>(stop - start).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

}  // namespace detail

// Times enumerate_triangles and max_neighbourly (median of `repeats`) on a
// generated C4-free graph per size; density is the requested fraction of
// the extremal edge bound. Graphs depend only on (size, seed); timings are
// wall clock. Runs are sequential to keep measurements clean.
inline std::vector<BenchRow> run_bench(const std::vector<int>& sizes,
                                       double density, std::uint64_t seed,
                                       int repeats) {
  if (!std::is_sorted(sizes.begin(), sizes.end()) ||
      std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end())
    throw std::invalid_argument("run_bench: sizes must be ascending");
  if (density < 0.0 || density > 1.0)
    throw std::invalid_argument("run_bench: density must be in [0, 1]");
  if (repeats < 1) throw std::invalid_argument("run_bench: repeats must be >= 1");

  std::vector<BenchRow> rows;
  for (const int n : sizes) {
    GenConfig cfg;
    cfg.n = n;
    cfg.target_m = static_cast<int>(density * max_c4free_edges(n));
    cfg.seed = seed + static_cast<std::uint64_t>(n);
    cfg.max_attempts = default_gen_attempts(cfg.target_m);
    const Graph g = gen_c4free(cfg).graph;

    BenchRow row;
    row.n = n;
    row.m = g.edge_count();
    row.t_triangles_ms = detail::median_run_ms(repeats, [&] {
      row.triangle_count = static_cast<long>(enumerate_triangles(g).size());
    });
    row.t_general_ms = detail::median_run_ms(repeats, [&] {
      row.general_cardinality = max_neighbourly(g).cardinality;
    });
    rows.push_back(row);
  }
  return rows;
}

}  // namespace antimatch
