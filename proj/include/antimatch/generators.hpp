#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "antimatch/graph.hpp"

namespace antimatch {

// Deterministic 64-bit generator (splitmix64). Update rule, for
// reproducing corpora in other languages:
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// Bounded draws are plain modulo: bounded(k) = next() % k.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t bounded(std::uint64_t k) { return next() % k; }

 private:
  std::uint64_t state_;
};

struct GenConfig {
  int n = 1;
  int target_m = 0;
  std::uint64_t seed = 0;
  long max_attempts = 0;
};

// Generation result; achieved edge count may fall short of target_m when
// the attempt budget runs out (not an error).
struct GenResult {
  Graph graph;
  int target_m = 0;
  long attempts_used = 0;
};

inline long default_gen_attempts(long long target_m) {
  return static_cast<long>(50 * target_m + 1000);
}

// Seeded rejection sampling of a quadrilateral-free graph: starting from
// the empty graph, propose a uniform random vertex pair per attempt and
// accept it iff it is a fresh non-edge whose insertion creates no C4,
// i.e. there is no u-v path of length three and no pair of common
// neighbors. Pure function of (n, target_m, seed, max_attempts); the
// output is verified C4-free before returning.
inline GenResult gen_c4free(const GenConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("gen_c4free: n must be >= 1");
  if (cfg.target_m < 0)
    throw std::invalid_argument("gen_c4free: negative target_m");
  const int n = cfg.n;
  SplitMix64 rng(cfg.seed);
  std::vector<std::vector<VertexId>> adj(n);
  BitMatrix present(n);
  std::vector<Edge> edges;
  edges.reserve(cfg.target_m);

  auto creates_c4 = [&](VertexId u, VertexId v) {
    int common = 0;
    for (VertexId w : adj[u])
      if (present.test(v, w) && ++common >= 2) return true;
    for (VertexId x : adj[u]) {
      if (x == v) continue;
      for (VertexId y : adj[v]) {
        if (y == u || y == x) continue;
        if (present.test(x, y)) return true;
      }
    }
    return false;
  };

  long attempts = 0;
  while (static_cast<int>(edges.size()) < cfg.target_m &&
         attempts < cfg.max_attempts) {
    ++attempts;
    const auto u = static_cast<VertexId>(rng.bounded(n));
    const auto v = static_cast<VertexId>(rng.bounded(n));
    if (u == v || present.test(u, v) || creates_c4(u, v)) continue;
    present.set(u, v);
    adj[u].push_back(v);
    adj[v].push_back(u);
    edges.emplace_back(u, v);
  }

  GenResult result{Graph::from_edges(n, std::move(edges)), cfg.target_m,
                   attempts};
  if (find_quadrilateral(result.graph))
    throw std::logic_error("gen_c4free: produced a quadrilateral");
  return result;
}

namespace detail {

inline Graph build(int n, std::vector<Edge> edges) {
  return Graph::from_edges(n, std::move(edges));
}

// Parses "name(k)" fixture forms; returns -1 when the name does not match.
inline long parse_sized_name(std::string_view name, std::string_view stem) {
  if (name.size() < stem.size() + 3 || name.substr(0, stem.size()) != stem ||
      name[stem.size()] != '(' || name.back() != ')')
    return -1;
  const std::string digits(name.substr(stem.size() + 1,
                                       name.size() - stem.size() - 2));
  if (digits.empty()) return -1;
  for (char c : digits)
    if (c < '0' || c > '9') return -1;
  return std::stol(digits);
}

}  // namespace detail

// Named fixture graphs with deterministic labels:
//   pentagon         C5 on 0..4
//   path(k)          path on k vertices
//   star(k)          K_{1,k}, center 0
//   petersen         the Petersen graph (outer 0..4, inner 5..9)
//   triangle_pendants  K3 with one pendant per vertex
//   pseudo_prism     pentagon 0..4 plus 5,6 with edges (0,5),(4,5),(5,6),(2,6)
//   three_spoke      center 0, spokes 0-1-4, 0-2-5, 0-3-6, triangle 4,5,6
//   two_spoke_leaf   center 0 with leaf 3, spokes 0-1-4, 0-2-5, edge (4,5)
//   fig19            three two-edge paths + one edge, mutually joined
inline Graph fixture(std::string_view name) {
  using detail::build;
  if (name == "pentagon")
    return build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  if (name == "petersen") {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
      e.emplace_back(i, (i + 1) % 5);          // outer cycle
      e.emplace_back(i, i + 5);                // spoke
      e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return build(10, std::move(e));
  }
  if (name == "triangle_pendants")
    return build(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
  if (name == "pseudo_prism")
    return build(7, {{0, 1},
                     {1, 2},
                     {2, 3},
                     {3, 4},
                     {0, 4},
                     {0, 5},
                     {4, 5},
                     {5, 6},
                     {2, 6}});
  if (name == "three_spoke")
    return build(7, {{0, 1},
                     {0, 2},
                     {0, 3},
                     {1, 4},
                     {2, 5},
                     {3, 6},
                     {4, 5},
                     {5, 6},
                     {4, 6}});
  if (name == "two_spoke_leaf")
    return build(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {4, 5}});
  if (name == "fig19") {
    // Vertices a..i,l,m -> 0..10: paths a-b-c, d-e-f, g-h-i, edge l-m,
    // triangle b,e,h and connectors al, cm, dl, fm, gl, im.
    return build(11, {{0, 1},
                      {1, 2},
                      {3, 4},
                      {4, 5},
                      {6, 7},
                      {7, 8},
                      {9, 10},
                      {1, 4},
                      {1, 7},
                      {4, 7},
                      {0, 9},
                      {2, 10},
                      {3, 9},
                      {5, 10},
                      {6, 9},
                      {8, 10}});
  }
  if (const long k = detail::parse_sized_name(name, "path"); k >= 0) {
    if (k < 1) throw std::invalid_argument("fixture: path(k) needs k >= 1");
    std::vector<Edge> e;
    for (long i = 0; i + 1 < k; ++i)
      e.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
    return build(static_cast<int>(k), std::move(e));
  }
  if (const long k = detail::parse_sized_name(name, "star"); k >= 0) {
    std::vector<Edge> e;
    for (long i = 1; i <= k; ++i)
      e.emplace_back(0, static_cast<VertexId>(i));
    return build(static_cast<int>(k + 1), std::move(e));
  }
  throw std::invalid_argument("fixture: unknown name \"" + std::string(name) +
                              "\"");
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "pentagon",     "path(k)",       "star(k)",
      "petersen",     "triangle_pendants", "pseudo_prism",
      "three_spoke",  "two_spoke_leaf",    "fig19"};
  return names;
}

}  // namespace antimatch
