#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "antimatch/graph.hpp"
#include "antimatch/neighbourly.hpp"

namespace antimatch {

// Size guards keeping every oracle call at desk scale.
inline constexpr int kOracleCliqueEdgeLimit = 64;
inline constexpr int kOracleSubsetEdgeLimit = 20;

class OracleLimitError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Derived graph on edge ids where adjacency is the neighbourly relation; a
// neighbourly set of the source graph is exactly a clique of this graph.
struct EdgeIndexedGraph {
  std::vector<Edge> edge_vertices;  // edge id -> source edge, canonical order
  std::vector<std::uint64_t> adjacency;  // packed m x m
  std::size_t row_words = 0;

  bool test(int i, int j) const {
    return (adjacency[row_words * static_cast<std::size_t>(i) +
                      (static_cast<std::size_t>(j) >> 6)] >>
            (j & 63)) &
           1u;
  }
};

// Builds the m-vertex derived graph by testing are_neighbourly on all edge
// pairs; O(m^2).
inline EdgeIndexedGraph line_graph_square(const Graph& g) {
  EdgeIndexedGraph lgs;
  lgs.edge_vertices = g.edges();
  const std::size_t m = lgs.edge_vertices.size();
  lgs.row_words = (m + 63) / 64;
  lgs.adjacency.assign(lgs.row_words * m, 0);
  auto set = [&lgs](std::size_t i, std::size_t j) {
    lgs.adjacency[lgs.row_words * i + (j >> 6)] |= std::uint64_t{1}
                                                   << (j & 63);
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (are_neighbourly(g, lgs.edge_vertices[i], lgs.edge_vertices[j])) {
        set(i, j);
        set(j, i);
      }
  return lgs;
}

namespace detail {

inline std::uint64_t bit64(int i) { return std::uint64_t{1} << i; }

// Max clique over <= 64 vertices given single-word adjacency rows.
// Branch-and-bound with a greedy-coloring bound; vertices are pre-ordered
// by descending degree and branching is lexicographic in that order, so
// the result is deterministic.
class CliqueSolver {
 public:
  explicit CliqueSolver(std::vector<std::uint64_t> adj)
      : adj_(std::move(adj)) {}

  std::uint64_t solve() {
    const std::uint64_t all =
        adj_.size() == 64 ? ~std::uint64_t{0}
                          : (std::uint64_t{1} << adj_.size()) - 1;
    expand(0, 0, all);
    return best_mask_;
  }

 private:
  int color_bound(std::uint64_t cand) const {
    int colors = 0;
    while (cand) {
      ++colors;
      std::uint64_t avail = cand;
      while (avail) {
        const int v = std::countr_zero(avail);
        cand &= ~bit64(v);
        avail &= ~(adj_[v] | bit64(v));
      }
    }
    return colors;
  }

  void expand(std::uint64_t clique, int size, std::uint64_t cand) {
    if (!cand) {
      if (size > best_size_) {
        best_size_ = size;
        best_mask_ = clique;
      }
      return;
    }
    if (size + color_bound(cand) <= best_size_) return;
    while (cand) {
      if (size + std::popcount(cand) <= best_size_) return;
      const int v = std::countr_zero(cand);
      cand &= ~bit64(v);
      expand(clique | bit64(v), size + 1, cand & adj_[v]);
    }
  }

  std::vector<std::uint64_t> adj_;
  std::uint64_t best_mask_ = 0;
  int best_size_ = 0;
};

}  // namespace detail

// Exact maximum neighbourly set as a maximum clique of line_graph_square.
// Deterministic; guarded to m <= 64 edges.
inline Witness oracle_max_neighbourly(const Graph& g) {
  const int m = g.edge_count();
  if (m > kOracleCliqueEdgeLimit)
    throw OracleLimitError("oracle_max_neighbourly: more than " +
                           std::to_string(kOracleCliqueEdgeLimit) + " edges");
  if (m == 0) return Witness::empty();
  const EdgeIndexedGraph lgs = line_graph_square(g);

  std::vector<int> deg(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && lgs.test(i, j)) ++deg[i];
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&deg](int a, int b) {
    return deg[a] != deg[b] ? deg[a] > deg[b] : a < b;
  });
  std::vector<std::uint64_t> adj(m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && lgs.test(order[a], order[b]))
        adj[a] |= detail::bit64(b);

  std::uint64_t mask = detail::CliqueSolver(std::move(adj)).solve();
  std::vector<Edge> edges;
  while (mask) {
    const int pos = std::countr_zero(mask);
    mask &= mask - 1;
    edges.push_back(lgs.edge_vertices[order[pos]]);
  }
  return detail::make_witness(std::move(edges), OracleKind{});
}

// Exact maximum special neighbourly set: edge subsets are visited in
// decreasing-cardinality order (lexicographically within one cardinality)
// and the first subset passing the special verification is returned.
// Subsets that are not cliques of line_graph_square cannot be special and
// are pruned during generation; the visiting order of the remaining
// subsets is unchanged. Guarded to m <= 20 edges.
inline Witness oracle_max_special(const Graph& g) {
  const int m = g.edge_count();
  if (m > kOracleSubsetEdgeLimit)
    throw OracleLimitError("oracle_max_special: more than " +
                           std::to_string(kOracleSubsetEdgeLimit) + " edges");
  if (m == 0) return Witness::empty();
  const EdgeIndexedGraph lgs = line_graph_square(g);

  std::vector<std::uint64_t> adj(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && lgs.test(i, j)) adj[i] |= detail::bit64(j);

  // share[i][j]: edges share an endpoint. join[i*m+j]: mask of edge ids
  // connecting an endpoint of edge i to an endpoint of edge j.
  std::map<Edge, int> edge_id;
  for (int i = 0; i < m; ++i) edge_id[lgs.edge_vertices[i]] = i;
  std::vector<std::uint64_t> join(static_cast<std::size_t>(m) * m, 0);
  std::vector<std::uint64_t> share(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const Edge &e = lgs.edge_vertices[i], &f = lgs.edge_vertices[j];
      if (e.touches(f.u) || e.touches(f.v)) {
        share[i] |= detail::bit64(j);
        continue;
      }
      std::uint64_t mask = 0;
      for (VertexId x : {e.u, e.v})
        for (VertexId y : {f.u, f.v})
          if (g.adjacent(x, y)) mask |= detail::bit64(edge_id[Edge(x, y)]);
      join[static_cast<std::size_t>(i) * m + j] = mask;
    }

  auto is_special = [&](std::uint64_t set) {
    for (std::uint64_t rest = set; rest;) {
      const int i = std::countr_zero(rest);
      rest &= rest - 1;
      for (std::uint64_t others = rest; others;) {
        const int j = std::countr_zero(others);
        others &= others - 1;
        if (share[i] & detail::bit64(j)) continue;
        if (!(join[static_cast<std::size_t>(i) * m + j] & set)) return false;
      }
    }
    return true;
  };

  const int upper = oracle_max_neighbourly(g).cardinality;
  std::vector<int> chosen;
  std::uint64_t found = 0;
  // Lexicographic generation of k-cliques over edge ids.
  auto generate = [&](auto&& self, int next_min, std::uint64_t cand, int k,
                      std::uint64_t set) -> bool {
    if (k == 0) {
      if (!is_special(set)) return false;
      found = set;
      return true;
    }
    for (int v = next_min; v <= m - k; ++v) {
      if (!(cand & detail::bit64(v))) continue;
      if (std::popcount(cand >> v) < k) return false;
      if (self(self, v + 1, cand & adj[v], k - 1, set | detail::bit64(v)))
        return true;
    }
    return false;
  };

  const std::uint64_t all =
      m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  for (int k = std::min(upper, m); k >= 1; --k) {
    if (generate(generate, 0, all, k, 0)) {
      std::vector<Edge> edges;
      for (std::uint64_t s = found; s;) {
        const int i = std::countr_zero(s);
        s &= s - 1;
        edges.push_back(lgs.edge_vertices[i]);
      }
      return detail::make_witness(std::move(edges), OracleKind{});
    }
  }
  return Witness::empty();
}

}  // namespace antimatch
