#pragma once

// Test-side helpers: independent brute-force oracles and small-graph
// utilities. Everything here stays independent of the implementation
// paths it cross-checks.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "antimatch/antimatch.hpp"

namespace support {

using antimatch::Edge;
using antimatch::Graph;
using antimatch::VertexId;

inline Graph graph_of(int n, std::vector<Edge> edges) {
  return Graph::from_edges(n, std::move(edges));
}

// Deterministic small C4-free corpus entry: n in [3,12], m <= 20.
inline antimatch::GenResult corpus_graph(std::uint64_t seed) {
  antimatch::SplitMix64 rng(seed);
  const int n = 3 + static_cast<int>(rng.bounded(10));
  const long long cap = std::min<long long>(20, antimatch::max_c4free_edges(n));
  antimatch::GenConfig cfg;
  cfg.n = n;
  cfg.target_m = static_cast<int>(rng.bounded(cap + 1));
  cfg.seed = rng.next();
  cfg.max_attempts = 4000;
  return antimatch::gen_c4free(cfg);
}

// Exhaustive 4-subset scan: some quadrilateral as a vertex cycle, if any.
inline bool naive_has_c4(const Graph& g) {
  const int n = g.vertex_count();
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      for (VertexId c = b + 1; c < n; ++c)
        for (VertexId d = c + 1; d < n; ++d) {
          // three distinct cyclic orders of {a,b,c,d}
          const std::array<std::array<VertexId, 4>, 3> orders = {
              {{a, b, c, d}, {a, b, d, c}, {a, c, b, d}}};
          for (const auto& o : orders) {
            bool cycle = true;
            for (int i = 0; i < 4 && cycle; ++i)
              cycle = g.adjacent(o[i], o[(i + 1) % 4]);
            if (cycle) return true;
          }
        }
  return false;
}

// Exhaustive scan for a 5-cycle (fixes the minimum vertex, permutes the
// remaining four).
inline bool naive_has_c5(const Graph& g) {
  const int n = g.vertex_count();
  std::array<VertexId, 4> rest{};
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      for (VertexId c = b + 1; c < n; ++c)
        for (VertexId d = c + 1; d < n; ++d)
          for (VertexId e = d + 1; e < n; ++e) {
            rest = {b, c, d, e};
            std::sort(rest.begin(), rest.end());
            do {
              bool cycle = g.adjacent(a, rest[0]) &&
                           g.adjacent(rest[0], rest[1]) &&
                           g.adjacent(rest[1], rest[2]) &&
                           g.adjacent(rest[2], rest[3]) &&
                           g.adjacent(rest[3], a);
              if (cycle) return true;
            } while (std::next_permutation(rest.begin(), rest.end()));
          }
  return false;
}

// Plain all-subsets maximum over verify_neighbourly; usable for m <= ~16.
inline int subsets_max(const Graph& g, bool special) {
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  int best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    std::vector<Edge> subset;
    for (int i = 0; i < m; ++i)
      if (mask & (std::uint64_t{1} << i)) subset.push_back(edges[i]);
    if (antimatch::verify_neighbourly(g, subset, special)) best = size;
  }
  return best;
}

// --- helpers over a bare edge set (the subgraph (V[A], A)) ---

struct EdgeSubgraph {
  std::vector<VertexId> verts;
  std::vector<std::vector<int>> adj;  // by local index

  explicit EdgeSubgraph(const std::vector<Edge>& edges) {
    std::set<VertexId> vs;
    for (const Edge& e : edges) {
      vs.insert(e.u);
      vs.insert(e.v);
    }
    verts.assign(vs.begin(), vs.end());
    adj.resize(verts.size());
    auto local = [this](VertexId v) {
      return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                              verts.begin());
    };
    for (const Edge& e : edges) {
      adj[local(e.u)].push_back(local(e.v));
      adj[local(e.v)].push_back(local(e.u));
    }
  }
};

// Length (in edges) of the longest simple path within the edge set.
inline int longest_path_edges(const std::vector<Edge>& edges) {
  const EdgeSubgraph sg(edges);
  const int k = static_cast<int>(sg.verts.size());
  int best = 0;
  std::vector<bool> used(k, false);
  auto dfs = [&](auto&& self, int v, int len) -> void {
    best = std::max(best, len);
    for (int w : sg.adj[v]) {
      if (used[w]) continue;
      used[w] = true;
      self(self, w, len + 1);
      used[w] = false;
    }
  };
  for (int s = 0; s < k; ++s) {
    used[s] = true;
    dfs(dfs, s, 0);
    used[s] = false;
  }
  return best;
}

// Length of the longest simple cycle within the edge set (0 if acyclic).
inline int longest_cycle_len(const std::vector<Edge>& edges) {
  const EdgeSubgraph sg(edges);
  const int k = static_cast<int>(sg.verts.size());
  int best = 0;
  std::vector<bool> used(k, false);
  auto dfs = [&](auto&& self, int start, int v, int len) -> void {
    for (int w : sg.adj[v]) {
      if (w == start && len >= 2) best = std::max(best, len + 1);
      if (w <= start || used[w]) continue;
      used[w] = true;
      self(self, start, w, len + 1);
      used[w] = false;
    }
  };
  for (int s = 0; s < k; ++s) dfs(dfs, s, s, 0);
  return best;
}

// All 5-cycles within the edge set, as sorted vertex sets.
inline std::vector<std::set<VertexId>> five_cycles_in(
    const std::vector<Edge>& edges) {
  const EdgeSubgraph sg(edges);
  const int k = static_cast<int>(sg.verts.size());
  std::vector<std::set<VertexId>> out;
  std::vector<int> path;
  std::vector<bool> used(k, false);
  auto dfs = [&](auto&& self, int start, int v) -> void {
    if (path.size() == 5) {
      bool closes = false;
      for (int w : sg.adj[v])
        if (w == start) closes = true;
      if (closes && path[1] < path[4]) {
        std::set<VertexId> cyc;
        for (int p : path) cyc.insert(sg.verts[p]);
        out.push_back(std::move(cyc));
      }
      return;
    }
    for (int w : sg.adj[v]) {
      if (w <= start || used[w]) continue;
      used[w] = true;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      used[w] = false;
    }
  };
  for (int s = 0; s < k; ++s) {
    path = {s};
    dfs(dfs, s, s);
  }
  return out;
}

// All triangles formed by edges of the set, in original vertex ids.
inline std::vector<std::array<VertexId, 3>> triangles_in(
    const std::vector<Edge>& edges) {
  std::set<Edge> es(edges.begin(), edges.end());
  std::set<VertexId> vs;
  for (const Edge& e : edges) {
    vs.insert(e.u);
    vs.insert(e.v);
  }
  const std::vector<VertexId> verts(vs.begin(), vs.end());
  std::vector<std::array<VertexId, 3>> out;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (!es.count(Edge(verts[i], verts[j]))) continue;
      for (std::size_t l = j + 1; l < verts.size(); ++l)
        if (es.count(Edge(verts[j], verts[l])) &&
            es.count(Edge(verts[i], verts[l])))
          out.push_back({verts[i], verts[j], verts[l]});
    }
  return out;
}

// Relabels a graph by the permutation new_id = perm[old_id].
inline Graph permuted(const Graph& g, const std::vector<VertexId>& perm) {
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph::from_edges(g.vertex_count(), std::move(edges));
}

}  // namespace support
