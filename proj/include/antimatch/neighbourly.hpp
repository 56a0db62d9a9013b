#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "antimatch/graph.hpp"
#include "antimatch/triangles.hpp"

namespace antimatch {

// Structural kind of a neighbourly-set witness.
struct EmptyKind {};
struct EdgePairKind {
  Edge base;  // all witness edges are incident at base.u or base.v
};
struct TriangleWitnessKind {
  Triangle tri;  // witness = E_a + E_b + E_c of this triangle
};
struct PentagonKind {
  std::array<VertexId, 5> cycle;  // 5-cycle in traversal order
};
struct SpokesKind {
  VertexId center = -1;
  int spoke_count = 0;        // 2 or 3 length-two spokes
  std::vector<Edge> outer;    // the outer spoke edges, not incident at center
};
struct OracleKind {};

using WitnessKind = std::variant<EmptyKind, EdgePairKind, TriangleWitnessKind,
                                 PentagonKind, SpokesKind, OracleKind>;

// A neighbourly set result: cardinality, canonical edge list and the
// structural kind it was found as.
struct Witness {
  int cardinality = 0;
  std::vector<Edge> edges;
  WitnessKind kind = EmptyKind{};

  static Witness empty() { return Witness{}; }
};

inline const char* kind_name(const Witness& w) {
  struct Namer {
    const char* operator()(const EmptyKind&) const { return "empty"; }
    const char* operator()(const EdgePairKind&) const { return "edge_pair"; }
    const char* operator()(const TriangleWitnessKind&) const {
      return "triangle";
    }
    const char* operator()(const PentagonKind&) const { return "pentagon"; }
    const char* operator()(const SpokesKind&) const { return "spokes"; }
    const char* operator()(const OracleKind&) const { return "oracle"; }
  };
  return std::visit(Namer{}, w.kind);
}

namespace detail {

inline void require_edge(const Graph& g, const Edge& e, const char* who) {
  if (e.u < 0 || e.v >= g.vertex_count() || !g.adjacent(e.u, e.v))
    throw std::invalid_argument(std::string(who) + ": edge " +
                                std::to_string(e.u) + " " +
                                std::to_string(e.v) + " not in graph");
}

inline std::vector<Edge> canonical_edge_set(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

inline Witness make_witness(std::vector<Edge> edges, WitnessKind kind) {
  Witness w;
  w.edges = canonical_edge_set(std::move(edges));
  w.cardinality = static_cast<int>(w.edges.size());
  w.kind = std::move(kind);
  return w;
}

// All triangles of an arbitrary graph via common-neighbor row intersection;
// complete on any input (used by structure_report, which must stay exact
// when the graph is not quadrilateral-free).
inline std::vector<Triangle> all_triangles(const Graph& g) {
  std::vector<Triangle> out;
  const BitMatrix& m = g.matrix();
  for (const Edge& e : g.edges()) {
    for (std::size_t wi = 0; wi < m.row_words(); ++wi) {
      std::uint64_t common = m.row_word(e.u, wi) & m.row_word(e.v, wi);
      while (common) {
        const VertexId w =
            static_cast<VertexId>(wi * 64 + std::countr_zero(common));
        common &= common - 1;
        if (w > e.v) out.push_back({e.u, e.v, w});
      }
    }
  }
  return out;
}

}  // namespace detail

// True iff e and f share an endpoint or some graph edge joins an endpoint
// of e to an endpoint of f. O(1): at most four matrix lookups.
inline bool are_neighbourly(const Graph& g, const Edge& e, const Edge& f) {
  detail::require_edge(g, e, "are_neighbourly");
  detail::require_edge(g, f, "are_neighbourly");
  if (e.touches(f.u) || e.touches(f.v)) return true;
  return g.adjacent(e.u, f.u) || g.adjacent(e.u, f.v) ||
         g.adjacent(e.v, f.u) || g.adjacent(e.v, f.v);
}

// General mode: every pair of edges is neighbourly. Special mode: every
// pair either shares an endpoint or is joined by an edge that is itself in
// the given set.
inline bool verify_neighbourly(const Graph& g, const std::vector<Edge>& edges,
                               bool special) {
  for (const Edge& e : edges) detail::require_edge(g, e, "verify_neighbourly");
  const std::vector<Edge> set = detail::canonical_edge_set(edges);
  auto in_set = [&set](VertexId x, VertexId y) {
    return std::binary_search(set.begin(), set.end(), Edge(x, y));
  };
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const Edge &e = set[i], &f = set[j];
      if (e.touches(f.u) || e.touches(f.v)) continue;
      bool joined = false;
      for (VertexId x : {e.u, e.v}) {
        for (VertexId y : {f.u, f.v}) {
          if (g.adjacent(x, y) && (!special || in_set(x, y))) {
            joined = true;
            break;
          }
        }
        if (joined) break;
      }
      if (!joined) return false;
    }
  }
  return true;
}

// Best witness contained in E_u + E_v for a single edge uv: picks the edge
// maximizing degree(u) + degree(v); cardinality degree(u)+degree(v)-1.
// Ties break toward the lexicographically smallest edge. O(n + m).
inline Witness best_edge_pair(const Graph& g) {
  if (g.edge_count() == 0) return Witness::empty();
  Edge best = g.edges().front();
  int best_sum = -1;
  for (const Edge& e : g.edges()) {
    const int sum = g.degree(e.u) + g.degree(e.v);
    if (sum > best_sum) {
      best_sum = sum;
      best = e;
    }
  }
  std::vector<Edge> edges = g.incident_edges(best.u);
  const std::vector<Edge> more = g.incident_edges(best.v);
  edges.insert(edges.end(), more.begin(), more.end());
  return detail::make_witness(std::move(edges), EdgePairKind{best});
}

// Best witness of the form E_a + E_b + E_c over the given triangles
// (normally the full output of enumerate_triangles); cardinality
// d_a + d_b + d_c - 3. Ties break lexicographically.
inline std::optional<Witness> best_triangle(const Graph& g,
                                            const std::vector<Triangle>& tris) {
  if (tris.empty()) return std::nullopt;
  const Triangle* best = nullptr;
  int best_sum = -1;
  for (const Triangle& t : tris) {
    const int sum = g.degree(t.a) + g.degree(t.b) + g.degree(t.c);
    if (sum > best_sum || (sum == best_sum && t < *best)) {
      best_sum = sum;
      best = &t;
    }
  }
  std::vector<Edge> edges = g.incident_edges(best->a);
  for (VertexId x : {best->b, best->c}) {
    const std::vector<Edge> more = g.incident_edges(x);
    edges.insert(edges.end(), more.begin(), more.end());
  }
  return detail::make_witness(std::move(edges), TriangleWitnessKind{*best});
}

// First 5-cycle in canonical order: depth-5 path search from each vertex in
// id order, where the start is the cycle's minimum vertex and the second
// vertex is smaller than the last (killing reflections). Requires maximum
// degree <= 4, which the callers' cardinality-<5 guard guarantees; O(n).
inline std::optional<Witness> find_pentagon(const Graph& g) {
  if (g.max_degree() > 4)
    throw std::logic_error("find_pentagon: maximum degree exceeds 4");
  const int n = g.vertex_count();
  std::array<VertexId, 5> path{};
  for (VertexId s = 0; s < n; ++s) {
    path[0] = s;
    auto extend = [&](auto&& self, int depth) -> bool {
      if (depth == 5)
        return g.adjacent(path[4], s) && path[1] < path[4];
      for (VertexId w : g.neighbors(path[depth - 1])) {
        if (w <= s) continue;  // start must stay the cycle minimum
        bool used = false;
        for (int i = 1; i < depth; ++i)
          if (path[i] == w) {
            used = true;
            break;
          }
        if (used) continue;
        path[depth] = w;
        if (self(self, depth + 1)) return true;
      }
      return false;
    };
    if (extend(extend, 1)) {
      std::vector<Edge> edges;
      for (int i = 0; i < 5; ++i) edges.emplace_back(path[i], path[(i + 1) % 5]);
      return detail::make_witness(std::move(edges), PentagonKind{path});
    }
  }
  return std::nullopt;
}

// Searches for a center x with k length-two spokes (k in {2,3}) beating
// best_so_far, i.e. with degree(x) + k > best_so_far. Vertices are visited
// in decreasing degree order (ties toward smaller ids); x qualifies only
// when every neighbor of x has degree <= k. For k=2 the two outer spoke
// ends must be joined by an edge; for k=3 the three outer ends must form a
// triangle of the subgraph induced by N^2[x], each end adjacent to a
// distinct neighbor of x. Per-vertex cost O(d_x^2), total O(sum d_i^2).
inline std::optional<Witness> spoke_search(const Graph& g, int k,
                                           int best_so_far) {
  if (k != 2 && k != 3)
    throw std::invalid_argument("spoke_search: k must be 2 or 3");
  const int n = g.vertex_count();
  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&g](VertexId a, VertexId b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
  });

  for (VertexId x : order) {
    if (g.degree(x) + k <= best_so_far) break;  // degrees only drop from here
    bool low_neighbors = true;
    for (VertexId u : g.neighbors(x))
      if (g.degree(u) > k) {
        low_neighbors = false;
        break;
      }
    if (!low_neighbors) continue;

    if (k == 2) {
      // Each neighbor has degree <= 2: at most one outer end per spoke.
      std::vector<std::pair<VertexId, VertexId>> spokes;  // (mid u, outer v)
      for (VertexId u : g.neighbors(x))
        for (VertexId w : g.neighbors(u))
          if (w != x) spokes.emplace_back(u, w);
      for (std::size_t i = 0; i < spokes.size(); ++i) {
        for (std::size_t j = i + 1; j < spokes.size(); ++j) {
          const auto [ui, vi] = spokes[i];
          const auto [uj, vj] = spokes[j];
          if (vi == vj || !g.adjacent(vi, vj)) continue;
          const Edge oi(ui, vi), oj(uj, vj);
          if (oi == oj) continue;
          std::vector<Edge> edges = g.incident_edges(x);
          edges.push_back(oi);
          edges.push_back(oj);
          Witness w = detail::make_witness(std::move(edges),
                                           SpokesKind{x, 2, {oi, oj}});
          if (w.cardinality == g.degree(x) + 2) return w;
        }
      }
    } else {
      // Outer candidates N^2[x]: non-x neighbors of neighbors, <= 2 per
      // spoke midpoint, hence at most 2*d_x vertices.
      std::vector<VertexId> outer;
      for (VertexId u : g.neighbors(x))
        for (VertexId w : g.neighbors(u))
          if (w != x) outer.push_back(w);
      std::sort(outer.begin(), outer.end());
      outer.erase(std::unique(outer.begin(), outer.end()), outer.end());
      if (outer.size() < 3) continue;

      std::vector<Edge> local;
      for (std::size_t i = 0; i < outer.size(); ++i)
        for (std::size_t j = i + 1; j < outer.size(); ++j)
          if (g.adjacent(outer[i], outer[j]))
            local.emplace_back(static_cast<VertexId>(i),
                               static_cast<VertexId>(j));
      const Graph induced =
          Graph::from_edges(static_cast<int>(outer.size()), std::move(local));

      for (const Triangle& t : enumerate_triangles(induced)) {
        const std::array<VertexId, 3> ends{outer[t.a], outer[t.b], outer[t.c]};
        // Midpoint candidates per end: neighbors of x adjacent to it.
        std::array<std::vector<VertexId>, 3> mids;
        for (int i = 0; i < 3; ++i)
          for (VertexId u : g.neighbors(x))
            if (g.adjacent(u, ends[i])) mids[i].push_back(u);
        for (VertexId m0 : mids[0]) {
          for (VertexId m1 : mids[1]) {
            if (m1 == m0) continue;
            for (VertexId m2 : mids[2]) {
              if (m2 == m0 || m2 == m1) continue;
              const Edge o0(m0, ends[0]), o1(m1, ends[1]), o2(m2, ends[2]);
              if (o0 == o1 || o0 == o2 || o1 == o2) continue;
              std::vector<Edge> edges = g.incident_edges(x);
              edges.insert(edges.end(), {o0, o1, o2});
              Witness w = detail::make_witness(
                  std::move(edges), SpokesKind{x, 3, {o0, o1, o2}});
              if (w.cardinality == g.degree(x) + 3) return w;
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

// Maximum-cardinality special neighbourly set: the better of the best
// edge-pair and best triangle witnesses; when both stay below five, a
// pentagon (cardinality five) is searched for instead. O(n^2) total.
// Requires a quadrilateral-free input (caller-verified).
inline Witness max_special(const Graph& g) {
  Witness best = best_edge_pair(g);
  if (const auto tri = best_triangle(g, enumerate_triangles(g)))
    if (tri->cardinality > best.cardinality) best = *tri;
  if (best.cardinality < 5) {
    // cardinality < 5 forces degree(u)+degree(v) <= 5 on every edge, so the
    // maximum degree is at most 4 and find_pentagon's contract holds.
    if (const auto p = find_pentagon(g)) best = *p;
  }
  return best;
}

// Maximum-cardinality (general) neighbourly set over the four candidate
// families: triangle, pentagon, edge pair, and two/three-spoke centers.
// The pentagon is searched only while both the triangle and edge-pair
// candidates stay below five (which also guarantees find_pentagon's degree
// bound); spoke candidates are accepted at equal cardinality so that a
// spoke-structured optimum is reported as such. O(n^2) total. Requires a
// quadrilateral-free input (caller-verified).
inline Witness max_neighbourly(const Graph& g) {
  Witness best;
  if (const auto tri = best_triangle(g, enumerate_triangles(g))) best = *tri;
  const Witness pair = best_edge_pair(g);
  if (best.cardinality < 5 && pair.cardinality < 5) {
    if (const auto p = find_pentagon(g)) best = *p;
  }
  if (pair.cardinality > best.cardinality) best = pair;
  const int maxdeg = g.max_degree();
  for (const int k : {3, 2}) {
    if (maxdeg + k < best.cardinality) continue;
    if (const auto s = spoke_search(g, k, best.cardinality - 1))
      if (s->cardinality >= best.cardinality) best = *s;
  }
  return best;
}

// Classification of a verified neighbourly set A against the three
// containment conditions: a triangle abc with A inside E_a+E_b+E_c, an
// edge uv with A inside E_u+E_v, and the vertex u minimizing |A \ E_u|.
struct StructureReport {
  std::optional<Triangle> covering_triangle;
  std::optional<Edge> covering_edge;
  VertexId min_outside_vertex = -1;
  int min_outside_count = 0;
};

inline StructureReport structure_report(const Graph& g,
                                        const std::vector<Edge>& edges) {
  if (!verify_neighbourly(g, edges, false))
    throw std::invalid_argument("structure_report: not a neighbourly set");
  const std::vector<Edge> set = detail::canonical_edge_set(edges);
  StructureReport report;
  report.min_outside_count = static_cast<int>(set.size());

  for (const Triangle& t : detail::all_triangles(g)) {
    bool covers = true;
    for (const Edge& e : set)
      if (!e.touches(t.a) && !e.touches(t.b) && !e.touches(t.c)) {
        covers = false;
        break;
      }
    if (covers) {
      report.covering_triangle = t;
      break;
    }
  }
  for (const Edge& uv : g.edges()) {
    bool covers = true;
    for (const Edge& e : set)
      if (!e.touches(uv.u) && !e.touches(uv.v)) {
        covers = false;
        break;
      }
    if (covers) {
      report.covering_edge = uv;
      break;
    }
  }
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    int outside = 0;
    for (const Edge& e : set)
      if (!e.touches(u)) ++outside;
    if (report.min_outside_vertex < 0 || outside < report.min_outside_count) {
      report.min_outside_vertex = u;
      report.min_outside_count = outside;
    }
  }
  return report;
}

}  // namespace antimatch
