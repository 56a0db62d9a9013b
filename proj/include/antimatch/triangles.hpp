#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "antimatch/graph.hpp"

namespace antimatch {

// Sorted vertex triple (a < b < c).
struct Triangle {
  VertexId a = 0;
  VertexId b = 0;
  VertexId c = 0;

  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

inline Triangle make_triangle(VertexId x, VertexId y, VertexId z) {
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
  return Triangle{x, y, z};
}

namespace detail {

// Peeling state: live degrees, per-degree buckets with a moving minimum
// pointer, and a mutable edge-presence overlay over the base matrix. Ties
// inside a bucket break toward the smallest vertex id.
class PeelState {
 public:
  explicit PeelState(const Graph& g)
      : live_(g.matrix()),
        degree_(g.vertex_count()),
        deleted_(g.vertex_count(), false),
        bucket_(g.vertex_count() + 1) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      degree_[v] = g.degree(v);
      bucket_[degree_[v]].insert(v);
    }
  }

  bool live_edge(VertexId u, VertexId v) const { return live_.test(u, v); }

  void drop_edge(VertexId u, VertexId v) {
    live_.reset(u, v);
    lower_degree(u);
    lower_degree(v);
  }

  // Smallest-id vertex of minimum live degree; -1 once everything is gone.
  VertexId take_min_vertex() {
    while (min_degree_ < static_cast<int>(bucket_.size()) &&
           bucket_[min_degree_].empty())
      ++min_degree_;
    if (min_degree_ >= static_cast<int>(bucket_.size())) return -1;
    return *bucket_[min_degree_].begin();
  }

  void delete_vertex(VertexId v) {
    bucket_[degree_[v]].erase(v);
    deleted_[v] = true;
  }

  bool is_deleted(VertexId v) const { return deleted_[v]; }

 private:
  void lower_degree(VertexId v) {
    bucket_[degree_[v]].erase(v);
    --degree_[v];
    bucket_[degree_[v]].insert(v);
    if (degree_[v] < min_degree_) min_degree_ = degree_[v];
  }

  BitMatrix live_;
  std::vector<int> degree_;
  std::vector<bool> deleted_;
  std::vector<std::set<VertexId>> bucket_;
  int min_degree_ = 0;
};

}  // namespace detail

// Enumerates every triangle of a quadrilateral-free graph exactly once by
// repeated minimum-degree peeling: take a minimum-degree live vertex v,
// test its live neighbor pairs (u,w) for the edge uw, emit uvw and delete
// the three triangle edges when found, then delete v with its remaining
// edges. Each step costs O(d_min^2) = O(n) on C4-free inputs, O(n^2) total.
//
// Output order is deterministic: peel order, then lexicographic pair order.
// If the input contains a quadrilateral the one-triangle-per-edge property
// fails and triangles may be missed; callers guard for that upstream.
inline std::vector<Triangle> enumerate_triangles(const Graph& g) {
  std::vector<Triangle> out;
  detail::PeelState peel(g);
  for (int step = 0; step < g.vertex_count(); ++step) {
    const VertexId v = peel.take_min_vertex();
    if (v < 0) break;
    std::vector<VertexId> live_nb;
    for (VertexId u : g.neighbors(v))
      if (peel.live_edge(v, u)) live_nb.push_back(u);
    for (std::size_t i = 0; i < live_nb.size(); ++i) {
      const VertexId u = live_nb[i];
      for (std::size_t j = i + 1; j < live_nb.size(); ++j) {
        const VertexId w = live_nb[j];
        if (!peel.live_edge(v, u)) break;  // u died in an earlier triangle
        if (!peel.live_edge(v, w) || !peel.live_edge(u, w)) continue;
        out.push_back(make_triangle(u, v, w));
        peel.drop_edge(v, u);
        peel.drop_edge(v, w);
        peel.drop_edge(u, w);
      }
    }
    for (VertexId u : live_nb)
      if (peel.live_edge(v, u)) peel.drop_edge(v, u);
    peel.delete_vertex(v);
  }
  return out;
}

// Oracle: all triangles by O(n^3) triple scan, canonically sorted. Works
// on any graph.
inline std::vector<Triangle> naive_triangles(const Graph& g) {
  std::vector<Triangle> out;
  const int n = g.vertex_count();
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (VertexId c = b + 1; c < n; ++c)
        if (g.adjacent(b, c) && g.adjacent(a, c)) out.push_back({a, b, c});
    }
  return out;
}

}  // namespace antimatch
