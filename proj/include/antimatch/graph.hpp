#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace antimatch {

using VertexId = int;

// Unordered vertex pair in canonical form (u < v).
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw std::invalid_argument("Edge: endpoints must differ");
  }

  bool touches(VertexId w) const { return u == w || v == w; }
  VertexId other(VertexId w) const { return u == w ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Packed symmetric boolean n x n matrix with a false diagonal.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n)
      : n_(n),
        row_words_((static_cast<std::size_t>(n) + 63) / 64),
        words_(row_words_ * static_cast<std::size_t>(n), 0) {}

  bool test(VertexId u, VertexId v) const {
    return (word(u, v) >> (v & 63)) & 1u;
  }
  void set(VertexId u, VertexId v) {
    word(u, v) |= std::uint64_t{1} << (v & 63);
    word(v, u) |= std::uint64_t{1} << (u & 63);
  }
  void reset(VertexId u, VertexId v) {
    word(u, v) &= ~(std::uint64_t{1} << (v & 63));
    word(v, u) &= ~(std::uint64_t{1} << (u & 63));
  }

  int size() const { return n_; }
  std::size_t row_words() const { return row_words_; }
  std::uint64_t row_word(VertexId u, std::size_t i) const {
    return words_[row_words_ * static_cast<std::size_t>(u) + i];
  }

 private:
  std::uint64_t& word(VertexId u, VertexId v) {
    return words_[row_words_ * static_cast<std::size_t>(u) +
                  (static_cast<std::size_t>(v) >> 6)];
  }
  const std::uint64_t& word(VertexId u, VertexId v) const {
    return words_[row_words_ * static_cast<std::size_t>(u) +
                  (static_cast<std::size_t>(v) >> 6)];
  }

  int n_ = 0;
  std::size_t row_words_ = 0;
  std::vector<std::uint64_t> words_;
};

// Immutable simple undirected graph: sorted adjacency lists, packed
// adjacency matrix and a degree table. Construction is O(n^2) for the
// matrix allocation and O(n + m) beyond it.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(int n, std::vector<Edge> edges) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    Graph g;
    g.n_ = n;
    g.matrix_ = BitMatrix(n);
    g.adj_.resize(n);
    g.degree_.assign(n, 0);
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v >= n)
        throw std::invalid_argument("Graph: vertex id out of range");
      if (e.u == e.v) throw std::invalid_argument("Graph: self-loop");
      if (g.matrix_.test(e.u, e.v))
        throw std::invalid_argument("Graph: duplicate edge");
      g.matrix_.set(e.u, e.v);
      g.adj_[e.u].push_back(e.v);
      g.adj_[e.v].push_back(e.u);
      ++g.degree_[e.u];
      ++g.degree_[e.v];
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    std::sort(edges.begin(), edges.end());
    g.edges_ = std::move(edges);
    g.m_ = static_cast<int>(g.edges_.size());
    return g;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  // Canonically sorted edge list.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
  int degree(VertexId v) const { return degree_[v]; }
  int max_degree() const {
    return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
  }

  // O(1) unchecked adjacency lookup; see is_edge() for the checked form.
  bool adjacent(VertexId u, VertexId v) const { return matrix_.test(u, v); }
  const BitMatrix& matrix() const { return matrix_; }

  // All edges incident at v, canonically sorted.
  std::vector<Edge> incident_edges(VertexId v) const {
    std::vector<Edge> out;
    out.reserve(adj_[v].size());
    for (VertexId w : adj_[v]) out.emplace_back(v, w);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<int> degree_;
  BitMatrix matrix_;
};

enum class ParseErrorKind {
  bad_header,
  bad_edge_line,
  vertex_out_of_range,
  self_loop,
  duplicate_edge,
  missing_edges,
  trailing_data,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        kind_(kind),
        line_(line) {}

  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

// Edge-list text format: first non-comment line "<n> <m>", then exactly m
// lines "<u> <v>" with 0 <= u,v < n. Lines starting with '#' and blank
// lines are ignored; trailing newline optional.
inline Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;

  auto significant = [](const std::string& s) {
    auto pos = s.find_first_not_of(" \t\r");
    return pos != std::string::npos && s[pos] != '#';
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!significant(line)) continue;
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0)
      throw ParseError(ParseErrorKind::bad_header, line_no,
                       "malformed header, expected \"<n> <m>\"");
    break;
  }
  if (n < 0)
    throw ParseError(ParseErrorKind::bad_header, line_no + 1,
                     "missing header line \"<n> <m>\"");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  BitMatrix seen(static_cast<int>(n));
  long long remaining = m;

  while (std::getline(in, line)) {
    ++line_no;
    if (!significant(line)) continue;
    if (remaining == 0)
      throw ParseError(ParseErrorKind::trailing_data, line_no,
                       "unexpected content after " + std::to_string(m) +
                           " edges");
    std::istringstream es(line);
    long long u, v;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra))
      throw ParseError(ParseErrorKind::bad_edge_line, line_no,
                       "malformed edge line, expected \"<u> <v>\"");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(ParseErrorKind::vertex_out_of_range, line_no,
                       "vertex id out of range [0, " + std::to_string(n) +
                           ")");
    if (u == v)
      throw ParseError(ParseErrorKind::self_loop, line_no,
                       "self-loop at vertex " + std::to_string(u));
    Edge e(static_cast<VertexId>(u), static_cast<VertexId>(v));
    if (seen.test(e.u, e.v))
      throw ParseError(ParseErrorKind::duplicate_edge, line_no,
                       "duplicate edge " + std::to_string(e.u) + " " +
                           std::to_string(e.v));
    seen.set(e.u, e.v);
    edges.push_back(e);
    --remaining;
  }
  if (remaining != 0)
    throw ParseError(ParseErrorKind::missing_edges, line_no + 1,
                     "expected " + std::to_string(m) + " edges, got " +
                         std::to_string(m - remaining));

  return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

// Checked O(1) edge query.
inline bool is_edge(const Graph& g, VertexId u, VertexId v) {
  if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
    throw std::out_of_range("is_edge: vertex id out of range");
  if (u == v) throw std::invalid_argument("is_edge: identical endpoints");
  return g.adjacent(u, v);
}

namespace detail {

// Canonical representative of a 4-cycle given in cycle order: minimum
// vertex first, then the smaller of the two traversal directions.
inline std::array<VertexId, 4> canonical_cycle4(std::array<VertexId, 4> c) {
  std::array<VertexId, 4> best = c;
  for (int rot = 0; rot < 4; ++rot) {
    std::array<VertexId, 4> fwd{c[rot % 4], c[(rot + 1) % 4], c[(rot + 2) % 4],
                                c[(rot + 3) % 4]};
    std::array<VertexId, 4> rev{c[rot % 4], c[(rot + 3) % 4], c[(rot + 2) % 4],
                                c[(rot + 1) % 4]};
    best = std::min(best, std::min(fwd, rev));
  }
  return best;
}

}  // namespace detail

// Finds some 4-cycle (a,b,c,d) with edges ab,bc,cd,da, or nullopt if the
// graph is quadrilateral-free. Scans every vertex's neighbor pairs and
// detects a pair of vertices with two common neighbors; O(sum d_v^2).
inline std::optional<std::array<VertexId, 4>> find_quadrilateral(
    const Graph& g) {
  const int n = g.vertex_count();
  if (n < 4) return std::nullopt;
  // first_center[u*n + w] = first vertex seen with both u and w as neighbors
  std::vector<std::int32_t> first_center(static_cast<std::size_t>(n) * n, -1);
  for (VertexId v = 0; v < n; ++v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const VertexId u = nb[i], w = nb[j];
        std::int32_t& slot =
            first_center[static_cast<std::size_t>(u) * n + w];
        if (slot >= 0)
          return detail::canonical_cycle4({u, slot, w, v});
        slot = v;
      }
    }
  }
  return std::nullopt;
}

// Extremal bound: a quadrilateral-free graph on n vertices has at most
// floor(n/4 * (1 + sqrt(4n-3))) edges.
inline long long max_c4free_edges(long long n) {
  if (n <= 0) return 0;
  return static_cast<long long>(
      std::floor(static_cast<double>(n) *
                 (1.0 + std::sqrt(4.0 * static_cast<double>(n) - 3.0)) / 4.0));
}

}  // namespace antimatch
