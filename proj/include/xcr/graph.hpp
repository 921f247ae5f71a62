#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xcr/count.hpp"

namespace xcr {

using VertexId = int;
using EdgeId = int;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Edge {
  VertexId u;  // u < v
  VertexId v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool touches(VertexId w) const { return w == u || w == v; }
  bool adjacent_to(const Edge& f) const {
    return touches(f.u) || touches(f.v);
  }
};

/// Simple undirected graph on vertices 0..n-1. Edge ids are positions in
/// edges(); endpoints are normalised so that u < v.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : incident_(n) {}
  Graph(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

  int vertex_count() const { return static_cast<int>(incident_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<EdgeId>& incident(VertexId v) const { return incident_[v]; }
  int degree(VertexId v) const { return static_cast<int>(incident_[v].size()); }

  VertexId add_vertex();
  /// Throws std::invalid_argument on loops, duplicates or unknown endpoints.
  EdgeId add_edge(VertexId a, VertexId b);
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  bool has_edge(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }
  std::vector<VertexId> neighbors(VertexId v) const;

  /// Connected components as sorted vertex lists, ordered by least vertex.
  std::vector<std::vector<VertexId>> components() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::map<std::pair<VertexId, VertexId>, EdgeId> lookup_;
};

struct VertexCover {
  std::vector<VertexId> vertices;  // sorted
  int size() const { return static_cast<int>(vertices.size()); }
};

bool is_vertex_cover(const Graph& g, const std::vector<VertexId>& x);

/// Minimum vertex cover by include/exclude branching, or nullopt when every
/// cover is larger than k_max. Among minimum covers the lexicographically
/// least sorted vertex list is returned.
std::optional<VertexCover> find_vertex_cover(const Graph& g, int k_max);

/// (G_X, h): cover of size k indexed 0..k-1, the induced graph on the cover
/// (in cover indices), and the number of outside vertices per exact
/// neighbourhood bitmask.
struct CompressedGraph {
  int k = 0;
  Graph cover_graph{0};
  std::map<std::uint32_t, Count> h;  // only nonzero entries

  Count count(std::uint32_t mask) const {
    auto it = h.find(mask);
    return it == h.end() ? Count{0} : it->second;
  }
  /// Present neighbourhoods Y (h(Y) > 0), ascending by mask.
  std::vector<std::uint32_t> present() const;
  Count outside_vertices() const;

  friend bool operator==(const CompressedGraph& a, const CompressedGraph& b) {
    return a.k == b.k && a.cover_graph == b.cover_graph && a.h == b.h;
  }
};

/// Throws std::invalid_argument when x is not a cover of g.
CompressedGraph compress(const Graph& g, const VertexCover& x);

/// Concrete graph realising cg: cover vertices keep ids 0..k-1, outside
/// vertices follow in ascending neighbourhood-mask order.
Graph expand(const CompressedGraph& cg);

/// Maximum number of vertices expand() is willing to materialise.
inline constexpr std::int64_t kExpandLimit = 50'000'000;

// Text formats. Edge list: one "u v" pair per line, '#' starts a comment.
// Ids are kept as given; the vertex set is 0..max id, or 0..count-1 when a
// "n <count>" line is present (extra ids are isolated vertices).
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Compressed format: "k" line, then "gx u v" and "h <bitmask> <count>" lines.
CompressedGraph read_compressed(std::istream& in);
void write_compressed(std::ostream& out, const CompressedGraph& cg);

}  // namespace xcr
