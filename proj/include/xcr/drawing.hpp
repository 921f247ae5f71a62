#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xcr/count.hpp"
#include "xcr/graph.hpp"

namespace xcr {

using CrossingId = int;

// A crossing of edges e and f. The clockwise order of the four segment ends
// around the crossing point is (e-, f-, e+, f+), or (e-, f+, e+, f-) when
// flipped, where '-' points toward the edge's lower endpoint.
struct Crossing {
  EdgeId e;
  EdgeId f;
  bool flipped = false;
};

/// Purely combinatorial drawing: which edges cross, in which order along each
/// edge, and the clockwise rotation of edge ends at every vertex.
struct Drawing {
  Graph graph;
  std::vector<Crossing> crossings;
  std::vector<std::vector<CrossingId>> sequence;  // per edge, from u toward v
  std::vector<std::vector<EdgeId>> rotation;      // per vertex, clockwise
  std::vector<Count> weight;                      // per edge; empty = all 1

  int crossing_count_unweighted() const {
    return static_cast<int>(crossings.size());
  }
  const Count& edge_weight(EdgeId e) const;

  /// Crossing-free drawing with the given rotation system.
  static Drawing from_rotation(Graph g, std::vector<std::vector<EdgeId>> rotation);
  /// Appends a crossing at the end of both edges' sequences.
  CrossingId add_crossing(EdgeId e, EdgeId f, bool flipped = false);
};

enum class Violation {
  kNone,
  kMalformed,
  kAdjacentCrossing,
  kDoubleCrossing,
  kUnrealizable,
};

struct Validation {
  Violation kind = Violation::kNone;
  std::string detail;
  bool ok() const { return kind == Violation::kNone; }
};

std::string to_string(Violation v);

/// Checks the good-drawing rules and that the planarization, with the stored
/// rotations, is a sphere embedding. Reports the first violated rule.
Validation validate_good(const Drawing& d);

/// Sum over crossings of w(e) * w(f).
Count crossing_count(const Drawing& d);

/// The plane graph obtained by turning every crossing into a degree-4 vertex.
/// Vertex ids 0..n-1 are the original vertices; crossing c becomes n + c.
struct Planarization {
  int original_count = 0;
  std::vector<std::vector<VertexId>> rotation;   // clockwise neighbours
  std::vector<std::vector<VertexId>> edge_path;  // per original edge, u..v
  std::vector<std::vector<VertexId>> faces;      // dart tails, in walk order
  std::vector<int> component;                    // per vertex
  int component_count = 0;
  int face_count = 0;  // faces of the plane drawing (outer faces merged)

  int vertex_count() const { return static_cast<int>(rotation.size()); }
  int edge_count() const;
  bool is_dummy(VertexId v) const { return v >= original_count; }
};

/// Throws std::domain_error when the structure is not a sphere embedding.
Planarization planarize(const Drawing& d);

/// Labelled canonical form: crossing pairs, per-edge crossing orders and the
/// planarization's rotation system. Two drawings of the same labelled graph
/// are combinatorially equivalent iff their canonical forms agree.
std::string canonical_form(const Drawing& d);
bool equivalent(const Drawing& a, const Drawing& b);

/// Restriction to the kept vertices; vertex keep[i] becomes vertex i. Edges
/// are renumbered in order of their new endpoints.
Drawing induced_subdrawing(const Drawing& d, const std::vector<VertexId>& keep);

/// Clockwise cyclic order of the neighbours of v, rotated to start at the
/// least neighbour.
std::vector<VertexId> neighbor_rotation(const Drawing& d, VertexId v);

/// Canonical starting point for a cyclic sequence: rotated to start at its
/// least element.
std::vector<int> normalize_cyclic(std::vector<int> seq);

struct Cluster {
  std::uint32_t mask = 0;          // neighbourhood, as cover indices
  std::vector<int> order;          // clockwise cover indices, normalised
  std::vector<VertexId> members;   // ascending
  int degree() const { return static_cast<int>(order.size()); }
  int size() const { return static_cast<int>(members.size()); }
};

struct ClusterPartition {
  std::vector<Cluster> clusters;  // ascending by (mask, order)
  std::vector<int> cluster_of;    // per vertex; -1 for cover vertices
};

/// Topological clusters of the non-cover vertices: same neighbourhood and
/// same clockwise order of neighbours.
ClusterPartition clusters(const Drawing& d, const VertexCover& x);

/// Crossings whose edges have no ends in a common topological cluster
/// (weighted when the drawing carries weights).
Count noncluster_count(const Drawing& d, const VertexCover& x);

/// Crossings between two edges that are both incident to members of the
/// given cluster.
Count cluster_crossings(const Drawing& d, const ClusterPartition& p, int cluster);

/// A drawing of G_X plus representatives, with a weight c(t) per
/// non-cover vertex t.
struct WeightedClustering {
  Drawing drawing;
  VertexCover cover;
  std::vector<Count> vertex_weight;  // per vertex; ignored on the cover

  /// Copy of the drawing carrying the induced edge weights c'.
  Drawing weighted_drawing() const;
};

/// Sum over representatives of C(c(t), 2) * Z(d(t)).
Count cl_value(const WeightedClustering& wc);

}  // namespace xcr
