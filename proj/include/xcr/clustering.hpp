#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "xcr/drawing.hpp"
#include "xcr/embedding.hpp"
#include "xcr/graph.hpp"

namespace xcr {

/// Number of distinct cyclic orders of j labelled elements.
std::int64_t rotations(int j);

/// The cyclic orders of the cover indices in `mask`, each starting with the
/// least index; the position in this list is the rotation index.
std::vector<std::vector<int>> cyclic_orders(std::uint32_t mask);

struct Representative {
  std::uint32_t mask;  // neighbourhood Y
  int rotation;        // index into cyclic_orders(mask)
  friend auto operator<=>(const Representative&, const Representative&) = default;
};

/// Representatives sorted by (mask, rotation). Rep i is vertex k + i of the
/// clustering graph.
struct RepresentativeSet {
  std::vector<Representative> reps;
  friend auto operator<=>(const RepresentativeSet&, const RepresentativeSet&) = default;
};

/// Every choice of a nonempty set of rotations per present neighbourhood,
/// at most min(h(Y), rotations(|Y|)) of them. The empty neighbourhood is
/// skipped. Order: lexicographic over neighbourhoods by mask; per
/// neighbourhood, rotation sets by size and then lexicographically.
std::vector<RepresentativeSet> enumerate_rep_sets(const CompressedGraph& cg);

/// G_X plus the representatives: vertices 0..k-1 are the cover, k + i is
/// representative i. Edges: G_X edges first, then each representative's
/// edges by ascending cover index.
Graph clustering_graph(const CompressedGraph& cg, const RepresentativeSet& reps);

struct AbstractClustering {
  RepresentativeSet reps;
  Drawing drawing;  // of clustering_graph(cg, reps)
  int k = 0;
  int r = 0;        // crossings between two G_X edges

  int rep_vertex(int i) const { return k + i; }
  VertexCover cover() const;
};

/// Pairs of edges of the clustering graph that may cross (non-adjacent),
/// ascending.
std::vector<std::pair<EdgeId, EdgeId>> crossable_pairs(const Graph& g);

/// Drawings of one clustering graph with prescribed representative
/// rotations. Crossing sets are chosen from crossable_pairs() in
/// lexicographic order; for each set all per-edge crossing orders are tried
/// and the planarization is embedded subject to the rotation tags and to
/// alternation at the crossing points.
class ClusteringSearch {
 public:
  ClusteringSearch(const CompressedGraph& cg, RepresentativeSet reps);

  const Graph& graph() const { return graph_; }
  const std::vector<std::pair<EdgeId, EdgeId>>& pairs() const { return pairs_; }
  const RepresentativeSet& reps() const { return reps_; }

  /// Called with a partial crossing set (indices into pairs()); returning
  /// true skips every superset.
  using Prune = std::function<bool(const std::vector<int>&)>;
  /// Returning false stops the search.
  using Visit = std::function<bool(const AbstractClustering&)>;

  /// Clusterings with exactly `count` crossings. With `all_embeddings` every
  /// realisation is visited; otherwise only the first realisation of each
  /// crossing set. Returns false when stopped by the visitor.
  bool run(int count, bool all_embeddings, const Prune& prune, const Visit& visit);

  void set_node_cap(std::uint64_t cap) { node_cap_ = cap; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool realise(const std::vector<int>& chosen, bool all_embeddings, const Visit& visit);

  int k_;
  RepresentativeSet reps_;
  Graph graph_;
  std::vector<std::pair<EdgeId, EdgeId>> pairs_;
  std::vector<std::vector<VertexId>> tags_;  // per rep, clockwise cover vertices
  std::uint64_t node_cap_ = 0;
  std::uint64_t nodes_ = 0;
};

/// All abstract clusterings with at most `budget` crossings, deduplicated
/// up to combinatorial equivalence. Per representative set (in
/// enumerate_rep_sets order) the drawings are emitted in canonical-form
/// order.
std::vector<AbstractClustering> enumerate_clusterings(const CompressedGraph& cg, int budget,
                                                      std::uint64_t node_cap = 0);

}  // namespace xcr
