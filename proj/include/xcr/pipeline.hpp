#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xcr/clustering.hpp"
#include "xcr/count.hpp"
#include "xcr/drawing.hpp"
#include "xcr/graph.hpp"
#include "xcr/iqp.hpp"

namespace xcr {

struct SolveOptions {
  int budget_cap = 0;               // most crossings per clustering; 0 = none
  std::uint64_t enum_node_cap = 0;  // per representative set; 0 = none
  std::uint64_t iqp_node_cap = 0;   // per instance; 0 = none
  int workers = 0;                  // 0 = XCR_WORKERS or 1
  bool lift = true;                 // build the drawing when small enough
  bool keep_log = true;
};

/// One solved clustering.
struct ClusteringRecord {
  int component = 0;
  int level = 0;     // crossings in the clustering
  int rep_set = 0;   // index in enumerate_rep_sets of the component
  IqpInstance instance;
  Count objective;
  Count value;
};

/// Optimum of one connected component, in the component's own numbering.
struct ComponentResult {
  std::vector<VertexId> cover;  // global cover indices, ascending
  CompressedGraph graph;
  Count value;
  AbstractClustering winner;
  std::vector<Count> z;
  int level = 0;
  int rep_set = 0;
};

struct SolveReport {
  Count crossing_number;
  std::vector<ComponentResult> components;
  std::vector<ClusteringRecord> log;
  std::uint64_t clusterings = 0;  // realised clusterings solved
  std::optional<Drawing> drawing;  // of expand(cg)
};

/// Connected pieces of cg. The empty neighbourhood is dropped; every cover
/// vertex lands in exactly one piece.
std::vector<std::pair<std::vector<VertexId>, CompressedGraph>> split_components(
    const CompressedGraph& cg);

/// Weighted crossing count plus within-cluster crossings of a straight-line
/// drawing with all vertices in convex position and one representative per
/// neighbourhood: an upper bound on cr(G).
Count initial_budget(const CompressedGraph& cg);

/// Exact crossing number. Throws ResourceCapExceeded when a cap is hit.
SolveReport crossing_number(const CompressedGraph& cg, const SolveOptions& opts = {});

std::string report_to_json(const SolveReport& r);

struct VerifyResult {
  bool ok = true;
  std::string message;
  std::optional<Count> oracle;
};

/// Largest expanded graph verify() hands to the oracle.
inline constexpr int kVerifyOracleEdges = 12;

/// Re-checks a report: the lifted drawing is good and has the reported
/// number of crossings, every winner re-evaluates to its value, and for small
/// graphs the oracle agrees.
VerifyResult verify(const SolveReport& report, const CompressedGraph& cg);

/// Same drawing with vertex v renamed new_id[v], expressed over `target`
/// (which must have the renamed edge set).
Drawing relabel(const Drawing& d, const std::vector<VertexId>& new_id, const Graph& target);

/// For compress(g, x): the vertex of g behind every vertex of expand().
std::vector<VertexId> expansion_map(const Graph& g, const VertexCover& x);

}  // namespace xcr
