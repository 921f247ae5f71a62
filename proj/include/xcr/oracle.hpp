#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "xcr/drawing.hpp"
#include "xcr/graph.hpp"

namespace xcr {

struct OracleConfig {
  int max_crossings = 8;
  int max_edges = 40;
  double time_cap_seconds = 0;  // 0 = unlimited
};

struct OracleLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Least c such that some c pairwise distinct crossing pairs of non-adjacent
/// edges, with some order of the crossings along every edge, give a planar
/// planarization. Throws OracleLimitExceeded beyond the configured limits.
int oracle_cr(const Graph& g, const OracleConfig& cfg = {});

/// Every good drawing of g with at most max_cr crossings, one per
/// equivalence class (mirror images count as different). The visitor
/// returns false to stop.
void oracle_drawings(const Graph& g, int max_cr,
                     const std::function<bool(const Drawing&)>& visit);
std::vector<Drawing> oracle_drawings(const Graph& g, int max_cr);

}  // namespace xcr
