#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "xcr/clustering.hpp"
#include "xcr/count.hpp"
#include "xcr/graph.hpp"

namespace xcr {

/// minimize zᵀQz + 2pᵀz over nonnegative integers z with one equality
/// constraint per group: the entries of group i sum to h[i]. Groups occupy
/// contiguous index ranges.
struct IqpInstance {
  std::vector<int> group_size;
  std::vector<Count> h;                       // per group
  std::vector<std::vector<std::int64_t>> q;   // symmetric, size() x size()
  std::vector<std::int64_t> p;
  std::int64_t r = 0;

  int size() const { return static_cast<int>(p.size()); }
  int group_count() const { return static_cast<int>(group_size.size()); }
  /// Group of every index.
  std::vector<int> group_of() const;
};

struct IqpSolution {
  std::vector<Count> z;
  Count objective;  // f(z)
  Count value;      // true_value(z)
};

/// Q, p and r read off a clustering; index i is representative i.
IqpInstance build_iqp(const AbstractClustering& c, const CompressedGraph& cg);

/// f(z) = zᵀQz + 2pᵀz.
Count objective(const IqpInstance& inst, const std::vector<Count>& z);

/// r + Σ_{a<b} q_ab z_a z_b + pᵀz + Σ_a C(z_a, 2) q_aa: the weighted crossing
/// count plus the within-cluster crossings of the drawing the clustering
/// induces with cluster sizes z.
Count true_value(const IqpInstance& inst, const std::vector<Count>& z);

struct IqpOptions {
  std::vector<Count> lower;  // per index; empty means all zero
  std::uint64_t node_cap = 0;
};

/// Exact minimiser of f, lexicographically least among the optima. Throws
/// std::invalid_argument when the lower bounds exceed a group target and
/// ResourceCapExceeded when the node cap is hit.
IqpSolution solve_iqp(const IqpInstance& inst, const IqpOptions& options = {});

void write_iqp(std::ostream& out, const IqpInstance& inst);
/// Throws ParseError.
IqpInstance read_iqp(std::istream& in);

}  // namespace xcr
