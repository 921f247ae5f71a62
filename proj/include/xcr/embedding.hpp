#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "xcr/graph.hpp"

namespace xcr {

struct ResourceCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using RotationSystem = std::vector<std::vector<VertexId>>;

/// Allowed clockwise cyclic orders of a vertex's neighbours. Empty means the
/// vertex is unconstrained.
struct RotationConstraint {
  std::vector<std::vector<VertexId>> allowed;
};

/// True when `partial` (a cyclic sequence) is a cyclic subsequence of `full`.
bool is_cyclic_subsequence(const std::vector<VertexId>& partial,
                           const std::vector<VertexId>& full);

/// Enumerates the sphere embeddings (rotation systems of genus zero, one per
/// component) of a simple graph that satisfy per-vertex rotation
/// constraints. Edges are inserted one at a time in breadth-first order;
/// each insertion either attaches a new vertex at some corner or splits a
/// face between a corner of each endpoint, so every embedding is produced
/// exactly once.
class EmbeddingEnumerator {
 public:
  EmbeddingEnumerator(const Graph& g, std::vector<RotationConstraint> constraints);

  /// Visits each embedding; the visitor returns false to stop early.
  /// Returns false when stopped by the visitor.
  bool run(const std::function<bool(const RotationSystem&)>& visit);

  void set_node_cap(std::uint64_t cap) { node_cap_ = cap; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Step {
    VertexId from;
    VertexId to;
    bool first_of_component;
  };

  bool descend(std::size_t step);
  bool admissible(VertexId v) const;
  bool tick();

  const Graph& graph_;
  std::vector<RotationConstraint> constraints_;
  std::vector<Step> steps_;
  RotationSystem rot_;
  const std::function<bool(const RotationSystem&)>* visit_ = nullptr;
  std::uint64_t nodes_ = 0;
  std::uint64_t node_cap_ = 0;
};

/// Boyer-Myrvold planarity test on a simple graph.
bool is_planar(const Graph& g);

}  // namespace xcr
