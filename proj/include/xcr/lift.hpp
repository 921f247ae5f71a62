#pragma once

#include <cstdint>
#include <vector>

#include "xcr/clustering.hpp"
#include "xcr/count.hpp"
#include "xcr/drawing.hpp"

namespace xcr {

/// Upper limit on the size of a lifted drawing (vertices plus crossings).
inline constexpr std::int64_t kLiftLimit = 5'000'000;

/// Estimated vertices plus crossings of lift(c, z).
Count lift_size(const AbstractClustering& c, const std::vector<Count>& z);

/// Replaces representative i by z[i] copies drawn alongside it: every
/// crossing of the representative is repeated per copy and each pair of
/// copies of a degree-d representative crosses Z(d) times. Vertices 0..k-1
/// are the cover; then come the copies, representative by representative.
/// Edges: G_X first, then each copy's edges by ascending cover vertex.
/// Throws std::length_error above kLiftLimit.
Drawing lift(const AbstractClustering& c, const std::vector<Count>& z);

}  // namespace xcr
