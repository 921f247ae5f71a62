#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "xcr/drawing.hpp"

namespace xcr {

struct Point {
  std::int64_t x;
  std::int64_t y;
};

struct DegenerateGeometry : std::domain_error {
  using std::domain_error::domain_error;
};

/// Combinatorial drawing of g with straight edges between the given integer
/// points (|coordinate| < 2^40). Rotations are clockwise with y pointing up.
/// Throws DegenerateGeometry when a vertex lies on another edge, two edges
/// overlap, or three edges pass through one crossing point.
Drawing straight_line_drawing(const Graph& g, const std::vector<Point>& at);

}  // namespace xcr
