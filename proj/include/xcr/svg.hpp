#pragma once

#include <string>

#include "xcr/drawing.hpp"

namespace xcr {

/// SVG picture of the planarization: barycentric layout with the longest
/// face of every component on a circle, components side by side. Crossings
/// are marked with class "crossing". Output depends only on the drawing.
std::string render_svg(const Drawing& d);

/// Throws std::runtime_error when the file cannot be written.
void write_svg(const Drawing& d, const std::string& path);

}  // namespace xcr
