#pragma once

#include <iosfwd>
#include <string>

#include "xcr/drawing.hpp"

namespace xcr {

// Drawing interchange format. Line oriented, fixed field order:
//
//   drawing
//   vertices <n>
//   edge <u> <v> [weight <w>]          one line per edge, in id order
//   crossing <e> <f> <flipped 0|1>     one line per crossing, in id order
//   sequence <e> <c1> <c2> ...         one line per edge, from u toward v
//   rotation <v> <e1> <e2> ...         one line per vertex, clockwise
//   end
void write_drawing(std::ostream& out, const Drawing& d);
Drawing read_drawing(std::istream& in);

std::string drawing_to_string(const Drawing& d);
Drawing drawing_from_string(const std::string& text);

}  // namespace xcr
