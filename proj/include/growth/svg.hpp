#pragma once

#include <string>

#include "growth/geometry.hpp"

namespace growth {

// One SVG frame of unit squares. Cells absent from `previous` (the prior
// time-step, may be null) are drawn gray as freshly generated; the rest
// black. The viewport covers the bounding box of `bounds`, so frames of one
// trace share a canvas.
std::string render_svg_frame(const Shape& current, const Shape* previous, const Shape& bounds);

}  // namespace growth
