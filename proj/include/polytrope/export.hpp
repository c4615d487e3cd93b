#pragma once

#include "polytrope/polytrope_algebra.hpp"

#include <string>

namespace polytrope {

// Planar figure: the pseudo-vertex polygon with tropical vertices and
// pseudo-vertices marked distinctly.  Requires d = 2.
std::string export_svg(const Polytrope& p);

// Standard OFF text of the pseudo-vertex hull.  Requires d = 3.  When a
// coordinate is not integral the whole model is dilated by the common
// denominator (noted in a comment line) so the output stays exact.
std::string export_off(const Polytrope& p);

}  // namespace polytrope
