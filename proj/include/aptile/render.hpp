#pragma once

#include <aptile/apcomplex.hpp>
#include <aptile/cps.hpp>
#include <aptile/hull.hpp>

#include <string>

namespace aptile {

// SVG strip of the tiles of t meeting [lo, hi]: one rectangle per tile,
// colored by label, with a tick marking the origin.  Floating point is used
// for layout only; all geometry is computed exactly first.
std::string render_tiling_svg(const Tiling& t, const QuadraticNumber& lo,
                              const QuadraticNumber& hi);

// The lattice-strip-staircase picture of a cut-and-project scheme over the
// physical range [lo, hi]: lattice dots, the acceptance strip, the slope
// line, the accepted staircase path, and the projected tiling drawn beneath
// at the physical scale 1/sqrt(1+alpha^2).  The picture lives in the sheared
// plane (x, y) = (i+j, j), where the acceptance condition is the classical
// "vertical strip of width 1 above the line y = alpha*x + rho".
std::string render_cps_svg(const CutProjectScheme& s, const QuadraticNumber& lo,
                           const QuadraticNumber& hi);

// Graphviz DOT description of an approximant graph: one node per vertex
// class, one arrow per edge labeled by its (collared) tile.
std::string render_ap_dot(const APGraph& g);

}  // namespace aptile
