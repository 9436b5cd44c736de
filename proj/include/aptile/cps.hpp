#pragma once

#include <aptile/quadratic.hpp>
#include <aptile/words.hpp>

#include <utility>
#include <vector>

namespace aptile {

// Boundary-side convention for the canonical acceptance window.  Keeping the
// high endpoint realizes the upper sturmian branch, keeping the low endpoint
// the lower branch; away from singular intercepts the two conventions accept
// the same lattice points.
enum class WindowConvention { half_open_low, half_open_high };

Branch word_branch(WindowConvention w);

// Canonical cut-and-project scheme from Z^2 to a line of irrational slope
// alpha in (0, 1) with intercept rho in [0, 1).  Tile lengths are normalized
// to (1, alpha): the lattice point (i, j) projects to the physical position
// i + j*alpha, and the internal coordinate is u(i, j) = (i+j-1)*alpha + rho
// - j, whose unit cell projects onto a half-open window of length 1.  The
// physical metric scale 1/sqrt(1+alpha^2) is a global dilation applied only
// when rendering.
struct CutProjectScheme {
  QuadraticNumber alpha;
  QuadraticNumber rho;
  WindowConvention window;

  CutProjectScheme(QuadraticNumber a, QuadraticNumber r,
                   WindowConvention w = WindowConvention::half_open_high);
};

struct LatticePoint {
  Int i;
  Int j;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Accepted lattice points sorted by physical position.  base_k is the
// staircase index of points.front(): the scheme's k-th vertex is the unique
// accepted point on the anti-diagonal i + j = k, and vertex 0 sits at the
// physical origin.
struct VertexSet {
  std::vector<LatticePoint> points;
  Int base_k{0};
};

// Internal-space coordinate of a lattice point (the window test reads its
// position inside the shifted canonical window).
QuadraticNumber internal_coordinate(const CutProjectScheme& s, const Int& i,
                                    const Int& j);

// Window endpoints (low, high) in the internal coordinate; high - low = 1.
// The convention decides which endpoint belongs to the window.
std::pair<QuadraticNumber, QuadraticNumber> window_interval(
    const CutProjectScheme& s);

// True iff the lattice point's internal coordinate lies in the window.
bool accept(const CutProjectScheme& s, const Int& i, const Int& j);

// The unique accepted lattice point with i + j = k.
LatticePoint vertex_at(const CutProjectScheme& s, const Int& k);

// Physical position i + j*alpha.
QuadraticNumber position(const CutProjectScheme& s, const LatticePoint& p);

// All accepted points with position in [lo, hi), sorted; consecutive gaps
// are exactly 1 or alpha.
VertexSet vertices_in_range(const CutProjectScheme& s,
                            const QuadraticNumber& lo,
                            const QuadraticNumber& hi);

// Symbol sequence read off the gaps (gap 1 -> 0, gap alpha -> 1); the word
// of an n-vertex set has n-1 symbols and base index base_k.  Equals the
// sturmian word of the same slope, intercept and corresponding branch.
Word gap_word(const CutProjectScheme& s, const VertexSet& v);

}  // namespace aptile
