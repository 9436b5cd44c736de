#pragma once

#include <aptile/cps.hpp>
#include <aptile/quadratic.hpp>
#include <aptile/substitution.hpp>
#include <aptile/words.hpp>

#include <array>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace aptile {

// One tile of a one-dimensional tiling: a closed interval [left, left+length]
// carrying a label (an index into the tiling's alphabet).
struct Tile {
  int label = 0;
  QuadraticNumber left;
  QuadraticNumber length;

  QuadraticNumber right() const { return left + length; }

  friend bool operator==(const Tile& x, const Tile& y) {
    return x.label == y.label && x.left == y.left && x.length == y.length;
  }
  friend bool operator!=(const Tile& x, const Tile& y) { return !(x == y); }
};

// A finite connected run of consecutive tiles, with exact endpoints.
struct Patch {
  std::vector<Tile> tiles;

  QuadraticNumber lo() const;  // left end of the first tile
  QuadraticNumber hi() const;  // right end of the last tile

  friend bool operator==(const Patch& x, const Patch& y) { return x.tiles == y.tiles; }
  friend bool operator!=(const Patch& x, const Patch& y) { return !(x == y); }
};

namespace detail {

// A rule-backed bi-infinite tiling with vertex 0 at the origin.  Vertices are
// indexed by k in Z and strictly increase; tile k is [vertex(k), vertex(k+1)]
// with a label in [0, alphabet_size).  Implementations answer finite queries
// only and never materialize the tiling.
class TilingSource {
 public:
  virtual ~TilingSource() = default;
  virtual std::size_t alphabet_size() const = 0;
  virtual char letter(int label) const = 0;
  virtual std::vector<QuadraticNumber> lengths() const = 0;
  virtual QuadraticNumber vertex(const Int& k) const = 0;
  virtual int label(const Int& k) const = 0;
  virtual std::optional<Branch> singular_tag() const = 0;
};

}  // namespace detail

// A tiling of the line: an immutable shared generator plus an exact
// translation.  Copies are cheap and queries are read-only.
class Tiling {
 public:
  // Tiling of the gap sequence of a cut-and-project scheme: vertices at the
  // projected staircase points, labels 0 (gap 1) and 1 (gap alpha).
  static Tiling from_cps(const CutProjectScheme& scheme);

  // Two-sided fixed-point tiling of a primitive rule (exact eigenvalue data
  // required, so alphabets of at most two letters).  The seed pair (x, y)
  // must satisfy: some power p of the rule maps x to a word ending in x and
  // y to a word starting with y, and xy must be a legal 2-factor; the tiling
  // realizes ...w(x)w(x) | w(y)w(y)... with the origin at the seam.  The
  // one-argument overload picks the lexicographically least valid seed pair
  // (minimizing the power first).
  static Tiling from_substitution(const SubstitutionRule& rule);
  static Tiling from_substitution(const SubstitutionRule& rule, std::pair<char, char> seeds);

  std::size_t alphabet_size() const;
  char letter(int label) const;
  // Tile length per label (translation invariant).
  std::vector<QuadraticNumber> lengths() const;
  // Present exactly when the underlying scheme is singular (the intercept
  // lies in Z + alpha Z): which half-open convention resolves the ambiguity.
  std::optional<Branch> singular_tag() const;

  // Position of the k-th vertex; tile k is [vertex(k), vertex(k+1)].
  QuadraticNumber vertex(const Int& k) const;
  int label(const Int& k) const;
  // Index of the tile containing pos under the half-open reading
  // [vertex(k), vertex(k+1)).
  Int tile_index_at(const QuadraticNumber& pos) const;
  Tile tile_at(const QuadraticNumber& pos) const;
  // Position of the point 0 inside its tile, measured from the tile's left
  // vertex (zero exactly when the origin sits on a vertex).
  QuadraticNumber origin_offset() const;

  // Same generator object and same translation (sufficient but not necessary
  // for equality of the two tilings).
  bool same_realization(const Tiling& other) const {
    return source_ == other.source_ && shift_ == other.shift_;
  }

 private:
  Tiling(std::shared_ptr<const detail::TilingSource> source, QuadraticNumber shift);

  std::shared_ptr<const detail::TilingSource> source_;
  QuadraticNumber shift_;

  friend Tiling translate(const Tiling& t, const QuadraticNumber& x);
};

// The translate T + x = {tile + x : tile in T}, exact.  Window queries
// commute: window(translate(T, x), lo, hi) = window(T, lo - x, hi - x) + x.
Tiling translate(const Tiling& t, const QuadraticNumber& x);

// Alias of Tiling::from_cps, provided as the canonical bridge between the
// two constructions.
Tiling tiling_from_cps(const CutProjectScheme& scheme);

// All tiles meeting the closed interval [lo, hi] (tiles touching an endpoint
// included).  Requires lo <= hi.
Patch window(const Tiling& t, const QuadraticNumber& lo, const QuadraticNumber& hi);

// Certified enclosure of the tiling distance.
struct MetricInterval {
  Rational lo;
  Rational hi;
};

// d(T1, T2) = inf { eps : some translates by |x|, |x'| < eps/2 make the two
// tilings agree exactly on the closed ball of radius 1/eps around 0 }.
//
// metric_feasible decides, exactly, whether the closed-budget relaxation
// (|x|, |x'| <= eps/2) is satisfiable at a given eps; its truth certifies
// d <= eps and its failure certifies d >= eps.  metric_d bisects it to an
// enclosure of width <= tol (the raw infimum: no truncation of either end).
// Both require tilings over the same quadratic field with equal alphabet
// sizes.
bool metric_feasible(const Tiling& t1, const Tiling& t2, const QuadraticNumber& eps);
MetricInterval metric_d(const Tiling& t1, const Tiling& t2, const Rational& tol);

// All exact v with |v| <= radius such that the patch P + v occurs in t
// (labels and endpoints equal).  P must itself occur in t at its recorded
// position (throws std::invalid_argument otherwise); v = 0 is always in the
// result.
std::vector<QuadraticNumber> return_vectors(const Tiling& t, const Patch& p,
                                            const QuadraticNumber& radius);

// A finitely generated subgroup of Z + Z*theta in Hermite normal form: rows
// (a, b) and (0, c) stand for the generators a + b*theta and c*theta, with
// a, c > 0 and 0 <= b < c; absent rows encode rank < 2.
struct ReturnModule {
  QuadraticNumber theta;
  std::vector<std::array<Int, 2>> rows;

  std::vector<QuadraticNumber> generators() const;

  friend bool operator==(const ReturnModule& x, const ReturnModule& y) {
    return x.theta == y.theta && x.rows == y.rows;
  }
  friend bool operator!=(const ReturnModule& x, const ReturnModule& y) { return !(x == y); }
};

// Canonical basis of the subgroup generated by the given vectors, each of
// which must be an integer combination a + b*theta (throws std::domain_error
// otherwise).
ReturnModule return_module(const std::vector<QuadraticNumber>& vectors,
                           const QuadraticNumber& theta);

// Canonical representative of x modulo the module: write x rationally in the
// HNF basis and reduce every coefficient to [0, 1).  Full reduction needs
// rank 2; lower rank reduces along the available generators only.
QuadraticNumber torus_reduce(const ReturnModule& m, const QuadraticNumber& x);

// A point of the quotient torus R / module, named by its canonical
// representative; origin_tag distinguishes the two half-open resolutions of
// a singular tiling, which project to the same class.
struct TorusPoint {
  QuadraticNumber representative;
  std::optional<Branch> origin_tag;

  friend bool operator==(const TorusPoint& x, const TorusPoint& y) {
    return x.representative == y.representative && x.origin_tag == y.origin_tag;
  }
  friend bool operator!=(const TorusPoint& x, const TorusPoint& y) { return !(x == y); }
};

// Covering projection: the class of the left vertex of the tile containing
// the origin.  Invariant under translation by module elements; equivariant,
// torus_project(translate(T, x), m) = torus_project(T, m) + x mod m, when m
// is the tiling's full return module.
TorusPoint torus_project(const Tiling& t, const ReturnModule& m);

// Letter-reading map: labels of tiles from..to-1, where tile 0 contains the
// origin; base_index of the result is `from`.  Together with origin_offset()
// this is the exact alignment data of the tiling over its symbolic word.
Word phi_block(const Tiling& t, long from, long to);

// Tiling of a sturmian word: tile lengths 1 (symbol 0) and alpha (symbol 1),
// origin on the left vertex of the tile of s_0.  phi_block inverts it:
// phi_block(psi(S), a, b) = sturmian_block(S, a, b) and the origin offset
// is 0.
Tiling psi(const SturmianParams& s);

// Translation realizing one shift of the symbolic word:
// psi(shift(S)) = translate(psi(S), delta_alpha(S)) exactly.  Its value is
// -1 when S_0 = 0 and -alpha when S_0 = 1 (the tiling moves left by the tile
// the shift consumes; the sum over j < k of delta_alpha at the j-th shift is
// therefore minus the k-th vertex position).
QuadraticNumber delta_alpha(const SturmianParams& s);

// Signed number of tiles the origin crosses when the tiling is translated by
// x: the index m with phi(translate(T, x)) = shift^m(phi(T)).  Satisfies
// m(T, 0) = 0, m(psi(S), delta_alpha(S)) = 1, and the cocycle identity
// m(T, x + y) = m(T, x) + m(translate(T, x), y).
Int translation_cocycle(const Tiling& t, const QuadraticNumber& x);

}  // namespace aptile
