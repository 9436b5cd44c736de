#include <aptile/cps.hpp>

#include <stdexcept>
#include <utility>

namespace aptile {

namespace {

// Branch value of the counting function: number of accepted horizontal steps
// is tracked by F(t) with F = ceil (high window) or floor+1 (low window).
Int window_count(const QuadraticNumber& t, WindowConvention w) {
  return w == WindowConvention::half_open_high ? t.ceil() : t.floor() + 1;
}

// Height j of the scheme's k-th vertex: j(k) = F((k-1) alpha + rho) - F(rho -
// alpha), so that j(0) = 0 and the origin is always a vertex.
Int staircase_height(const CutProjectScheme& s, const Int& k) {
  QuadraticNumber t = QuadraticNumber(k - 1) * s.alpha + s.rho;
  return window_count(t, s.window) - window_count(s.rho - s.alpha, s.window);
}

}  // namespace

Branch word_branch(WindowConvention w) {
  return w == WindowConvention::half_open_high ? Branch::upper : Branch::lower;
}

CutProjectScheme::CutProjectScheme(QuadraticNumber a, QuadraticNumber r,
                                   WindowConvention w)
    : alpha(std::move(a)), rho(std::move(r)), window(w) {
  // Shares the sturmian parameter domain: slope irrational in (0, 1),
  // intercept in [0, 1) and in the same field.
  SturmianParams check(alpha, rho, word_branch(window));
  (void)check;
}

QuadraticNumber internal_coordinate(const CutProjectScheme& s, const Int& i,
                                    const Int& j) {
  Int k = i + j;
  return QuadraticNumber(k - 1) * s.alpha + s.rho - QuadraticNumber(j);
}

std::pair<QuadraticNumber, QuadraticNumber> window_interval(
    const CutProjectScheme& s) {
  Int top = window_count(s.rho - s.alpha, s.window);
  return {QuadraticNumber(top - 1), QuadraticNumber(top)};
}

bool accept(const CutProjectScheme& s, const Int& i, const Int& j) {
  QuadraticNumber u = internal_coordinate(s, i, j);
  auto [lo, hi] = window_interval(s);
  if (s.window == WindowConvention::half_open_high) return lo < u && u <= hi;
  return lo <= u && u < hi;
}

LatticePoint vertex_at(const CutProjectScheme& s, const Int& k) {
  Int j = staircase_height(s, k);
  return LatticePoint{k - j, j};
}

QuadraticNumber position(const CutProjectScheme& s, const LatticePoint& p) {
  return QuadraticNumber(p.i) + QuadraticNumber(p.j) * s.alpha;
}

VertexSet vertices_in_range(const CutProjectScheme& s,
                            const QuadraticNumber& lo,
                            const QuadraticNumber& hi) {
  if (lo > hi) throw std::invalid_argument("vertices_in_range: lo > hi");
  VertexSet out;

  // Locate the first vertex with position >= lo.  Gap bounds give exact
  // brackets: position(k) <= k and position(k) >= alpha*k for k >= 0, with
  // the inequalities mirrored for k < 0.
  QuadraticNumber ratio = lo / s.alpha;
  Int klo = ratio.floor() - 1;
  if (klo > 0) klo = 0;
  Int khi = ratio.ceil();
  if (khi < 0) khi = 0;
  auto pos_at = [&s](const Int& k) { return position(s, vertex_at(s, k)); };
  while (khi - klo > 1) {
    Int mid = fdiv(klo + khi, Int(2));
    if (pos_at(mid) >= lo) {
      khi = mid;
    } else {
      klo = mid;
    }
  }
  Int k = pos_at(klo) >= lo ? klo : khi;

  out.base_k = k;
  Int f0 = window_count(s.rho - s.alpha, s.window);
  QuadraticNumber t = QuadraticNumber(k - 1) * s.alpha + s.rho;
  Int c = window_count(t, s.window) - f0;
  QuadraticNumber x = QuadraticNumber(k - c) + QuadraticNumber(c) * s.alpha;
  while (x < hi) {
    out.points.push_back(LatticePoint{k - c, c});
    t += s.alpha;
    Int cnext = window_count(t, s.window) - f0;
    x += cnext > c ? s.alpha : QuadraticNumber(1);
    c = cnext;
    k += 1;
  }
  return out;
}

Word gap_word(const CutProjectScheme& s, const VertexSet& v) {
  Word w;
  if (v.points.empty()) return w;
  if (!fits_long(v.base_k))
    throw std::overflow_error("gap_word: base index out of range");
  w.base_index = static_cast<long>(v.base_k.get_si());
  w.symbols.reserve(v.points.size() - 1);
  for (std::size_t n = 0; n + 1 < v.points.size(); ++n) {
    // Step right (gap 1) emits 0, step up (gap alpha) emits 1.
    w.symbols.push_back(v.points[n + 1].j > v.points[n].j ? 1 : 0);
  }
  return w;
}

}  // namespace aptile
