#include <doctest.h>

#include <aptile/hull.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

using namespace aptile;

namespace {

QuadraticNumber qn(long p, long q, long r, long s, long d) {
  return QuadraticNumber(Rational(p, q), Rational(r, s), Int(d));
}

Patch shifted(const Patch& p, const QuadraticNumber& x) {
  Patch out = p;
  for (Tile& t : out.tiles) t.left += x;
  return out;
}

}  // namespace

TEST_CASE("substitution tilings realize two-sided fixed points") {
  SubstitutionRule fib = SubstitutionRule::parse("a>b; b>ab");
  QuadraticNumber phi = qn(1, 2, 1, 2, 5);
  QuadraticNumber phi_m1 = qn(-1, 2, 1, 2, 5);

  Tiling f = Tiling::from_substitution(fib);
  CHECK(f.alphabet_size() == 2);
  CHECK(f.letter(0) == 'a');
  CHECK(f.letter(1) == 'b');
  CHECK(f.lengths() == std::vector<QuadraticNumber>{QuadraticNumber(1), phi});
  CHECK(f.vertex(Int(0)) == QuadraticNumber(0));
  CHECK(f.vertex(Int(1)) == QuadraticNumber(1));
  CHECK(f.vertex(Int(2)) == QuadraticNumber(1) + phi);
  CHECK(f.vertex(Int(-1)) == -phi);
  CHECK(f.origin_offset() == QuadraticNumber(0));
  CHECK(f.singular_tag() == std::nullopt);

  // Right of the seam: the fixed point from seed a; left of it, the reversed
  // limit of the b-images.  Together they read the singular upper word.
  CHECK(phi_block(f, 0, 12).to_string() == "011011010110");
  CHECK(phi_block(f, 0, 40).to_string() == fixed_point_prefix(fib, 'a', 40).to_string());
  CHECK(phi_block(f, -6, 0).to_string() == "101101");
  SturmianParams up(phi_m1, QuadraticNumber(0), Branch::upper);
  CHECK(phi_block(f, -21, 21) == sturmian_block(up, -21, 21));

  Tiling g = Tiling::from_substitution(fib, {'b', 'b'});
  SturmianParams low(phi_m1, QuadraticNumber(0), Branch::lower);
  CHECK(phi_block(g, 0, 40).to_string() == fixed_point_prefix(fib, 'b', 40).to_string());
  CHECK(phi_block(g, -21, 21) == sturmian_block(low, -21, 21));

  Tiling f2 = Tiling::from_substitution(fib, {'b', 'a'});
  CHECK(phi_block(f2, -13, 13) == phi_block(f, -13, 13));

  SubstitutionRule tm = SubstitutionRule::parse("a>ab; b>ba");
  Tiling t = Tiling::from_substitution(tm);
  CHECK(t.vertex(Int(7)) == QuadraticNumber(7));
  CHECK(t.vertex(Int(-4)) == QuadraticNumber(-4));
  CHECK(phi_block(t, 0, 16).to_string() == fixed_point_prefix(tm, 'a', 16).to_string());
  CHECK(phi_block(t, -8, 0).to_string() == "10010110");

  Tiling period = Tiling::from_substitution(SubstitutionRule::parse("a>aa"));
  CHECK(period.vertex(Int(5)) == QuadraticNumber(5));
  CHECK(phi_block(period, -3, 3).to_string() == "000000");

  CHECK_THROWS_AS(Tiling::from_substitution(fib, {'a', 'b'}), std::domain_error);
  CHECK_THROWS_AS(Tiling::from_substitution(fib, {'z', 'a'}), std::invalid_argument);
  CHECK_THROWS_AS(Tiling::from_substitution(SubstitutionRule::parse("a>ab; b>c; c>a")),
                  std::domain_error);
  CHECK_THROWS_AS(Tiling::from_substitution(SubstitutionRule::parse("a>b; b>a")),
                  std::domain_error);
}

TEST_CASE("psi inverts the letter-reading map with exact alignment") {
  QuadraticNumber a2 = qn(-1, 1, 1, 1, 2);  // sqrt(2) - 1
  SturmianParams s(a2, QuadraticNumber(Rational(1, 3)), Branch::upper);
  Tiling t = psi(s);

  CHECK(t.origin_offset() == QuadraticNumber(0));
  CHECK(t.vertex(Int(0)) == QuadraticNumber(0));
  CHECK(t.tile_index_at(QuadraticNumber(0)) == Int(0));
  CHECK(t.tile_index_at(QuadraticNumber(Rational(-1, 1000))) == Int(-1));
  CHECK(t.singular_tag() == std::nullopt);
  CHECK(phi_block(t, -25, 25) == sturmian_block(s, -25, 25));

  Patch w = window(t, QuadraticNumber(-5), QuadraticNumber(9));
  CHECK(w.lo() <= QuadraticNumber(-5));
  CHECK(w.hi() >= QuadraticNumber(9));
  for (std::size_t i = 0; i < w.tiles.size(); ++i) {
    CHECK(w.tiles[i].length == (w.tiles[i].label == 1 ? a2 : QuadraticNumber(1)));
    if (i + 1 < w.tiles.size()) CHECK(w.tiles[i].right() == w.tiles[i + 1].left);
  }

  // Cross-check against the lattice enumeration: every projected staircase
  // point is a tile boundary and the gap letters are the tile labels.
  CutProjectScheme scheme(a2, QuadraticNumber(Rational(1, 3)), WindowConvention::half_open_high);
  VertexSet vs = vertices_in_range(scheme, QuadraticNumber(-5), QuadraticNumber(9));
  Word gaps = gap_word(scheme, vs);
  REQUIRE(vs.points.size() >= 2);
  for (std::size_t n = 0; n + 1 < vs.points.size(); ++n) {
    QuadraticNumber pos = position(scheme, vs.points[n]);
    Tile tile = t.tile_at(pos);
    CHECK(tile.left == pos);
    CHECK(tile.label == gaps.symbols[n]);
  }

  // Tiles touching an endpoint are part of the window.
  Patch w2 = window(t, QuadraticNumber(0), QuadraticNumber(1));
  REQUIRE(w2.tiles.size() >= 2);
  CHECK(w2.tiles.front().right() == QuadraticNumber(0));
  CHECK(w2.tiles[1].left == QuadraticNumber(0));
  CHECK(w2.tiles.back().right() >= QuadraticNumber(1));
  CHECK_THROWS_AS(window(t, QuadraticNumber(1), QuadraticNumber(0)), std::invalid_argument);
  CHECK_THROWS_AS(phi_block(t, 3, 1), std::invalid_argument);

  // Singular tagging is carried by the generator.
  QuadraticNumber phi_m1 = qn(-1, 2, 1, 2, 5);
  CHECK(psi(SturmianParams(phi_m1, QuadraticNumber(0), Branch::upper)).singular_tag() ==
        Branch::upper);
  CHECK(psi(SturmianParams(phi_m1, QuadraticNumber(0), Branch::lower)).singular_tag() ==
        Branch::lower);
}

TEST_CASE("windows commute with translation") {
  QuadraticNumber a2 = qn(-1, 1, 1, 1, 2);
  SturmianParams s(a2, QuadraticNumber(Rational(1, 3)), Branch::upper);
  Tiling t = psi(s);
  QuadraticNumber x = qn(1, 3, 1, 5, 2);  // 1/3 + sqrt(2)/5

  CHECK(t.same_realization(t));
  CHECK(translate(t, QuadraticNumber(0)).same_realization(t));
  CHECK(!translate(t, QuadraticNumber(1)).same_realization(t));

  Patch a = window(translate(t, x), QuadraticNumber(-2), QuadraticNumber(7));
  Patch b = window(t, QuadraticNumber(-2) - x, QuadraticNumber(7) - x);
  CHECK(a == shifted(b, x));
}

TEST_CASE("the shift of the word is a translation of the tiling") {
  std::vector<SturmianParams> params;
  params.emplace_back(qn(-1, 1, 1, 1, 2), QuadraticNumber(Rational(1, 3)), Branch::upper);
  params.emplace_back(qn(-1, 1, 1, 1, 3), QuadraticNumber(Rational(2, 5)), Branch::lower);
  params.emplace_back(qn(-1, 2, 1, 2, 5), qn(0, 1, 1, 7, 5), Branch::upper);
  params.emplace_back(qn(-1, 1, 1, 1, 2), QuadraticNumber(Rational(2, 3)), Branch::upper);

  for (const SturmianParams& s : params) {
    Tiling t = psi(s);
    QuadraticNumber d = delta_alpha(s);
    // The translation consumes the tile of the letter at index 0.
    CHECK(d == -(t.vertex(Int(1)) - t.vertex(Int(0))));

    SturmianParams s1 = shift_params(s);
    Tiling direct = psi(s1);
    Tiling moved = translate(t, d);
    CHECK(window(direct, QuadraticNumber(-10), QuadraticNumber(10)) ==
          window(moved, QuadraticNumber(-10), QuadraticNumber(10)));
    CHECK(phi_block(moved, -10, 10) == sturmian_block(s1, -10, 10));
    CHECK(translation_cocycle(t, d) == Int(1));

    // Telescoping: the summed shift translations bring vertex k to 0.
    SturmianParams cur = s;
    QuadraticNumber sum(0);
    for (long k = 1; k <= 12; ++k) {
      sum += delta_alpha(cur);
      cur = shift_params(cur);
      CHECK(sum == -t.vertex(Int(k)));
    }
    CHECK(phi_block(translate(t, sum), -8, 8) == sturmian_block(cur, -8, 8));
  }
}

TEST_CASE("translation cocycle counts crossed tiles") {
  QuadraticNumber a2 = qn(-1, 1, 1, 1, 2);
  SturmianParams s(a2, QuadraticNumber(Rational(1, 3)), Branch::upper);
  Tiling t = psi(s);

  CHECK(translation_cocycle(t, QuadraticNumber(0)) == Int(0));
  CHECK(translation_cocycle(t, QuadraticNumber(Rational(-5, 2))) == Int(3));
  CHECK(translation_cocycle(t, QuadraticNumber(3) + a2) == Int(-4));

  std::vector<QuadraticNumber> xs = {
      QuadraticNumber(Rational(1, 2)),  QuadraticNumber(Rational(-5, 2)),
      a2,                               QuadraticNumber(3) + a2,
      QuadraticNumber(Rational(7, 5)),  qn(0, 1, -2, 3, 2),
  };
  for (const QuadraticNumber& x : xs) {
    Int m = translation_cocycle(t, x);
    REQUIRE(fits_long(m));
    long mm = m.get_si();
    CHECK(phi_block(translate(t, x), 0, 15).symbols == phi_block(t, mm, mm + 15).symbols);
  }
  for (const QuadraticNumber& x : xs) {
    for (const QuadraticNumber& y : xs) {
      CHECK(translation_cocycle(t, x + y) ==
            translation_cocycle(t, x) + translation_cocycle(translate(t, x), y));
    }
  }
}

TEST_CASE("return vectors generate the translation module") {
  QuadraticNumber a2 = qn(-1, 1, 1, 1, 2);
  SturmianParams s(a2, QuadraticNumber(Rational(1, 3)), Branch::upper);
  Tiling t = psi(s);

  Patch p = window(t, QuadraticNumber(0), QuadraticNumber(6));
  CHECK(p.tiles.size() == 10);
  std::vector<QuadraticNumber> rv = return_vectors(t, p, QuadraticNumber(200));
  CHECK(rv.size() == 91);
  CHECK(std::find(rv.begin(), rv.end(), QuadraticNumber(0)) != rv.end());
  CHECK(std::is_sorted(rv.begin(), rv.end()));
  for (const QuadraticNumber& v : rv) {
    CHECK(v.abs() <= QuadraticNumber(200));
  }
  // Spot-verify occurrences through independent windows.
  for (std::size_t i : {std::size_t(0), rv.size() / 2, rv.size() - 1}) {
    Patch q = window(t, rv[i], QuadraticNumber(6) + rv[i]);
    CHECK(q == shifted(p, rv[i]));
  }

  ReturnModule m = return_module(rv, a2);
  CHECK(m.rows == std::vector<std::array<Int, 2>>{{Int(1), Int(0)}, {Int(0), Int(1)}});
  CHECK(m.generators() == std::vector<QuadraticNumber>{QuadraticNumber(1), a2});

  // A different patch harvests the same module.
  Patch p2 = window(t, QuadraticNumber(7), QuadraticNumber(11));
  ReturnModule m2 = return_module(return_vectors(t, p2, QuadraticNumber(200)), a2);
  CHECK(m2 == m);

  Patch bad = p;
  bad.tiles[0].label ^= 1;
  CHECK_THROWS_AS(return_vectors(t, bad, QuadraticNumber(10)), std::invalid_argument);
  Patch gapped = p;
  gapped.tiles.erase(gapped.tiles.begin() + 1);
  CHECK_THROWS_AS(return_vectors(t, gapped, QuadraticNumber(10)), std::invalid_argument);
  CHECK_THROWS_AS(return_vectors(t, p, QuadraticNumber(-1)), std::domain_error);
  CHECK_THROWS_AS(return_vectors(t, Patch{}, QuadraticNumber(1)), std::invalid_argument);

  // A periodic tiling has a rank-one module.
  Tiling period = Tiling::from_substitution(SubstitutionRule::parse("a>aa"));
  Patch pp = window(period, QuadraticNumber(0), QuadraticNumber(2));
  std::vector<QuadraticNumber> rv2 = return_vectors(period, pp, QuadraticNumber(9));
  CHECK(rv2.size() == 19);
  ReturnModule m3 = return_module(rv2, a2);
  CHECK(m3.rows == std::vector<std::array<Int, 2>>{{Int(1), Int(0)}});
  CHECK(m3.generators() == std::vector<QuadraticNumber>{QuadraticNumber(1)});
}

TEST_CASE("module normal forms") {
  QuadraticNumber a2 = qn(-1, 1, 1, 1, 2);
  using Rows = std::vector<std::array<Int, 2>>;

  CHECK(return_module({QuadraticNumber(1) + a2, a2, QuadraticNumber(1)}, a2).rows ==
        Rows{{Int(1), Int(0)}, {Int(0), Int(1)}});
  ReturnModule doubled = return_module({QuadraticNumber(2), a2 * QuadraticNumber(2)}, a2);
  CHECK(doubled.rows == Rows{{Int(2), Int(0)}, {Int(0), Int(2)}});
  CHECK(doubled.generators() ==
        std::vector<QuadraticNumber>{QuadraticNumber(2), a2 * QuadraticNumber(2)});
  CHECK(return_module({QuadraticNumber(2), a2 * QuadraticNumber(2), QuadraticNumber(1) + a2}, a2)
            .rows == Rows{{Int(1), Int(1)}, {Int(0), Int(2)}});
  CHECK(return_module({QuadraticNumber(2) + a2 * QuadraticNumber(3)}, a2).rows ==
        Rows{{Int(2), Int(3)}});
  CHECK(return_module({a2 * QuadraticNumber(3)}, a2).rows == Rows{{Int(0), Int(3)}});
  CHECK(return_module({QuadraticNumber(0)}, a2).rows.empty());
  CHECK_THROWS_AS(return_module({a2 / QuadraticNumber(2)}, a2), std::domain_error);
}

TEST_CASE("torus projection is invariant and equivariant") {
  QuadraticNumber a2 = qn(-1, 1, 1, 1, 2);
  SturmianParams s(a2, QuadraticNumber(Rational(1, 3)), Branch::upper);
  Tiling t = psi(s);
  ReturnModule m = return_module({QuadraticNumber(1), a2}, a2);

  TorusPoint p0 = torus_project(t, m);
  CHECK(p0.representative == QuadraticNumber(0));
  CHECK(!p0.origin_tag);

  std::vector<QuadraticNumber> module_elems = {
      QuadraticNumber(1), a2, QuadraticNumber(2) + a2 * QuadraticNumber(5),
      QuadraticNumber(-3) + a2, a2 * QuadraticNumber(-7)};
  for (const QuadraticNumber& r : module_elems) {
    CHECK(torus_project(translate(t, r), m) == p0);
  }
  std::vector<QuadraticNumber> generic = {QuadraticNumber(Rational(1, 7)),
                                          a2 / QuadraticNumber(3), qn(-2, 5, 1, 9, 2)};
  for (const QuadraticNumber& x : generic) {
    TorusPoint px = torus_project(translate(t, x), m);
    CHECK(px.representative == torus_reduce(m, p0.representative + x));
    for (const QuadraticNumber& r : module_elems) {
      CHECK(torus_project(translate(t, x + r), m) == px);
    }
  }

  // Canonical representatives.
  CHECK(torus_reduce(m, QuadraticNumber(Rational(5, 2)) + QuadraticNumber(Rational(7, 3)) * a2) ==
        QuadraticNumber(Rational(1, 2)) + QuadraticNumber(Rational(1, 3)) * a2);
  CHECK(torus_reduce(m, QuadraticNumber(4) - a2 * QuadraticNumber(9)) == QuadraticNumber(0));
  QuadraticNumber rep = torus_reduce(m, qn(-2, 5, 1, 9, 2));
  CHECK(torus_reduce(m, rep) == rep);

  ReturnModule m2 = return_module({QuadraticNumber(2), a2 * QuadraticNumber(2)}, a2);
  CHECK(torus_reduce(m2, QuadraticNumber(3) + a2) == QuadraticNumber(1) + a2);
  ReturnModule m3 = return_module({a2 * QuadraticNumber(3)}, a2);
  CHECK(torus_reduce(m3, QuadraticNumber(Rational(5, 2)) + a2 * QuadraticNumber(7)) ==
        QuadraticNumber(Rational(5, 2)) + a2);

  // The two singular resolutions land on the same class, tags apart.
  QuadraticNumber phi_m1 = qn(-1, 2, 1, 2, 5);
  ReturnModule m5 = return_module({QuadraticNumber(1), phi_m1}, phi_m1);
  Tiling th = psi(SturmianParams(phi_m1, QuadraticNumber(0), Branch::upper));
  Tiling tl = psi(SturmianParams(phi_m1, QuadraticNumber(0), Branch::lower));
  TorusPoint ph = torus_project(th, m5);
  TorusPoint pl = torus_project(tl, m5);
  CHECK(ph.representative == pl.representative);
  CHECK(ph.representative == QuadraticNumber(0));
  CHECK(ph.origin_tag == Branch::upper);
  CHECK(pl.origin_tag == Branch::lower);
  CHECK(ph != pl);
  TorusPoint ph2 = torus_project(translate(th, QuadraticNumber(Rational(1, 3))), m5);
  CHECK(ph2.origin_tag == Branch::upper);
  CHECK(ph2.representative == torus_reduce(m5, QuadraticNumber(Rational(1, 3))));
}

TEST_CASE("metric certificates") {
  QuadraticNumber a2 = qn(-1, 1, 1, 1, 2);
  SturmianParams s(a2, QuadraticNumber(Rational(1, 3)), Branch::upper);
  Tiling t = psi(s);

  MetricInterval same = metric_d(t, t, Rational(1, 1000000));
  CHECK(same.lo == Rational(0));
  CHECK(same.hi == Rational(0));

  std::vector<QuadraticNumber> xs = {QuadraticNumber(Rational(1, 10)), a2 / QuadraticNumber(8),
                                     QuadraticNumber(Rational(-1, 5))};
  for (const QuadraticNumber& x : xs) {
    Tiling tx = translate(t, x);
    CHECK(metric_feasible(t, tx, x.abs()));  // realign both halves: d <= |x|
    MetricInterval mi = metric_d(t, tx, Rational(1, 128));
    CHECK(Rational(0) <= mi.lo);
    CHECK(mi.lo <= mi.hi);
    CHECK(mi.hi - mi.lo <= Rational(1, 128));
    CHECK(QuadraticNumber(mi.lo) <= x.abs());
  }

  Tiling t10 = translate(t, QuadraticNumber(Rational(1, 10)));
  MetricInterval mi10 = metric_d(t, t10, Rational(1, 128));
  CHECK(mi10.lo == Rational(3, 32));
  CHECK(mi10.hi == Rational(13, 128));
  CHECK(!metric_feasible(t, t10, QuadraticNumber(Rational(1, 20))));
  for (const Rational& e : {Rational(1, 20), Rational(1, 10), Rational(1, 2)}) {
    CHECK(metric_feasible(t, t10, QuadraticNumber(e)) ==
          metric_feasible(t10, t, QuadraticNumber(e)));
  }
  // Oracle monotonicity in the scale.
  CHECK(metric_feasible(t, t10, QuadraticNumber(Rational(1, 5))));
  CHECK(metric_feasible(t, t10, QuadraticNumber(Rational(2, 5))));

  // The singular pair: identical outside [0, 1 + alpha], so the distance is
  // positive and realized by half-line agreement, giving exactly sqrt(2).
  QuadraticNumber phi_m1 = qn(-1, 2, 1, 2, 5);
  Tiling th = psi(SturmianParams(phi_m1, QuadraticNumber(0), Branch::upper));
  Tiling tl = psi(SturmianParams(phi_m1, QuadraticNumber(0), Branch::lower));
  MetricInterval ms = metric_d(th, tl, Rational(1, 64));
  CHECK(ms.lo == Rational(45, 32));
  CHECK(ms.hi == Rational(91, 64));
  CHECK(ms.lo > Rational(0));
  QuadraticNumber root2 = QuadraticNumber::sqrt_of(Int(2));
  CHECK(QuadraticNumber(ms.lo) <= root2);
  CHECK(root2 <= QuadraticNumber(ms.hi));
  CHECK(ms.hi - ms.lo <= Rational(1, 64));

  // Distinct intercepts in one hull still admit an enclosure.
  Tiling t2 = psi(SturmianParams(a2, QuadraticNumber(Rational(2, 5)), Branch::upper));
  MetricInterval mi2 = metric_d(t, t2, Rational(1, 64));
  CHECK(Rational(0) <= mi2.lo);
  CHECK(mi2.lo <= mi2.hi);
  CHECK(mi2.hi <= Rational(3));

  CHECK_THROWS_AS(
      metric_d(t, psi(SturmianParams(qn(-1, 1, 1, 1, 3), QuadraticNumber(Rational(1, 3)),
                                     Branch::upper)),
               Rational(1, 4)),
      std::domain_error);
  CHECK_THROWS_AS(metric_d(t, Tiling::from_substitution(SubstitutionRule::parse("a>aa")),
                           Rational(1, 4)),
                  std::domain_error);
  CHECK_THROWS_AS(metric_d(t, t, Rational(0)), std::domain_error);
  CHECK_THROWS_AS(metric_feasible(t, t, QuadraticNumber(0)), std::domain_error);
}
