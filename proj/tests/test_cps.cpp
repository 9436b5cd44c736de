#include <doctest.h>

#include <aptile/cps.hpp>
#include <aptile/words.hpp>

#include <set>
#include <stdexcept>
#include <vector>

using namespace aptile;

namespace {

QuadraticNumber qn(long p, long q, long r, long s, long d) {
  return QuadraticNumber(Rational(p, q), Rational(r, s), Int(d));
}

std::vector<std::pair<long, long>> pairs(const VertexSet& v) {
  std::vector<std::pair<long, long>> out;
  for (const auto& p : v.points)
    out.emplace_back(static_cast<long>(p.i.get_si()),
                     static_cast<long>(p.j.get_si()));
  return out;
}

}  // namespace

TEST_CASE("scheme validation mirrors the word parameter domain") {
  QuadraticNumber phi_m1 = qn(-1, 2, 1, 2, 5);
  CHECK_NOTHROW(CutProjectScheme(phi_m1, QuadraticNumber(0)));
  CHECK_THROWS_AS(CutProjectScheme(QuadraticNumber(Rational(1, 3)), QuadraticNumber(0)),
                  std::domain_error);
  CHECK_THROWS_AS(CutProjectScheme(qn(1, 1, 1, 2, 5), QuadraticNumber(0)),
                  std::domain_error);
  CHECK_THROWS_AS(CutProjectScheme(phi_m1, QuadraticNumber(1)), std::domain_error);
  CHECK_THROWS_AS(CutProjectScheme(phi_m1, qn(0, 1, 1, 3, 2)), std::domain_error);
  CHECK(word_branch(WindowConvention::half_open_high) == Branch::upper);
  CHECK(word_branch(WindowConvention::half_open_low) == Branch::lower);
}

TEST_CASE("acceptance window is the half-open unit-cell projection") {
  QuadraticNumber phi_m1 = qn(-1, 2, 1, 2, 5);
  CutProjectScheme high(phi_m1, QuadraticNumber(0), WindowConvention::half_open_high);
  CutProjectScheme low(phi_m1, QuadraticNumber(0), WindowConvention::half_open_low);

  // The singular intercept puts (1,0) and (0,1) on the two window borders;
  // each convention keeps exactly one of them.  The origin is interior.
  CHECK(accept(high, Int(0), Int(0)));
  CHECK(accept(low, Int(0), Int(0)));
  CHECK(accept(high, Int(1), Int(0)));
  CHECK(!accept(high, Int(0), Int(1)));
  CHECK(!accept(low, Int(1), Int(0)));
  CHECK(accept(low, Int(0), Int(1)));
  CHECK(internal_coordinate(high, Int(1), Int(0)) == window_interval(high).second);
  CHECK(internal_coordinate(high, Int(0), Int(1)) == window_interval(high).first);

  // Far outside the strip: rejected under both conventions.
  CHECK(!accept(high, Int(100), Int(0)));
  CHECK(!accept(low, Int(100), Int(0)));
  CHECK(!accept(high, Int(0), Int(100)));
  CHECK(!accept(low, Int(-40), Int(7)));

  // Window has unit length and the interval consists of the points between
  // the two integer thresholds around rho - alpha.
  auto [wlo, whi] = window_interval(high);
  CHECK(whi - wlo == QuadraticNumber(1));
  CHECK(QuadraticNumber(0) - phi_m1 <= whi);
  CHECK(wlo < QuadraticNumber(0) - phi_m1);

  // Away from singular intercepts the conventions agree everywhere.
  CutProjectScheme gh(phi_m1, QuadraticNumber(Rational(1, 3)),
                      WindowConvention::half_open_high);
  CutProjectScheme gl(phi_m1, QuadraticNumber(Rational(1, 3)),
                      WindowConvention::half_open_low);
  for (long i = -8; i <= 8; ++i)
    for (long j = -8; j <= 8; ++j)
      CHECK(accept(gh, Int(i), Int(j)) == accept(gl, Int(i), Int(j)));
}

TEST_CASE("staircase vertices are the accepted anti-diagonal points") {
  CutProjectScheme s(qn(0, 1, 1, 5, 5), QuadraticNumber(Rational(2, 7)),
                     WindowConvention::half_open_high);
  for (long k = -40; k <= 40; ++k) {
    LatticePoint p = vertex_at(s, Int(k));
    CHECK(p.i + p.j == k);
    CHECK(accept(s, p.i, p.j));
    // Uniqueness along the anti-diagonal.
    CHECK(!accept(s, p.i + 1, p.j - 1));
    CHECK(!accept(s, p.i - 1, p.j + 1));
  }
  CHECK(vertex_at(s, Int(0)) == LatticePoint{Int(0), Int(0)});
  CHECK(position(s, LatticePoint{Int(3), Int(2)}) ==
        QuadraticNumber(3) + QuadraticNumber(2) * s.alpha);
}

TEST_CASE("vertex ranges are sorted with two exact gap values") {
  QuadraticNumber sqrt2_m1 = qn(-1, 1, 1, 1, 2);
  CutProjectScheme s(sqrt2_m1, QuadraticNumber(Rational(1, 3)),
                     WindowConvention::half_open_low);

  VertexSet v = vertices_in_range(s, QuadraticNumber(0), QuadraticNumber(10));
  CHECK(v.base_k == 0);
  CHECK(pairs(v) == std::vector<std::pair<long, long>>{
                        {0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {3, 2}, {3, 3},
                        {4, 3}, {4, 4}, {5, 4}, {5, 5}, {6, 5}, {7, 5}, {7, 6}});
  CHECK(gap_word(s, v).to_string() == "1010010101001");
  CHECK(gap_word(s, v).base_index == 0);

  VertexSet neg = vertices_in_range(s, QuadraticNumber(-5), QuadraticNumber(0));
  CHECK(neg.base_k == -6);
  CHECK(pairs(neg) == std::vector<std::pair<long, long>>{
                          {-4, -2}, {-3, -2}, {-3, -1}, {-2, -1}, {-2, 0}, {-1, 0}});

  // Sortedness, gap membership, and boundary tightness.
  std::set<std::string> gaps;
  for (std::size_t n = 0; n + 1 < v.points.size(); ++n) {
    QuadraticNumber d = position(s, v.points[n + 1]) - position(s, v.points[n]);
    CHECK(d.sign() > 0);
    CHECK((d == QuadraticNumber(1) || d == s.alpha));
    gaps.insert(d.to_string());
  }
  CHECK(gaps.size() == 2);
  CHECK(position(s, v.points.front()) >= QuadraticNumber(0));
  CHECK(position(s, vertex_at(s, v.base_k - 1)) < QuadraticNumber(0));
  CHECK(position(s, v.points.back()) < QuadraticNumber(10));
  CHECK(position(s, vertex_at(s, v.base_k + Int(v.points.size()))) >=
        QuadraticNumber(10));

  CHECK(vertices_in_range(s, QuadraticNumber(5), QuadraticNumber(5)).points.empty());
  CHECK_THROWS_AS(vertices_in_range(s, QuadraticNumber(1), QuadraticNumber(0)),
                  std::invalid_argument);
}

TEST_CASE("gap words reproduce sturmian blocks of the same parameters") {
  struct Probe {
    QuadraticNumber alpha, rho;
    WindowConvention w;
  };
  std::vector<Probe> probes = {
      {qn(-1, 2, 1, 2, 5), QuadraticNumber(Rational(1, 3)),
       WindowConvention::half_open_high},
      {qn(-1, 1, 1, 1, 2), QuadraticNumber(Rational(4, 5)),
       WindowConvention::half_open_low},
      {qn(0, 1, 1, 5, 5), qn(0, 1, 1, 7, 5), WindowConvention::half_open_high},
      {qn(-1, 1, 1, 1, 3), QuadraticNumber(0), WindowConvention::half_open_low},
      {qn(-1, 1, 1, 1, 3), QuadraticNumber(0), WindowConvention::half_open_high},
  };
  for (const auto& pr : probes) {
    CutProjectScheme s(pr.alpha, pr.rho, pr.w);
    VertexSet v = vertices_in_range(s, QuadraticNumber(-60), QuadraticNumber(60));
    Word w = gap_word(s, v);
    SturmianParams p(pr.alpha, pr.rho, word_branch(pr.w));
    long from = w.base_index;
    Word expect = sturmian_block(p, from, from + static_cast<long>(w.size()));
    CHECK(w == expect);
  }

  // Cutting sequences give a third generator for the lower branch.
  CutProjectScheme s(qn(-1, 2, 1, 2, 5), QuadraticNumber(Rational(2, 9)),
                     WindowConvention::half_open_low);
  VertexSet v = vertices_in_range(s, QuadraticNumber(-40), QuadraticNumber(40));
  Word w = gap_word(s, v);
  Word cut = cutting_sequence(s.alpha, s.rho, w.base_index,
                              w.base_index + static_cast<long>(w.size()));
  CHECK(w == cut);
}

TEST_CASE("singular branches differ exactly at the origin vertex") {
  QuadraticNumber phi_m1 = qn(-1, 2, 1, 2, 5);
  CutProjectScheme high(phi_m1, QuadraticNumber(0), WindowConvention::half_open_high);
  CutProjectScheme low(phi_m1, QuadraticNumber(0), WindowConvention::half_open_low);
  VertexSet vh = vertices_in_range(high, QuadraticNumber(-8), QuadraticNumber(8));
  VertexSet vl = vertices_in_range(low, QuadraticNumber(-8), QuadraticNumber(8));
  REQUIRE(vh.points.size() == vl.points.size());
  CHECK(vh.base_k == vl.base_k);
  int differing = 0;
  for (std::size_t n = 0; n < vh.points.size(); ++n) {
    if (!(vh.points[n] == vl.points[n])) {
      ++differing;
      CHECK(vh.points[n] == LatticePoint{Int(1), Int(0)});
      CHECK(vl.points[n] == LatticePoint{Int(0), Int(1)});
    }
  }
  CHECK(differing == 1);
}

TEST_CASE("shifting the intercept by alpha translates the vertex set") {
  QuadraticNumber alpha = qn(-1, 1, 1, 1, 3);  // sqrt(3) - 1
  QuadraticNumber rho(Rational(1, 5));
  CutProjectScheme s(alpha, rho, WindowConvention::half_open_high);

  QuadraticNumber rho2 = rho + alpha;  // still inside [0, 1)
  CutProjectScheme s2(alpha, rho2, WindowConvention::half_open_high);
  // rho < alpha, so the translation realizing the shift is by alpha itself.
  QuadraticNumber t = alpha;
  VertexSet a = vertices_in_range(s2, QuadraticNumber(-20), QuadraticNumber(20));
  VertexSet b = vertices_in_range(s, QuadraticNumber(-20) + t, QuadraticNumber(20) + t);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t n = 0; n < a.points.size(); ++n)
    CHECK(position(s2, a.points[n]) == position(s, b.points[n]) - t);

  // Wrapping case: rho2 + alpha leaves [0, 1), so the representative is
  // rho2 + alpha - 1; the vertex set is still an exact translate, by 1 or by
  // alpha depending on which window threshold was crossed.
  QuadraticNumber wrapped = rho2 + alpha - QuadraticNumber(1);
  REQUIRE(wrapped.sign() >= 0);
  REQUIRE(wrapped < QuadraticNumber(1));
  {
    CutProjectScheme s3(alpha, wrapped, WindowConvention::half_open_high);
    VertexSet c = vertices_in_range(s3, QuadraticNumber(-10), QuadraticNumber(10));
    bool match1 = true, matcha = true;
    VertexSet d1 = vertices_in_range(s2, QuadraticNumber(-10) + QuadraticNumber(1),
                                     QuadraticNumber(10) + QuadraticNumber(1));
    VertexSet da = vertices_in_range(s2, QuadraticNumber(-10) + alpha,
                                     QuadraticNumber(10) + alpha);
    if (d1.points.size() == c.points.size()) {
      for (std::size_t n = 0; n < c.points.size(); ++n)
        if (!(position(s3, c.points[n]) == position(s2, d1.points[n]) - QuadraticNumber(1)))
          match1 = false;
    } else {
      match1 = false;
    }
    if (da.points.size() == c.points.size()) {
      for (std::size_t n = 0; n < c.points.size(); ++n)
        if (!(position(s3, c.points[n]) == position(s2, da.points[n]) - alpha))
          matcha = false;
    } else {
      matcha = false;
    }
    CHECK((match1 || matcha));
  }
}
