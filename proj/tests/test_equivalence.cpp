#include <doctest.h>

#include <aptile/equivalence.hpp>

#include <stdexcept>
#include <vector>

using namespace aptile;

namespace {

QuadraticNumber qn(long p, long q, long r, long s, long d) {
  return QuadraticNumber(Rational(p, q), Rational(r, s), Int(d));
}

const QuadraticNumber phi_m1 = qn(-1, 2, 1, 2, 5);   // (sqrt(5)-1)/2
const QuadraticNumber sqrt2_m1 = qn(-1, 1, 1, 1, 2);  // sqrt(2)-1
const QuadraticNumber sqrt3_m1 = qn(-1, 1, 1, 1, 3);  // sqrt(3)-1

}  // namespace

TEST_CASE("strong orbit equivalence verdicts") {
  // Same slope: identity certificate.
  EquivalenceVerdict self = soe_tiling_spaces(sqrt2_m1, sqrt2_m1);
  CHECK(self.equivalent);
  CHECK(self.witness == ModularMatrix{});
  CHECK(self.route == "identical slopes");

  // Moebius images stay in the class, and the returned witness acts exactly.
  std::vector<ModularMatrix> moves = {
      ModularMatrix{Int(1), Int(0), Int(1), Int(1)},    // x + 1
      ModularMatrix{Int(1), Int(1), Int(0), Int(1)},    // x / (1 + x)
      ModularMatrix{Int(0), Int(1), Int(1), Int(0)},    // 1 / x
      ModularMatrix{Int(2), Int(3), Int(1), Int(2)},    // det 1, generic
      ModularMatrix{Int(5), Int(-2), Int(-3), Int(1)},  // det -1, generic
  };
  for (const QuadraticNumber& a : {phi_m1, sqrt2_m1, sqrt3_m1}) {
    for (const ModularMatrix& m : moves) {
      QuadraticNumber b = mobius_apply(m, a);
      EquivalenceVerdict v = soe_tiling_spaces(a, b);
      CHECK(v.equivalent);
      REQUIRE(v.witness.has_value());
      CHECK(mobius_apply(*v.witness, a) == b);
      CHECK(v.witness->det().get_si() * v.witness->det().get_si() == 1);
      CHECK(v.route == "continued fraction periods coincide");
      CHECK(v.alpha_cf.per == v.beta_cf.per);
    }
  }

  // The fixed panel of distinct classes.
  EquivalenceVerdict no1 = soe_tiling_spaces(phi_m1, sqrt2_m1);
  CHECK(!no1.equivalent);
  CHECK(!no1.witness.has_value());
  CHECK(no1.route == "continued fraction periods differ");
  CHECK(no1.alpha_cf.per == std::vector<Int>{Int(1)});
  CHECK(no1.beta_cf.per == std::vector<Int>{Int(2)});
  EquivalenceVerdict no2 = soe_tiling_spaces(sqrt2_m1, sqrt3_m1);
  CHECK(!no2.equivalent);

  // Equivalence-relation structure through witnesses: symmetry and
  // transitivity compose exactly.
  QuadraticNumber b = mobius_apply(moves[3], sqrt2_m1);
  QuadraticNumber c = mobius_apply(moves[4], b);
  ModularMatrix wab = *soe_tiling_spaces(sqrt2_m1, b).witness;
  ModularMatrix wbc = *soe_tiling_spaces(b, c).witness;
  ModularMatrix wba = *soe_tiling_spaces(b, sqrt2_m1).witness;
  CHECK(mobius_apply(wba, b) == sqrt2_m1);
  CHECK(mobius_apply(wbc * wab, sqrt2_m1) == c);

  CHECK_THROWS_AS(soe_tiling_spaces(QuadraticNumber(Rational(1, 2)), sqrt2_m1),
                  std::domain_error);
  CHECK_THROWS_AS(soe_tiling_spaces(sqrt2_m1, QuadraticNumber(3)), std::domain_error);
}

TEST_CASE("torus map classification") {
  CHECK(diffeo_criterion(ModularMatrix{}) == TorusMapClass::diffeomorphism);
  CHECK(diffeo_criterion(ModularMatrix{Int(0), Int(1), Int(1), Int(0)}) ==
        TorusMapClass::diffeomorphism);  // det -1
  CHECK(diffeo_criterion(ModularMatrix{Int(2), Int(0), Int(0), Int(1)}) ==
        TorusMapClass::smooth_only);  // det 2
  CHECK(diffeo_criterion(ModularMatrix{Int(2), Int(3), Int(4), Int(5)}) ==
        TorusMapClass::smooth_only);  // det -2
  CHECK(diffeo_criterion(ModularMatrix{Int(1), Int(1), Int(1), Int(1)}) ==
        TorusMapClass::neither);  // det 0
}

TEST_CASE("substitutive witnesses for quadratic classes") {
  SubstitutiveWitness w = class_substitutive_witness(phi_m1);
  CHECK(w.beta == phi_m1);
  CHECK(w.pisot);
  CHECK(w.lambda == qn(1, 2, 1, 2, 5));
  CHECK(w.beta_cf.pre == std::vector<Int>{Int(0)});
  CHECK(w.beta_cf.per == std::vector<Int>{Int(1)});
  CHECK(mobius_apply(w.matrix, phi_m1) == w.beta);
  QuadraticNumber det(w.matrix.det());
  CHECK(det.abs() == QuadraticNumber(1));

  // (3 - sqrt(5))/2 = [0; 2, (1)] lands on the golden representative.
  SubstitutiveWitness v = class_substitutive_witness(qn(3, 2, -1, 2, 5));
  CHECK(v.beta == phi_m1);
  CHECK(v.pisot);
  CHECK(mobius_apply(v.matrix, qn(3, 2, -1, 2, 5)) == phi_m1);

  // A two-digit period keeps its own slope: sqrt(3) - 1 = [0; (1, 2)].
  SubstitutiveWitness u = class_substitutive_witness(sqrt3_m1);
  CHECK(u.beta == sqrt3_m1);
  CHECK(u.beta_cf.per == std::vector<Int>{Int(1), Int(2)});
  CHECK(u.pisot);
  CHECK(language_invariant(u.rule, u.beta, 12));

  CHECK_THROWS_AS(class_substitutive_witness(QuadraticNumber(Rational(2, 5))),
                  std::domain_error);
  CHECK_THROWS_AS(class_substitutive_witness(qn(1, 1, 1, 1, 2)), std::domain_error);
}
