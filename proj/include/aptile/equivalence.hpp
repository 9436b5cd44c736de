#pragma once

#include <aptile/confrac.hpp>
#include <aptile/substitution.hpp>

#include <optional>
#include <string>

namespace aptile {

// Outcome of the arithmetic strong-orbit-equivalence decision, carrying a
// machine-checkable certificate: when `equivalent` is true, `witness` holds a
// matrix W with |det W| = 1 whose Moebius action maps the first slope to the
// second exactly; it is absent otherwise.  `route` records which criterion
// fired, and the two expansions document the compared period tails.
struct EquivalenceVerdict {
  bool equivalent = false;
  std::optional<ModularMatrix> witness;
  std::string route;
  ContinuedFraction alpha_cf;
  ContinuedFraction beta_cf;
};

// Decides strong orbit equivalence of the tiling spaces of two irrational
// quadratic slopes - equivalently of their symbolic systems, equivalently
// whether the associated tori are diffeomorphic: all reduce to the slopes
// lying in one GL(2,Z) orbit, i.e. to their continued fraction periods
// agreeing up to rotation.  Equal slopes short-circuit to the identity
// witness.  Throws std::domain_error on rational input.
EquivalenceVerdict soe_tiling_spaces(const QuadraticNumber& alpha, const QuadraticNumber& beta);

enum class TorusMapClass { diffeomorphism, smooth_only, neither };

// Classifies the map induced on irrational tori by an integer matrix:
// |det| = 1 gives a diffeomorphism, any other nonzero determinant a smooth
// non-invertible map, and a singular matrix induces neither.
TorusMapClass diffeo_criterion(const ModularMatrix& m);

// Full certificate that the class of alpha contains a substitutive slope:
// beta in the same GL(2,Z) orbit with expansion [0; (period)], the validated
// rule fixing beta's language, the exact witness matrix, and the Pisot
// expansion factor of the rule.  Every field is re-verified before return.
struct SubstitutiveWitness {
  QuadraticNumber beta;
  SubstitutionRule rule;
  bool pisot = false;
  ContinuedFraction alpha_cf;
  ContinuedFraction beta_cf;
  ModularMatrix matrix;
  QuadraticNumber lambda;
};

// Throws std::domain_error unless alpha is an irrational quadratic in (0, 1);
// throws std::logic_error if any certificate check fails (which would mean an
// internal bug, not bad input).
SubstitutiveWitness class_substitutive_witness(const QuadraticNumber& alpha);

}  // namespace aptile
