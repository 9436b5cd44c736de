#pragma once

#include <aptile/quadratic.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace aptile {

// Continued fraction [a0; a1, a2, ...] with an eventually periodic digit
// stream.  `pre` holds the preperiodic digits and `per` the repeating block;
// rational numbers have an empty `per`, quadratic irrationals a nonempty one.
//
// Storage is canonical:
//  - `per` is primitive (not a repetition of a shorter block) and is kept in
//    its lexicographically minimal rotation;
//  - `pre` is as short as possible subject to that rotation;
//  - rational expansions use the Euclidean form, whose last digit is >= 2
//    unless the expansion is a single integer digit.
// Two numbers share a GL(2,Z) orbit exactly when their stored `per` blocks
// are identical, which is what cf_equivalent exploits.
struct ContinuedFraction {
  std::vector<Int> pre;
  std::vector<Int> per;

  bool is_rational() const { return per.empty(); }

  // Digit a_k of the stream.  Throws std::out_of_range when a rational
  // expansion has fewer than k+1 digits.
  Int digit(std::size_t k) const;

  // Number of digits of a finite (rational) expansion; throws
  // std::domain_error for periodic expansions.
  std::size_t size() const;

  // Human-readable form: "[2; 3]" for finite expansions, "[1; (2)]" with the
  // period parenthesized otherwise.  A purely periodic expansion unrolls one
  // digit so the integer part is always visible, e.g. "[1; (1)]" for the
  // golden ratio.
  std::string display() const;

  friend bool operator==(const ContinuedFraction& x, const ContinuedFraction& y) {
    return x.pre == y.pre && x.per == y.per;
  }
  friend bool operator!=(const ContinuedFraction& x, const ContinuedFraction& y) {
    return !(x == y);
  }
};

// Integer Moebius transformation acting on numbers by
//     y = (c + x*d) / (a + x*b).
// The identity is {a=1, b=0, c=0, d=1}; composition matches functional
// composition, (M*N)(x) = M(N(x)).
struct ModularMatrix {
  Int a{1}, b{0}, c{0}, d{1};

  Int det() const { return a * d - b * c; }

  // Moebius inverse (the adjugate; exact inverse matrix when |det| == 1).
  ModularMatrix inverse() const { return ModularMatrix{d, -b, -c, a}; }

  ModularMatrix operator*(const ModularMatrix& n) const;

  // The map x -> q + 1/x, one digit of a continued fraction.
  static ModularMatrix from_quotient(const Int& q) { return ModularMatrix{0, 1, 1, q}; }

  friend bool operator==(const ModularMatrix& x, const ModularMatrix& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const ModularMatrix& x, const ModularMatrix& y) { return !(x == y); }
};

// Applies m to x.  Throws std::domain_error when the denominator a + x*b
// vanishes.
QuadraticNumber mobius_apply(const ModularMatrix& m, const QuadraticNumber& x);

// Continued fraction expansion of x, canonical as described above.  Uses the
// Euclidean algorithm for rationals and the integer (P, Q) complete-quotient
// recursion with state cycle detection for quadratic irrationals, so the
// period is found exactly.
ContinuedFraction cf_expand(const QuadraticNumber& x);

// k-th convergent p_k/q_k of the digit stream (k = 0 gives a0/1).  Throws
// std::out_of_range past the end of a rational expansion.
Rational cf_convergent(const ContinuedFraction& cf, std::size_t k);

// Value of the purely periodic continued fraction [(per)]; every digit must
// be a positive integer (throws std::domain_error otherwise).
QuadraticNumber purely_periodic_value(const std::vector<Int>& per);

// A reduced quadratic irrational (value > 1 with Galois conjugate in (-1, 0),
// equivalently purely periodic expansion) sharing the tail of x's expansion:
// the value of the lexicographically minimal rotation of x's period, so equal
// inputs of one orbit map to one representative.  Throws std::domain_error
// for rational x.
QuadraticNumber reduced_representative(const QuadraticNumber& x);

// Decides whether x and y lie in one GL(2,Z) orbit under Moebius action.  On
// success returns a witness W with mobius_apply(W, x) == y and |det W| == 1;
// the witness is re-verified exactly before being returned.  Returns nullopt
// for inequivalent inputs and throws std::domain_error when either input is
// rational.
std::optional<ModularMatrix> cf_equivalent(const QuadraticNumber& x,
                                           const QuadraticNumber& y);

}  // namespace aptile
