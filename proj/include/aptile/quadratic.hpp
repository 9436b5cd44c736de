#pragma once

#include <optional>
#include <string>
#include <utility>

#include "aptile/rational.hpp"

namespace aptile {

/// Element rat + surd*sqrt(d) of a real quadratic field.
///
/// Canonical form: d is positive and square-free, and d == 1 exactly when
/// surd == 0 (rational values). Hence structural equality coincides with
/// value equality, and mixed-field arithmetic (distinct irrational d) is
/// rejected rather than approximated.
class QuadraticNumber {
 public:
  QuadraticNumber() : d_(1) {}
  QuadraticNumber(int n) : rat_(n), d_(1) {}
  QuadraticNumber(long n) : rat_(n), d_(1) {}
  QuadraticNumber(const Int& n) : rat_(n), d_(1) {}
  QuadraticNumber(const Rational& r) : rat_(r), d_(1) {}
  QuadraticNumber(const Rational& rat, const Rational& surd, const Int& radicand);

  static QuadraticNumber sqrt_of(const Int& radicand) {
    return QuadraticNumber(Rational(0), Rational(1), radicand);
  }
  /// Parses the canonical grammar: sums of terms `p/q`, `p/q*sqrt(D)`,
  /// `sqrt(D)`, `sqrt(D)/q`, e.g. "1/2 + 1/2*sqrt(5)" or "sqrt(2)-1".
  static QuadraticNumber parse(const std::string& text);

  const Rational& rat_part() const { return rat_; }
  const Rational& surd_part() const { return surd_; }
  const Int& radicand() const { return d_; }
  bool is_rational() const { return surd_ == Rational(0); }
  /// The rational value; throws if irrational.
  Rational to_rational() const;

  int sign() const;
  Int floor() const;
  Int ceil() const;
  QuadraticNumber conjugate() const;  // rat - surd*sqrt(d)
  QuadraticNumber abs() const { return sign() >= 0 ? *this : -*this; }

  /// Certified enclosure [lo, hi] with hi - lo <= (|surd|+1) * 2^-bits.
  std::pair<Rational, Rational> approx_interval(unsigned bits) const;
  double to_double() const;
  std::string to_string() const;

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y);
  QuadraticNumber operator-() const;
  QuadraticNumber& operator+=(const QuadraticNumber& y) { return *this = *this + y; }
  QuadraticNumber& operator-=(const QuadraticNumber& y) { return *this = *this - y; }
  QuadraticNumber& operator*=(const QuadraticNumber& y) { return *this = *this * y; }
  QuadraticNumber& operator/=(const QuadraticNumber& y) { return *this = *this / y; }

  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.d_ == y.d_ && x.rat_ == y.rat_ && x.surd_ == y.surd_;
  }
  friend bool operator!=(const QuadraticNumber& x, const QuadraticNumber& y) { return !(x == y); }
  friend bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() >= 0; }

 private:
  struct canonical_tag {};
  QuadraticNumber(canonical_tag, Rational rat, Rational surd, Int d)
      : rat_(std::move(rat)), surd_(std::move(surd)), d_(std::move(d)) {
    if (surd_ == Rational(0)) d_ = 1;
  }
  static Int merge_radicand(const QuadraticNumber& x, const QuadraticNumber& y);
  // Common-denominator integer form x = (a + b*sqrt(d)) / c with c > 0.
  void integer_form(Int& a, Int& b, Int& c) const;

  Rational rat_;
  Rational surd_;
  Int d_;
};

/// d = s*s*f with f square-free (exact for every square factor with a prime
/// below 2^16; larger adversarial square factors are out of the artifact's
/// domain). Returns (s, f).
std::pair<Int, Int> split_square(Int d);

/// Coordinates (c0, c1) of x in the rational basis {1, theta}:
/// x = c0 + c1*theta. theta must be irrational and in the same field as x.
std::pair<Rational, Rational> decompose(const QuadraticNumber& x, const QuadraticNumber& theta);

}  // namespace aptile
