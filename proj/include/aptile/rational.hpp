#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace aptile {

using Int = mpz_class;

/// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// Floor division (rounds toward -infinity), b != 0.
inline Int fdiv(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("fdiv: division by zero");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool fits_long(const Int& n) { return n.fits_slong_p(); }

/// Exact rational number. Canonical form (lowest terms, positive
/// denominator) is maintained by every constructor and operation.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}        // implicit: literals are convenient
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& num, const Int& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }

  /// Accepts "p", "p/q" and plain decimal/scientific literals such as
  /// "0.25" or "1e-6" (converted exactly).
  static Rational parse(const std::string& text);

  Int num() const { return Int(v_.get_num()); }
  Int den() const { return Int(v_.get_den()); }
  bool is_integer() const { return v_.get_den() == 1; }

  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Int floor() const { return fdiv(num(), den()); }
  Int ceil() const { return -fdiv(-num(), den()); }

  double to_double() const { return v_.get_d(); }
  std::string to_string() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
  }

  friend Rational operator+(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ + y.v_)); }
  friend Rational operator-(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ - y.v_)); }
  friend Rational operator*(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ * y.v_)); }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.v_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(x.v_ / y.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& y) { v_ += y.v_; return *this; }
  Rational& operator-=(const Rational& y) { v_ -= y.v_; return *this; }
  Rational& operator*=(const Rational& y) { v_ *= y.v_; return *this; }
  Rational& operator/=(const Rational& y) { *this = *this / y; return *this; }

  friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
  friend bool operator!=(const Rational& x, const Rational& y) { return x.v_ != y.v_; }
  friend bool operator<(const Rational& x, const Rational& y) { return x.v_ < y.v_; }
  friend bool operator<=(const Rational& x, const Rational& y) { return x.v_ <= y.v_; }
  friend bool operator>(const Rational& x, const Rational& y) { return x.v_ > y.v_; }
  friend bool operator>=(const Rational& x, const Rational& y) { return x.v_ >= y.v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline Rational rat_abs(const Rational& x) { return x.abs(); }

}  // namespace aptile
