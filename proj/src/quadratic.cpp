#include "aptile/quadratic.hpp"

#include <cctype>
#include <vector>

namespace aptile {

std::pair<Int, Int> split_square(Int d) {
  if (d < 1) throw std::domain_error("split_square: radicand must be positive");
  Int s = 1;
  auto strip = [&](unsigned long p) {
    Int pp = Int(p) * Int(p);
    while (mpz_divisible_p(d.get_mpz_t(), pp.get_mpz_t())) {
      d /= pp;
      s *= p;
    }
  };
  strip(2);
  for (unsigned long p = 3; p <= 65536 && Int(p) * Int(p) <= d; p += 2) strip(p);
  if (d > 1 && mpz_perfect_square_p(d.get_mpz_t())) {
    s *= isqrt(d);
    d = 1;
  }
  return {s, d};
}

QuadraticNumber::QuadraticNumber(const Rational& rat, const Rational& surd, const Int& radicand)
    : rat_(rat), surd_(surd), d_(radicand) {
  if (d_ <= 0) throw std::domain_error("QuadraticNumber: radicand must be positive");
  if (surd_ == Rational(0)) {
    d_ = 1;
    return;
  }
  auto [s, f] = split_square(d_);
  surd_ *= Rational(s);
  d_ = f;
  if (d_ == 1) {  // the radicand was a perfect square: value is rational
    rat_ += surd_;
    surd_ = 0;
  }
}

Rational QuadraticNumber::to_rational() const {
  if (!is_rational()) throw std::domain_error("to_rational: value is irrational");
  return rat_;
}

Int QuadraticNumber::merge_radicand(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.d_ == y.d_) return x.d_;
  if (x.d_ == 1) return y.d_;
  if (y.d_ == 1) return x.d_;
  throw std::domain_error("QuadraticNumber: mixed radicands " + x.d_.get_str() + " and " +
                          y.d_.get_str());
}

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
  Int d = QuadraticNumber::merge_radicand(x, y);
  return QuadraticNumber(QuadraticNumber::canonical_tag{}, x.rat_ + y.rat_, x.surd_ + y.surd_, d);
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
  Int d = QuadraticNumber::merge_radicand(x, y);
  return QuadraticNumber(QuadraticNumber::canonical_tag{}, x.rat_ - y.rat_, x.surd_ - y.surd_, d);
}

QuadraticNumber QuadraticNumber::operator-() const {
  return QuadraticNumber(canonical_tag{}, -rat_, -surd_, d_);
}

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
  Int d = QuadraticNumber::merge_radicand(x, y);
  Rational rd{d};
  return QuadraticNumber(QuadraticNumber::canonical_tag{},
                         x.rat_ * y.rat_ + x.surd_ * y.surd_ * rd,
                         x.rat_ * y.surd_ + x.surd_ * y.rat_, d);
}

QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
  Int d = QuadraticNumber::merge_radicand(x, y);
  // 1/(a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - b^2 d); the norm vanishes
  // only for y == 0 since d is square-free.
  Rational norm = y.rat_ * y.rat_ - y.surd_ * y.surd_ * Rational(d);
  if (norm == Rational(0)) throw std::domain_error("QuadraticNumber: division by zero");
  return QuadraticNumber(QuadraticNumber::canonical_tag{},
                         (x.rat_ * y.rat_ - x.surd_ * y.surd_ * Rational(d)) / norm,
                         (x.surd_ * y.rat_ - x.rat_ * y.surd_) / norm, d);
}

int QuadraticNumber::sign() const {
  int sr = rat_.sign(), ss = surd_.sign();
  if (ss == 0) return sr;
  if (sr == 0) return ss;
  if (sr == ss) return sr;
  // Opposite signs: |rat| vs |surd|*sqrt(d), decided by squaring (never a
  // tie: equality would force sqrt(d) rational).
  int cmp = (rat_ * rat_ - surd_ * surd_ * Rational(d_)).sign();
  if (cmp == 0) throw std::logic_error("QuadraticNumber: non-canonical radicand");
  return cmp > 0 ? sr : ss;
}

void QuadraticNumber::integer_form(Int& a, Int& b, Int& c) const {
  Int qden = rat_.den(), sden = surd_.den();
  c = qden * sden / gcd(qden, sden);
  a = rat_.num() * (c / qden);
  b = surd_.num() * (c / sden);
}

Int QuadraticNumber::floor() const {
  if (is_rational()) return rat_.floor();
  Int a, b, c;
  integer_form(a, b, c);
  Int s = isqrt(b * b * d_);  // b*sqrt(d) lies strictly between s and s+1 in absolute value
  return b > 0 ? fdiv(a + s, c) : fdiv(a - s - 1, c);
}

Int QuadraticNumber::ceil() const { return -((-*this).floor()); }

QuadraticNumber QuadraticNumber::conjugate() const {
  return QuadraticNumber(canonical_tag{}, rat_, -surd_, d_);
}

std::pair<Rational, Rational> QuadraticNumber::approx_interval(unsigned bits) const {
  if (is_rational()) return {rat_, rat_};
  Int scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
  Int t = isqrt(d_ * scale * scale);  // sqrt(d) in [t, t+1] / 2^bits
  Rational lo = Rational(t, scale), hi = Rational(t + 1, scale);
  if (surd_.sign() < 0) std::swap(lo, hi);
  return {rat_ + surd_ * lo, rat_ + surd_ * hi};
}

double QuadraticNumber::to_double() const {
  auto [lo, hi] = approx_interval(80);
  return ((lo + hi) / Rational(2)).to_double();
}

std::string QuadraticNumber::to_string() const {
  if (is_rational()) return rat_.to_string();
  std::string root = "sqrt(" + d_.get_str() + ")";
  Rational as = surd_.abs();
  std::string sterm = (as == Rational(1)) ? root : as.to_string() + "*" + root;
  if (rat_ == Rational(0)) return (surd_.sign() < 0 ? "-" : "") + sterm;
  return rat_.to_string() + (surd_.sign() < 0 ? " - " : " + ") + sterm;
}

namespace {

struct Parser {
  std::string s;
  size_t pos = 0;

  explicit Parser(const std::string& text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }

  bool eof() const { return pos >= s.size(); }
  char peek() const { return eof() ? '\0' : s[pos]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad quadratic literal at offset " + std::to_string(pos) + ": " + why);
  }

  Int integer() {
    size_t start = pos;
    if (peek() == '+' || peek() == '-') ++pos;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      fail("expected integer");
    return Int(s.substr(start, pos - start), 10);
  }

  Rational rational() {
    Int n = integer();
    if (eat('/')) return Rational(n, integer());
    return Rational(n);
  }

  bool at_sqrt() const { return s.compare(pos, 5, "sqrt(") == 0; }

  QuadraticNumber root() {
    pos += 5;
    Int d = integer();
    if (!eat(')')) fail("expected ')'");
    return QuadraticNumber::sqrt_of(d);
  }

  // term := sqrt(D) [ '/' int | '*' rational ] | rational [ '*' sqrt(D) [ '/' int ] ]
  QuadraticNumber term() {
    if (at_sqrt()) {
      QuadraticNumber r = root();
      if (eat('/')) return r / QuadraticNumber(Rational(integer()));
      if (eat('*')) return r * QuadraticNumber(rational());
      return r;
    }
    Rational coef = rational();
    if (eat('*')) {
      if (!at_sqrt()) fail("expected sqrt(D) after '*'");
      QuadraticNumber r = root();
      if (eat('/')) return QuadraticNumber(coef) * r / QuadraticNumber(Rational(integer()));
      return QuadraticNumber(coef) * r;
    }
    return QuadraticNumber(coef);
  }

  QuadraticNumber expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    QuadraticNumber acc = term();
    if (neg) acc = -acc;
    while (!eof()) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        fail("expected '+' or '-'");
    }
    return acc;
  }
};

}  // namespace

QuadraticNumber QuadraticNumber::parse(const std::string& text) {
  Parser p(text);
  if (p.eof()) throw std::invalid_argument("empty quadratic literal");
  return p.expr();
}

std::pair<Rational, Rational> decompose(const QuadraticNumber& x, const QuadraticNumber& theta) {
  if (theta.is_rational()) throw std::domain_error("decompose: basis element must be irrational");
  if (!x.is_rational() && x.radicand() != theta.radicand())
    throw std::domain_error("decompose: value lies outside the field of the basis");
  Rational c1 = x.surd_part() / theta.surd_part();
  Rational c0 = x.rat_part() - c1 * theta.rat_part();
  return {c0, c1};
}

}  // namespace aptile
