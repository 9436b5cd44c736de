#include <aptile/confrac.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace aptile {

namespace {

// Rewrites (pre, per) into the canonical storage form: primitive period,
// shortest preperiod, then the lexicographically minimal rotation of the
// period with the rotated-off digits appended to the preperiod.
void canonicalize(ContinuedFraction& cf) {
  if (cf.per.empty()) return;
  std::vector<Int>& per = cf.per;

  std::size_t n = per.size();
  for (std::size_t k = 1; k < n; ++k) {
    if (n % k != 0) continue;
    bool repeats = true;
    for (std::size_t i = k; i < n && repeats; ++i) repeats = (per[i] == per[i % k]);
    if (repeats) {
      per.resize(k);
      n = k;
      break;
    }
  }

  while (!cf.pre.empty() && cf.pre.back() == per.back()) {
    Int last = per.back();
    per.pop_back();
    per.insert(per.begin(), last);
    cf.pre.pop_back();
  }

  std::size_t best = 0;
  for (std::size_t r = 1; r < per.size(); ++r) {
    for (std::size_t i = 0; i < per.size(); ++i) {
      const Int& x = per[(r + i) % per.size()];
      const Int& y = per[(best + i) % per.size()];
      if (x < y) {
        best = r;
        break;
      }
      if (y < x) break;
    }
  }
  if (best != 0) {
    cf.pre.insert(cf.pre.end(), per.begin(), per.begin() + static_cast<std::ptrdiff_t>(best));
    std::rotate(per.begin(), per.begin() + static_cast<std::ptrdiff_t>(best), per.end());
  }
}

void join_digits(std::ostringstream& os, const std::vector<Int>& digits,
                 std::size_t from, bool& first) {
  for (std::size_t i = from; i < digits.size(); ++i) {
    if (!first) os << ", ";
    os << digits[i];
    first = false;
  }
}

}  // namespace

Int ContinuedFraction::digit(std::size_t k) const {
  if (k < pre.size()) return pre[k];
  if (per.empty()) throw std::out_of_range("continued fraction digit index past the end of a finite expansion");
  return per[(k - pre.size()) % per.size()];
}

std::size_t ContinuedFraction::size() const {
  if (!per.empty()) throw std::domain_error("size() is only defined for finite expansions");
  return pre.size();
}

std::string ContinuedFraction::display() const {
  std::ostringstream os;
  Int head;
  std::size_t body_from = 1;
  std::vector<Int> shown_per = per;
  if (!pre.empty()) {
    head = pre[0];
  } else {
    // Purely periodic: unroll one digit so the integer part shows.
    head = per[0];
    std::rotate(shown_per.begin(), shown_per.begin() + 1, shown_per.end());
    body_from = 0;  // nothing further from pre
  }

  os << '[' << head;
  bool more = (pre.size() > body_from) || !shown_per.empty();
  if (more) {
    os << "; ";
    bool first = true;
    if (!pre.empty()) join_digits(os, pre, body_from, first);
    if (!shown_per.empty()) {
      if (!first) os << ", ";
      os << '(';
      bool pf = true;
      join_digits(os, shown_per, 0, pf);
      os << ')';
    }
  }
  os << ']';
  return os.str();
}

ModularMatrix ModularMatrix::operator*(const ModularMatrix& n) const {
  ModularMatrix r;
  r.a = a * n.a + b * n.c;
  r.b = a * n.b + b * n.d;
  r.c = c * n.a + d * n.c;
  r.d = c * n.b + d * n.d;
  return r;
}

QuadraticNumber mobius_apply(const ModularMatrix& m, const QuadraticNumber& x) {
  QuadraticNumber den = QuadraticNumber(m.a) + x * QuadraticNumber(m.b);
  if (den.sign() == 0) throw std::domain_error("Moebius transform denominator vanishes at this point");
  QuadraticNumber num = QuadraticNumber(m.c) + x * QuadraticNumber(m.d);
  return num / den;
}

ContinuedFraction cf_expand(const QuadraticNumber& x) {
  ContinuedFraction cf;

  if (x.is_rational()) {
    Rational r = x.to_rational();
    while (true) {
      Int a = r.floor();
      cf.pre.push_back(a);
      Rational frac = r - Rational(a);
      if (frac.sign() == 0) break;
      r = Rational(1) / frac;
    }
    return cf;
  }

  // Write x = (P + sqrt(N)) / Q with integers satisfying Q | N - P^2; the
  // complete quotients then stay in this integer form and the digit stream is
  // periodic exactly when the (P, Q) state repeats.
  Int rd = x.rat_part().den();
  Int sd = x.surd_part().den();
  Int g;
  mpz_gcd(g.get_mpz_t(), rd.get_mpz_t(), sd.get_mpz_t());
  Int C = rd / g * sd;
  Int A = x.rat_part().num() * (C / rd);
  Int B = x.surd_part().num() * (C / sd);
  Int P, Q;
  if (B > 0) {
    P = A;
    Q = C;
  } else {
    P = -A;
    Q = -C;
  }
  Int N = B * B * x.radicand();
  if ((N - P * P) % Q != 0) {
    Int aq = abs(Q);
    P *= aq;
    N *= Q * Q;
    Q *= aq;
  }
  const Int sN = isqrt(N);

  std::map<std::pair<Int, Int>, std::size_t> seen;
  std::vector<Int> digits;
  for (int guard = 0; guard < 2000000; ++guard) {
    auto key = std::make_pair(P, Q);
    auto it = seen.find(key);
    if (it != seen.end()) {
      auto split = digits.begin() + static_cast<std::ptrdiff_t>(it->second);
      cf.pre.assign(digits.begin(), split);
      cf.per.assign(split, digits.end());
      canonicalize(cf);
      return cf;
    }
    seen.emplace(key, digits.size());
    // floor((P + sqrt(N)) / Q) using sN < sqrt(N) < sN + 1.
    Int a = (Q > 0) ? fdiv(P + sN, Q) : fdiv(P + sN + 1, Q);
    digits.push_back(a);
    P = a * Q - P;
    Q = (N - P * P) / Q;
  }
  throw std::logic_error("continued fraction state recursion failed to cycle");
}

Rational cf_convergent(const ContinuedFraction& cf, std::size_t k) {
  Int pm2 = 0, pm1 = 1, qm2 = 1, qm1 = 0;
  for (std::size_t i = 0; i <= k; ++i) {
    Int a = cf.digit(i);
    Int p = a * pm1 + pm2;
    Int q = a * qm1 + qm2;
    pm2 = pm1;
    pm1 = p;
    qm2 = qm1;
    qm1 = q;
  }
  return Rational(pm1, qm1);
}

QuadraticNumber purely_periodic_value(const std::vector<Int>& per) {
  if (per.empty()) throw std::domain_error("purely periodic value needs a nonempty period");
  for (const Int& d : per) {
    if (d < 1) throw std::domain_error("purely periodic digits must be positive integers");
  }
  Int pm2 = 0, pm1 = 1, qm2 = 1, qm1 = 0;
  for (const Int& a : per) {
    Int p = a * pm1 + pm2;
    Int q = a * qm1 + qm2;
    pm2 = pm1;
    pm1 = p;
    qm2 = qm1;
    qm1 = q;
  }
  // t = (p_{k-1} t + p_{k-2}) / (q_{k-1} t + q_{k-2}) and t > 1 force the
  // positive root of q_{k-1} t^2 + (q_{k-2} - p_{k-1}) t - p_{k-2}.
  Int delta = (qm2 - pm1) * (qm2 - pm1) + 4 * qm1 * pm2;
  Int den = 2 * qm1;
  return QuadraticNumber(Rational(pm1 - qm2, den), Rational(1, den), delta);
}

QuadraticNumber reduced_representative(const QuadraticNumber& x) {
  if (x.is_rational()) throw std::domain_error("reduced representative requires a quadratic irrational");
  return purely_periodic_value(cf_expand(x).per);
}

std::optional<ModularMatrix> cf_equivalent(const QuadraticNumber& x,
                                           const QuadraticNumber& y) {
  if (x.is_rational() || y.is_rational()) {
    throw std::domain_error("cf_equivalent requires quadratic irrationals");
  }
  ContinuedFraction cx = cf_expand(x);
  ContinuedFraction cy = cf_expand(y);
  // Canonical periods are the primitive blocks in lexicographically minimal
  // rotation, so orbit equality reduces to literal equality here.
  if (cx.per != cy.per) return std::nullopt;

  QuadraticNumber t = purely_periodic_value(cx.per);
  ModularMatrix ma, mb;
  for (const Int& d : cx.pre) ma = ma * ModularMatrix::from_quotient(d);
  for (const Int& d : cy.pre) mb = mb * ModularMatrix::from_quotient(d);
  // x = ma(t), y = mb(t), hence y = (mb * ma^{-1})(x).
  ModularMatrix w = mb * ma.inverse();
  if (mobius_apply(w, x) != y) throw std::logic_error("equivalence witness failed exact verification");
  return w;
}

}  // namespace aptile
