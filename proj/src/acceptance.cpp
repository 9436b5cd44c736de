#include <aptile/acceptance.hpp>

#include <aptile/apcomplex.hpp>
#include <aptile/confrac.hpp>
#include <aptile/cps.hpp>
#include <aptile/equivalence.hpp>
#include <aptile/hull.hpp>
#include <aptile/quadratic.hpp>
#include <aptile/substitution.hpp>
#include <aptile/words.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aptile {
namespace {

// Shared state of one criterion run: a deterministic PRNG plus the first
// failure message (subsequent checks are skipped once a failure is latched).
struct Check {
  std::mt19937_64 rng;
  bool ok = true;
  std::string fail;

  explicit Check(std::uint64_t seed) : rng(seed) {}

  long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      fail = what;
    }
  }
};

QuadraticNumber frac(const QuadraticNumber& x) { return x - QuadraticNumber(x.floor()); }

// Random irrational quadratic in (0, 1): (p + q*sqrt(d)) / r reduced mod 1.
QuadraticNumber random_slope(Check& c) {
  static const long kRadicands[] = {2, 3, 5, 6, 7, 10, 11, 13};
  const Int d(kRadicands[c.pick(0, 7)]);
  const long den = c.pick(1, 9);
  return frac(QuadraticNumber(Rational(c.pick(-12, 12), den), Rational(c.pick(1, 3), den), d));
}

// Random slope whose period is tractable for rule construction: the image
// lengths of the composed rule are continuants of the period digits, so
// rejection-sample until that continuant is small.
QuadraticNumber small_period_slope(Check& c) {
  for (;;) {
    const QuadraticNumber alpha = random_slope(c);
    const ContinuedFraction cf = cf_expand(alpha);
    Int q(1), qprev(0);
    bool small = cf.per.size() <= 10;
    for (const Int& digit : cf.per) {
      if (!small) break;
      const Int next = digit * q + qprev;
      qprev = q;
      q = next;
      if (q > 2000) small = false;
    }
    if (small) return alpha;
  }
}

// Random intercept in [0, 1): rational, or in the field of the slope.
QuadraticNumber random_intercept(Check& c, const QuadraticNumber& alpha) {
  if (c.pick(0, 1) == 0) {
    const long den = c.pick(2, 50);
    return QuadraticNumber(Rational(c.pick(0, den - 1), den));
  }
  return frac(alpha * QuadraticNumber(c.pick(1, 4)) + QuadraticNumber(Rational(c.pick(0, 10), 11)));
}

QuadraticNumber nonsingular_intercept(Check& c, const QuadraticNumber& alpha) {
  for (;;) {
    QuadraticNumber rho = random_intercept(c, alpha);
    if (!is_singular(alpha, rho)) return rho;
  }
}

// Random element of Z-combinations of 1 and alpha with rational weights
// (dense in the line, same field as alpha).
QuadraticNumber random_x(Check& c, const QuadraticNumber& alpha) {
  QuadraticNumber r(Rational(c.pick(-80, 80), c.pick(1, 10)));
  QuadraticNumber s(Rational(c.pick(-8, 8), c.pick(1, 7)));
  return r + alpha * s;
}

QuadraticNumber golden_slope() {
  return QuadraticNumber(Rational(-1, 2), Rational(1, 2), Int(5));  // (sqrt(5) - 1) / 2
}

// 1: twenty random parameter pairs have word complexity p(n) = n + 1 for
// every n up to 60, computed exactly.
void crit_complexity(Check& c, std::string& detail) {
  for (int trial = 0; trial < 20 && c.ok; ++trial) {
    const QuadraticNumber alpha = random_slope(c);
    const QuadraticNumber rho = random_intercept(c, alpha);
    const Branch br = c.pick(0, 1) == 0 ? Branch::lower : Branch::upper;
    const SturmianParams p(alpha, rho, br);
    for (std::size_t n = 1; n <= 60 && c.ok; ++n) {
      const std::size_t got = complexity(p, n);
      if (got != n + 1) {
        std::ostringstream os;
        os << "complexity(" << n << ") = " << got << " at slope " << alpha.to_double();
        c.require(false, os.str());
      }
    }
  }
  detail = "20 random slope/intercept pairs, p(n) = n + 1 for n = 1..60";
}

// 2: the ceiling formula, the cutting sequence and the gap reading of the
// projected staircase produce identical symbols.
void crit_generators(Check& c, std::string& detail) {
  const long kLen = 10000;
  for (int trial = 0; trial < 10 && c.ok; ++trial) {
    const QuadraticNumber alpha = random_slope(c);
    const QuadraticNumber rho = nonsingular_intercept(c, alpha);
    const SturmianParams p(alpha, rho, Branch::upper);
    const Word w1 = sturmian_block(p, 0, kLen);
    const Word w2 = cutting_sequence(alpha, rho, 0, kLen);
    c.require(w1.symbols == w2.symbols, "ceiling formula and cutting sequence disagree");

    const CutProjectScheme s(alpha, rho, WindowConvention::half_open_high);
    QuadraticNumber prev = position(s, vertex_at(s, Int(0)));
    c.require(prev == QuadraticNumber(0), "staircase vertex 0 is not at the origin");
    for (long k = 0; k < kLen && c.ok; ++k) {
      const QuadraticNumber next = position(s, vertex_at(s, Int(k + 1)));
      const QuadraticNumber gap = next - prev;
      int sym;
      if (gap == QuadraticNumber(1)) {
        sym = 0;
      } else {
        c.require(gap == alpha, "staircase gap is neither 1 nor alpha");
        sym = 1;
      }
      if (c.ok && w1.symbols[static_cast<std::size_t>(k)] != sym) {
        std::ostringstream os;
        os << "staircase symbol " << k << " disagrees with the ceiling formula";
        c.require(false, os.str());
      }
      prev = next;
    }
  }
  detail = "10 random parameter sets, 10^4 symbols each, three readers agree";
}

// 3: two length assignments for the same rule have supertile lengths that
// converge together, with successive differences contracting at rate 1/phi.
void crit_convergence(Check& c, std::string& detail) {
  const SubstitutionRule rule = SubstitutionRule::parse("a>b; b>ab");
  const QuadraticNumber phi(Rational(1, 2), Rational(1, 2), Int(5));
  const QuadraticNumber invphi(Rational(-1, 2), Rational(1, 2), Int(5));
  const QuadraticNumber t = (QuadraticNumber(2) + phi) / (QuadraticNumber(1) + phi);

  std::array<QuadraticNumber, 2> len = {QuadraticNumber(1), phi};  // eigen-lengths
  std::array<QuadraticNumber, 2> alt = {t, t};                     // equal lengths
  std::array<QuadraticNumber, 2> diff = {len[0] - alt[0], len[1] - alt[1]};

  const QuadraticNumber band = invphi * QuadraticNumber(Rational(1, 20));  // 5 percent
  for (int n = 0; n < 25 && c.ok; ++n) {
    std::array<QuadraticNumber, 2> nlen, nalt;
    for (std::size_t letter = 0; letter < 2; ++letter) {
      QuadraticNumber a(0), b(0);
      for (int img : rule.images[letter]) {
        a = a + len[static_cast<std::size_t>(img)];
        b = b + alt[static_cast<std::size_t>(img)];
      }
      nlen[letter] = a;
      nalt[letter] = b;
    }
    len = nlen;
    alt = nalt;
    const std::array<QuadraticNumber, 2> ndiff = {len[0] - alt[0], len[1] - alt[1]};
    for (std::size_t letter = 0; letter < 2 && c.ok; ++letter) {
      c.require(ndiff[letter].abs() < diff[letter].abs(),
                "supertile length differences must shrink");
      if (n + 1 >= 10) {
        const QuadraticNumber ratio = ndiff[letter].abs() / diff[letter].abs();
        c.require((ratio - invphi).abs() <= band, "contraction ratio drifts from 1/phi");
      }
    }
    diff = ndiff;
  }
  c.require(diff[0].abs() < QuadraticNumber(Rational(1, 10000)) &&
                diff[1].abs() < QuadraticNumber(Rational(1, 10000)),
            "differences fail to approach zero");
  detail = "25 exact iterations; successive ratios stay within 5% of 1/phi";
}

// 4: random unimodular images of random slopes are recognized as equivalent
// with verified witnesses; a fixed panel of distinct classes is rejected.
void crit_equivalence(Check& c, std::string& detail) {
  const ModularMatrix kUp{1, 0, 1, 1};     // x -> x + 1
  const ModularMatrix kDown{1, 0, -1, 1};  // x -> x - 1
  const ModularMatrix kInv{0, 1, 1, 0};    // x -> 1/x
  for (int trial = 0; trial < 100 && c.ok; ++trial) {
    const QuadraticNumber alpha = random_slope(c);
    ModularMatrix m;
    const long n = c.pick(1, 12);
    for (long i = 0; i < n; ++i) {
      switch (c.pick(0, 2)) {
        case 0: m = kUp * m; break;
        case 1: m = kDown * m; break;
        default: m = kInv * m; break;
      }
    }
    const QuadraticNumber beta = mobius_apply(m, alpha);
    const EquivalenceVerdict v = soe_tiling_spaces(alpha, beta);
    c.require(v.equivalent, "a unimodular image must be equivalent");
    c.require(v.witness.has_value(), "equivalent pair must carry a witness");
    if (v.witness) {
      c.require(mobius_apply(*v.witness, alpha) == beta, "witness fails to map alpha to beta");
      const Int det = v.witness->det();
      c.require(det == 1 || det == -1, "witness must be unimodular");
    }
  }
  const QuadraticNumber phi1 = golden_slope();
  const QuadraticNumber r2 = QuadraticNumber::sqrt_of(Int(2)) - QuadraticNumber(1);
  const QuadraticNumber r3 = QuadraticNumber::sqrt_of(Int(3)) - QuadraticNumber(1);
  c.require(!soe_tiling_spaces(phi1, r2).equivalent, "distinct classes wrongly identified");
  c.require(!soe_tiling_spaces(r2, r3).equivalent, "distinct classes wrongly identified");
  detail = "100 random unimodular pairs certified; fixed distinct panel rejected";
}

// 5: return vectors of a patch, harvested from ten thousand tiles, generate
// exactly Z + alpha Z.
void crit_return_module(Check& c, std::string& detail) {
  for (int trial = 0; trial < 5 && c.ok; ++trial) {
    const QuadraticNumber alpha = random_slope(c);
    const QuadraticNumber rho = nonsingular_intercept(c, alpha);
    const Tiling t = psi(SturmianParams(alpha, rho, Branch::upper));
    const Patch patch = window(t, t.vertex(Int(0)), t.vertex(Int(4)));
    const QuadraticNumber right = t.vertex(Int(5000));
    const QuadraticNumber left = t.vertex(Int(-5000)).abs();
    const QuadraticNumber radius = right > left ? right : left;
    const std::vector<QuadraticNumber> rv = return_vectors(t, patch, radius);
    const ReturnModule m = return_module(rv, alpha);
    const std::vector<std::array<Int, 2>> want = {{Int(1), Int(0)}, {Int(0), Int(1)}};
    c.require(m.rows == want, "return module differs from Z + alpha Z");
  }
  detail = "5 tilings, returns from 10^4 tiles, normal form equals {1, alpha}";
}

// 6: the projection to the torus is invariant under module translations and
// equivariant under arbitrary ones.
void crit_covering(Check& c, std::string& detail) {
  const QuadraticNumber alpha = random_slope(c);
  const QuadraticNumber rho = nonsingular_intercept(c, alpha);
  const Tiling t = psi(SturmianParams(alpha, rho, Branch::upper));
  const ReturnModule m = return_module({QuadraticNumber(1), alpha}, alpha);
  const TorusPoint p0 = torus_project(t, m);
  for (int i = 0; i < 100 && c.ok; ++i) {
    const QuadraticNumber r =
        QuadraticNumber(Int(c.pick(-40, 40))) + alpha * QuadraticNumber(Int(c.pick(-40, 40)));
    c.require(torus_project(translate(t, r), m) == p0,
              "module translation moved the projected point");
  }
  for (int i = 0; i < 100 && c.ok; ++i) {
    const QuadraticNumber x = random_x(c, alpha);
    const TorusPoint q = torus_project(translate(t, x), m);
    c.require(q.representative == torus_reduce(m, p0.representative + x),
              "generic translation is not equivariant");
    c.require(q.origin_tag == p0.origin_tag, "translation changed the branch tag");
  }
  detail = "100 module translations invariant, 100 generic translations equivariant";
}

// 7: the word shift is realized by an exact translation, the accumulated
// displacement telescopes to minus a vertex, and the crossing count is a
// cocycle.
void crit_dictionary(Check& c, std::string& detail) {
  for (int trial = 0; trial < 3 && c.ok; ++trial) {
    const QuadraticNumber alpha = random_slope(c);
    const QuadraticNumber rho = nonsingular_intercept(c, alpha);
    const SturmianParams p(alpha, rho, Branch::upper);
    const Tiling t = psi(p);
    SturmianParams cur = p;
    QuadraticNumber sum(0);
    for (int k = 1; k <= 50 && c.ok; ++k) {
      sum = sum + delta_alpha(cur);
      cur = shift_params(cur);
      c.require(sum == -t.vertex(Int(k)), "accumulated displacement is not minus a vertex");
      c.require(translation_cocycle(t, sum) == Int(k), "crossing count disagrees with k");
      const Patch a = window(psi(cur), QuadraticNumber(-6), QuadraticNumber(6));
      const Patch b = window(translate(t, sum), QuadraticNumber(-6), QuadraticNumber(6));
      c.require(a == b, "shifted word and translated tiling disagree");
    }
  }

  const QuadraticNumber alpha = random_slope(c);
  const QuadraticNumber rho = nonsingular_intercept(c, alpha);
  const Tiling base = psi(SturmianParams(alpha, rho, Branch::upper));
  for (int i = 0; i < 100 && c.ok; ++i) {
    const Tiling t = translate(base, random_x(c, alpha));
    const QuadraticNumber x = random_x(c, alpha);
    const QuadraticNumber y = random_x(c, alpha);
    const Int lhs = translation_cocycle(t, x + y);
    const Int rhs = translation_cocycle(t, x) + translation_cocycle(translate(t, x), y);
    c.require(lhs == rhs, "cocycle identity fails");
    const Int mm = translation_cocycle(t, x);
    const long shift = mm.get_si();
    const Word wa = phi_block(translate(t, x), 0, 20);
    const Word wb = phi_block(t, shift, shift + 20);
    c.require(wa.symbols == wb.symbols, "translation does not shift the read word");
  }
  detail = "50 shifts on 3 tilings telescoped; cocycle identity on 100 random triples";
}

// 8: every sampled class contains a substitutive slope whose certificate
// survives independent re-checks.
void crit_substitutive(Check& c, std::string& detail) {
  for (int trial = 0; trial < 10 && c.ok; ++trial) {
    const QuadraticNumber alpha = small_period_slope(c);
    const SubstitutiveWitness w = class_substitutive_witness(alpha);
    c.require(w.pisot, "expansion factor must be Pisot");
    c.require(w.beta_cf.pre == std::vector<Int>{Int(0)},
              "representative expansion must be [0; (period)]");
    c.require(mobius_apply(w.matrix, alpha) == w.beta, "matrix fails to map alpha to beta");
    const Int det = w.matrix.det();
    c.require(det == 1 || det == -1, "witness matrix must be unimodular");
    c.require(soe_tiling_spaces(alpha, w.beta).equivalent, "beta left the class of alpha");
    c.require(language_invariant(w.rule, w.beta, 15), "rule does not fix the language");
    c.require(is_pisot(perron(w.rule)), "recomputed eigenvalue data is not Pisot");
  }
  detail = "10 random slopes: witness re-verified (class, periodicity, Pisot, language)";
}

// 9: first Betti numbers of the approximant complexes.
void crit_betti(Check& c, std::string& detail) {
  const SubstitutionRule fib = SubstitutionRule::parse("a>ab; b>a");
  c.require(betti1(build_uncollared(fib)) == 2, "uncollared fibonacci betti is not 2");
  c.require(betti1(build_collared(fib)) == 2, "collared fibonacci betti is not 2");
  const SubstitutionRule doubling = SubstitutionRule::parse("a>aa");
  c.require(betti1(build_uncollared(doubling)) == 1, "uncollared doubling betti is not 1");
  c.require(betti1(build_collared(doubling)) == 1, "collared doubling betti is not 1");
  detail = "fibonacci has betti 2 uncollared and collared; a -> aa has betti 1";
}

// 10: metric certificates: zero self-distance, translation upper bounds, and
// a certified positive separation of the two singular branches.
void crit_metric(Check& c, std::string& detail) {
  const QuadraticNumber alpha = random_slope(c);
  const QuadraticNumber rho = nonsingular_intercept(c, alpha);
  const Tiling t = psi(SturmianParams(alpha, rho, Branch::upper));

  const MetricInterval self = metric_d(t, t, Rational(1, 2000000));
  c.require(self.lo <= Rational(0) && Rational(0) <= self.hi, "d(T, T) must contain 0");
  c.require(self.hi - self.lo <= Rational(1, 1000000), "self-distance enclosure too wide");

  for (int i = 0; i < 20 && c.ok; ++i) {
    QuadraticNumber x(Rational(1, c.pick(8, 200)));
    if (c.pick(0, 1) == 1) x = -x;
    c.require(metric_feasible(t, translate(t, x), x.abs()), "d(T, T + x) must be at most |x|");
  }

  const QuadraticNumber g = golden_slope();
  const Tiling upper = psi(SturmianParams(g, QuadraticNumber(0), Branch::upper));
  const Tiling lower = psi(SturmianParams(g, QuadraticNumber(0), Branch::lower));
  const MetricInterval sep = metric_d(upper, lower, Rational(1, 64));
  c.require(sep.lo > Rational(0), "singular branch pair needs a positive lower bound");
  detail = "self-distance [0,0]; 20 translation bounds; branch pair separated";
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  struct Entry {
    int index;
    const char* name;
    void (*fn)(Check&, std::string&);
  };
  const Entry entries[] = {
      {1, "sturmian complexity p(n) = n + 1", crit_complexity},
      {2, "three word generators agree symbolwise", crit_generators},
      {3, "supertile lengths contract at rate 1/phi", crit_convergence},
      {4, "orbit equivalence decided with certificates", crit_equivalence},
      {5, "return vectors recover Z + alpha Z", crit_return_module},
      {6, "torus projection invariant and equivariant", crit_covering},
      {7, "shift/translation dictionary and crossing cocycle", crit_dictionary},
      {8, "substitutive representative in each class", crit_substitutive},
      {9, "approximant complexes have expected betti numbers", crit_betti},
      {10, "metric certificates and branch separation", crit_metric},
  };
  std::vector<CriterionResult> out;
  for (const Entry& e : entries) {
    CriterionResult r;
    r.index = e.index;
    r.name = e.name;
    Check c(seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(e.index)));
    std::fprintf(stderr, "[acceptance] criterion %d: %s\n", e.index, e.name);
    const auto start = std::chrono::steady_clock::now();
    try {
      std::string detail;
      e.fn(c, detail);
      r.pass = c.ok;
      r.detail = c.ok ? detail : c.fail;
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    r.seconds = std::chrono::duration<double>(stop - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace aptile
