#include <aptile/substitution.hpp>

#include <aptile/confrac.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace aptile {

namespace {

void check_symbols(const SubstitutionRule& rule, const Word& w) {
  for (int s : w.symbols) {
    if (s < 0 || static_cast<std::size_t>(s) >= rule.letters())
      throw std::domain_error("word symbol outside the rule's alphabet");
  }
}

Word apply_once(const SubstitutionRule& rule, const Word& w) {
  Word out;
  out.base_index = w.base_index;
  std::size_t total = 0;
  for (int s : w.symbols) total += rule.images[static_cast<std::size_t>(s)].size();
  out.symbols.reserve(total);
  for (int s : w.symbols) {
    const auto& img = rule.images[static_cast<std::size_t>(s)];
    out.symbols.insert(out.symbols.end(), img.begin(), img.end());
  }
  return out;
}

// (r1 . r2)(letter) = r1(r2(letter)); alphabets must coincide.
SubstitutionRule compose(const SubstitutionRule& r1, const SubstitutionRule& r2) {
  if (r1.alphabet != r2.alphabet)
    throw std::invalid_argument("composed rules must share an alphabet");
  SubstitutionRule out;
  out.alphabet = r1.alphabet;
  out.images.reserve(r2.images.size());
  for (const auto& img : r2.images) {
    Word w;
    w.symbols = img;
    out.images.push_back(apply_once(r1, w).symbols);
  }
  return out;
}

// Elementary sturmian morphism: a -> a^(m-1) b, b -> a^m b.
SubstitutionRule elementary_morphism(long m) {
  if (m < 1) throw std::domain_error("elementary morphism index must be positive");
  SubstitutionRule r;
  r.alphabet = {'a', 'b'};
  std::vector<int> ia(static_cast<std::size_t>(m - 1), 0);
  ia.push_back(1);
  std::vector<int> ib(static_cast<std::size_t>(m), 0);
  ib.push_back(1);
  r.images = {std::move(ia), std::move(ib)};
  return r;
}

}  // namespace

SubstitutionRule SubstitutionRule::parse(const std::string& text) {
  SubstitutionRule rule;
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  std::vector<std::pair<char, std::string>> productions;
  std::stringstream ss(compact);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    auto gt = item.find('>');
    if (gt == std::string::npos || gt != 1 || item.size() < 3)
      throw std::invalid_argument("production must look like 'a>ab': " + item);
    char lhs = item[0];
    std::string rhs = item.substr(2);
    for (char c : std::string(1, lhs) + rhs) {
      if (!std::isalpha(static_cast<unsigned char>(c)))
        throw std::invalid_argument("rule letters must be alphabetic");
    }
    if (std::find_if(productions.begin(), productions.end(),
                     [&](const auto& p) { return p.first == lhs; }) != productions.end())
      throw std::invalid_argument(std::string("duplicate production for letter ") + lhs);
    productions.emplace_back(lhs, rhs);
  }
  if (productions.empty()) throw std::invalid_argument("empty substitution rule");
  for (const auto& [lhs, rhs] : productions) rule.alphabet.push_back(lhs);
  for (const auto& [lhs, rhs] : productions) {
    std::vector<int> img;
    img.reserve(rhs.size());
    for (char c : rhs) img.push_back(rule.index_of(c));
    rule.images.push_back(std::move(img));
  }
  return rule;
}

std::string SubstitutionRule::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (i) os << "; ";
    os << alphabet[i] << '>';
    for (int s : images[i]) os << alphabet[static_cast<std::size_t>(s)];
  }
  return os.str();
}

int SubstitutionRule::index_of(char letter) const {
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (alphabet[i] == letter) return static_cast<int>(i);
  }
  throw std::invalid_argument(std::string("letter not in alphabet: ") + letter);
}

Word apply(const SubstitutionRule& rule, const Word& w, unsigned k) {
  check_symbols(rule, w);
  Word out = w;
  for (unsigned i = 0; i < k; ++i) out = apply_once(rule, out);
  return out;
}

std::vector<std::vector<Int>> abelianization(const SubstitutionRule& rule) {
  std::size_t k = rule.letters();
  std::vector<std::vector<Int>> m(k, std::vector<Int>(k, Int(0)));
  for (std::size_t j = 0; j < k; ++j) {
    for (int s : rule.images[j]) m[static_cast<std::size_t>(s)][j] += 1;
  }
  return m;
}

std::pair<bool, std::optional<unsigned>> is_primitive(const SubstitutionRule& rule) {
  std::size_t k = rule.letters();
  auto m = abelianization(rule);
  std::vector<std::vector<bool>> one(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) one[i][j] = m[i][j] > 0;
  unsigned bound = static_cast<unsigned>((k - 1) * (k - 1) + 1);
  std::vector<std::vector<bool>> cur = one;
  for (unsigned n = 1; n <= bound; ++n) {
    bool all = true;
    for (std::size_t i = 0; i < k && all; ++i)
      for (std::size_t j = 0; j < k && all; ++j) all = cur[i][j];
    if (all) return {true, n};
    // cur <- cur * one (boolean)
    std::vector<std::vector<bool>> next(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l)
        if (cur[i][l])
          for (std::size_t j = 0; j < k; ++j)
            if (one[l][j]) next[i][j] = true;
    cur = std::move(next);
  }
  return {false, std::nullopt};
}

PerronData perron(const SubstitutionRule& rule) {
  if (!is_primitive(rule).first) throw std::domain_error("perron data requires a primitive rule");
  auto m = abelianization(rule);
  std::size_t k = rule.letters();
  PerronData pd;

  if (k == 1) {
    Int lam = m[0][0];
    if (lam <= 1) throw std::domain_error("substitution is not expanding");
    pd.lambda = QuadraticNumber(lam);
    pd.lengths = {QuadraticNumber(1)};
    pd.bounds = {Rational(lam), Rational(lam)};
    return pd;
  }

  if (k == 2) {
    Int tr = m[0][0] + m[1][1];
    Int det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Int disc = tr * tr - 4 * det;  // = (m00-m11)^2 + 4 m01 m10 > 0 for primitive rules
    pd.lambda = QuadraticNumber(Rational(tr, 2), Rational(1, 2), disc);
    pd.second_root = QuadraticNumber(Rational(tr, 2), Rational(-1, 2), disc);
    if (pd.lambda <= QuadraticNumber(1)) throw std::domain_error("substitution is not expanding");
    // Left eigenvector (1, l1): 1*m00 + l1*m10 = lambda.
    QuadraticNumber l1 = (pd.lambda - QuadraticNumber(m[0][0])) / QuadraticNumber(m[1][0]);
    pd.lengths = {QuadraticNumber(1), l1};
    pd.bounds = pd.lambda.approx_interval(64);
    return pd;
  }

  // Larger alphabets: certified rational enclosure via Collatz-Wielandt
  // quotients of the left iteration v <- v M.
  pd.exact = false;
  std::vector<Rational> v(k, Rational(1));
  Rational lo(0), hi(0);
  for (int round = 0; round < 4096; ++round) {
    std::vector<Rational> w(k, Rational(0));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < k; ++i) w[j] += v[i] * Rational(m[i][j]);
    lo = w[0] / v[0];
    hi = lo;
    for (std::size_t j = 1; j < k; ++j) {
      Rational q = w[j] / v[j];
      if (q < lo) lo = q;
      if (q > hi) hi = q;
    }
    // Normalize to keep numbers small.
    for (std::size_t j = k; j-- > 0;) w[j] = w[j] / w[0];
    v = std::move(w);
    if (hi - lo < Rational(Int(1), Int(1) << 48)) break;
  }
  pd.bounds = {lo, hi};
  pd.lambda = QuadraticNumber((lo + hi) / Rational(2));
  if (!(hi > Rational(1))) throw std::domain_error("substitution is not expanding");
  pd.lengths.reserve(k);
  for (const Rational& x : v) pd.lengths.push_back(QuadraticNumber(x));
  return pd;
}

bool is_pisot(const PerronData& pd) {
  if (!pd.exact) throw std::domain_error("Pisot test requires exact Perron data");
  if (!(pd.lambda > QuadraticNumber(1))) return false;
  if (!pd.second_root) return true;  // degree-one eigenvalue, integer >= 2
  return pd.second_root->abs() < QuadraticNumber(1);
}

Word fixed_point_prefix(const SubstitutionRule& rule, char seed, std::size_t n) {
  if (!is_primitive(rule).first)
    throw std::domain_error("fixed point prefix requires a primitive rule");
  int idx = rule.index_of(seed);

  // Smallest power p <= |alphabet| whose image of seed starts with seed.
  std::size_t p = 0;
  int cur = idx;
  for (std::size_t step = 1; step <= rule.letters(); ++step) {
    cur = rule.images[static_cast<std::size_t>(cur)].front();
    if (cur == idx) {
      p = step;
      break;
    }
  }
  if (p == 0)
    throw std::domain_error("seed letter never recurs as the leading letter of its iterated image");

  Word u;
  u.symbols = {idx};
  for (int round = 0; round < 256; ++round) {
    Word v = u;
    for (std::size_t i = 0; i < p; ++i) {
      v = apply_once(rule, v);
      if (v.symbols.size() > n) v.symbols.resize(n);  // lazy: prefixes are nested
    }
    if (v.symbols.size() >= n) {
      v.symbols.resize(n);
      return v;
    }
    if (v.symbols == u.symbols)
      throw std::domain_error("substitution does not expand the seed prefix");
    u = std::move(v);
  }
  throw std::logic_error("fixed point prefix failed to converge");
}

bool language_invariant(const SubstitutionRule& rule, const QuadraticNumber& beta,
                        std::size_t maxlen) {
  if (rule.letters() != 2)
    throw std::domain_error("language invariance validator handles binary rules only");
  SturmianParams p(beta, QuadraticNumber(Rational(1, 2)), Branch::upper);

  std::vector<std::set<std::vector<int>>> direct(maxlen + 1);
  for (std::size_t n = 1; n <= maxlen; ++n) direct[n] = factor_set(p, n);

  auto harvest = [&](long half) {
    std::vector<std::set<std::vector<int>>> facs(maxlen + 1);
    Word u = apply(rule, sturmian_block(p, -half, half), 1);
    for (std::size_t n = 1; n <= maxlen; ++n) {
      for (std::size_t i = 0; i + n <= u.symbols.size(); ++i) {
        facs[n].emplace(u.symbols.begin() + static_cast<std::ptrdiff_t>(i),
                        u.symbols.begin() + static_cast<std::ptrdiff_t>(i + n));
      }
    }
    return facs;
  };
  long half = std::max<long>(static_cast<long>(8 * maxlen), 128);
  auto prev = harvest(half);
  for (int round = 0; round < 16; ++round) {
    half *= 2;
    auto cur = harvest(half);
    if (cur == prev) break;
    prev = std::move(cur);
  }
  for (std::size_t n = 1; n <= maxlen; ++n) {
    if (prev[n] != direct[n]) return false;
  }
  return true;
}

std::set<std::vector<int>> language_factors(const SubstitutionRule& rule, std::size_t n) {
  if (n == 0) throw std::invalid_argument("factor length must be positive");
  if (!is_primitive(rule).first)
    throw std::domain_error("language factors require a primitive rule");

  // Legal length-2 words: every 2-factor of an iterated image either sits
  // inside a single letter image (seeds) or straddles the images of a legal
  // 2-factor one level down (closure step).
  std::set<std::array<int, 2>> pairs;
  auto add_pairs = [&pairs](const std::vector<int>& w) {
    bool grew = false;
    for (std::size_t i = 0; i + 2 <= w.size(); ++i)
      grew = pairs.insert({w[i], w[i + 1]}).second || grew;
    return grew;
  };
  for (const auto& img : rule.images) add_pairs(img);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::array<int, 2>> snapshot(pairs.begin(), pairs.end());
    for (const auto& pr : snapshot) {
      std::vector<int> w = rule.images[static_cast<std::size_t>(pr[0])];
      const auto& right = rule.images[static_cast<std::size_t>(pr[1])];
      w.insert(w.end(), right.begin(), right.end());
      grew = add_pairs(w) || grew;
    }
  }

  // A power of the rule whose image lengths all exceed 2n: a length-n factor
  // of the language then fits inside the image of a legal 2-factor.
  unsigned q = 0;
  std::vector<Word> images(rule.letters());
  for (std::size_t a = 0; a < rule.letters(); ++a) images[a].symbols = {static_cast<int>(a)};
  for (int round = 0; round < 64; ++round) {
    std::size_t shortest = images[0].symbols.size();
    for (const Word& w : images) shortest = std::min(shortest, w.symbols.size());
    if (q > 0 && shortest >= 2 * n) break;
    for (Word& w : images) w = apply_once(rule, w);
    ++q;
    if (round == 63) throw std::domain_error("rule does not expand; factors undefined");
  }

  std::set<std::vector<int>> out;
  for (const auto& pr : pairs) {
    std::vector<int> w = images[static_cast<std::size_t>(pr[0])].symbols;
    const auto& right = images[static_cast<std::size_t>(pr[1])].symbols;
    w.insert(w.end(), right.begin(), right.end());
    for (std::size_t i = 0; i + n <= w.size(); ++i)
      out.emplace(w.begin() + static_cast<std::ptrdiff_t>(i),
                  w.begin() + static_cast<std::ptrdiff_t>(i + n));
  }
  return out;
}

SubstitutiveRepresentative substitutive_representative(const QuadraticNumber& alpha) {
  if (alpha.is_rational()) throw std::domain_error("substitutive representative requires a quadratic irrational");
  if (alpha.sign() <= 0 || alpha >= QuadraticNumber(1))
    throw std::domain_error("slope must lie strictly between 0 and 1");

  ContinuedFraction cf = cf_expand(alpha);
  SubstitutiveRepresentative out;
  out.beta = QuadraticNumber(1) / purely_periodic_value(cf.per);

  std::vector<long> digits;
  digits.reserve(cf.per.size());
  for (const Int& d : cf.per) {
    if (!fits_long(d) || d > 100000)
      throw std::overflow_error("period digit too large for rule construction");
    digits.push_back(d.get_si());
  }
  // Image lengths multiply under composition (they are continuants of the
  // period), so cap the growth before it can exhaust memory.
  constexpr std::size_t kImageCap = 200000;
  SubstitutionRule rule = elementary_morphism(digits[0]);
  for (std::size_t i = 1; i < digits.size(); ++i) {
    std::size_t longest = 0;
    for (const auto& image : rule.images) longest = std::max(longest, image.size());
    if (longest > kImageCap / static_cast<std::size_t>(digits[i] + 1))
      throw std::overflow_error("rule images exceed the construction cap");
    rule = compose(rule, elementary_morphism(digits[i]));
  }
  if (!language_invariant(rule, out.beta, 15))
    throw std::logic_error("substitutive representative failed language validation");
  out.rule = std::move(rule);
  return out;
}

}  // namespace aptile
