#pragma once

#include <aptile/quadratic.hpp>
#include <aptile/words.hpp>

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace aptile {

// A substitution rule on a finite alphabet.  Letters are named by single
// characters; `Word` symbols index into `alphabet`, and `images[i]` is the
// image of letter i as a vector of such indices.
struct SubstitutionRule {
  std::vector<char> alphabet;
  std::vector<std::vector<int>> images;

  // Parses the production format "a>b; b>ab" (whitespace ignored).  The
  // alphabet order is the order of left-hand sides; every image letter must
  // occur as a left-hand side.  Throws std::invalid_argument on bad input.
  static SubstitutionRule parse(const std::string& text);
  std::string to_string() const;

  std::size_t letters() const { return alphabet.size(); }
  // Index of a letter name; throws std::invalid_argument if absent.
  int index_of(char letter) const;
};

// k-fold image of w.  The base_index is carried through unchanged (images are
// reported in the combinatorial, not geometric, indexing).  Word symbols must
// be valid alphabet indices.
Word apply(const SubstitutionRule& rule, const Word& w, unsigned k);

// M[i][j] = number of occurrences of letter i in the image of letter j.
std::vector<std::vector<Int>> abelianization(const SubstitutionRule& rule);

// Primitivity: whether some power M^N is entrywise positive, with the minimal
// such N; the search is bounded by (k-1)^2 + 1 for k letters.
std::pair<bool, std::optional<unsigned>> is_primitive(const SubstitutionRule& rule);

// Dominant eigenvalue and natural tile lengths of a primitive rule.
//  - For one- and two-letter alphabets the data is exact: lambda solves the
//    characteristic polynomial in the quadratic field, second_root holds the
//    other root when the alphabet has two letters, and lengths is the left
//    eigenvector normalized so lengths[0] == 1.
//  - For larger alphabets exact = false: bounds is a certified rational
//    enclosure of lambda from Collatz-Wielandt quotients, lambda its midpoint,
//    and lengths the (approximate) normalized iteration vector.
struct PerronData {
  bool exact = true;
  QuadraticNumber lambda;
  std::optional<QuadraticNumber> second_root;
  std::vector<QuadraticNumber> lengths;
  std::pair<Rational, Rational> bounds{Rational(0), Rational(0)};
};

// Requires a primitive, expanding rule (throws std::domain_error otherwise).
PerronData perron(const SubstitutionRule& rule);

// True when lambda > 1 and the algebraic conjugate (second_root) has absolute
// value < 1, both checked exactly.  A degree-one lambda (integer >= 2) has no
// conjugate and counts as Pisot.  Throws std::domain_error on non-exact data.
bool is_pisot(const PerronData& pd);

// First n letters of the fixed (or periodic) point of the rule starting from
// `seed`: iterates the smallest power p <= |alphabet| with the property that
// the p-th image of seed begins with seed.  Requires a primitive rule and a
// seed admitting such a power; throws std::domain_error otherwise.
Word fixed_point_prefix(const SubstitutionRule& rule, char seed, std::size_t n);

// All length-n factors of the substitution language (the factors of iterated
// images of letters; for a primitive rule this equals the factor set of any
// of its fixed points).  Exact: legal length-2 words are computed as a
// closure, and longer factors are read off images under a power of the rule
// whose image lengths exceed 2n, which every length-n factor must straddle by
// at most one boundary.  Requires a primitive, expanding rule.
std::set<std::vector<int>> language_factors(const SubstitutionRule& rule, std::size_t n);

struct SubstitutiveRepresentative {
  QuadraticNumber beta;
  SubstitutionRule rule;
};

// For an irrational quadratic slope alpha in (0, 1): a slope beta in the same
// GL(2,Z) class whose continued fraction is purely periodic after the leading
// 0, together with a binary substitution rule fixing the sturmian language of
// slope beta.  The rule is the composition of elementary sturmian morphisms
// indexed by the period digits and is accepted only after the
// language-invariance validation below passes.
SubstitutiveRepresentative substitutive_representative(const QuadraticNumber& alpha);

// The validation contract for substitutive_representative: the factor sets of
// length 1..maxlen of the sturmian word of slope beta coincide with those of
// its image under the rule.  Binary rules only.
bool language_invariant(const SubstitutionRule& rule, const QuadraticNumber& beta,
                        std::size_t maxlen);

}  // namespace aptile
