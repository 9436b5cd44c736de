#pragma once

#include <aptile/quadratic.hpp>

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace aptile {

// The two resolutions of the ceiling formula at singular parameters (those
// with nα + ρ ∈ ℤ for some n).  Away from singular parameters both branches
// generate the same sequence; at a singular parameter they differ in exactly
// two consecutive symbols, the "two origins" of the degenerate fiber.
enum class Branch { lower, upper };

// Parameters of a sturmian sequence s_n = F(nα + ρ) − F((n−1)α + ρ) where
// F = ⌈·⌉ on the upper branch and ⌊·⌋ + 1 on the lower.
struct SturmianParams {
  QuadraticNumber alpha;
  QuadraticNumber rho;
  Branch branch = Branch::upper;

  // Validates 0 < alpha < 1 irrational and 0 <= rho < 1; throws
  // std::domain_error otherwise.
  SturmianParams(QuadraticNumber a, QuadraticNumber r, Branch b = Branch::upper);
};

// A finite window of a sequence over a finite alphabet, with symbols encoded
// as small nonnegative integers and the index of the first symbol retained.
struct Word {
  std::vector<int> symbols;
  long base_index = 0;

  std::size_t size() const { return symbols.size(); }
  // Digit string such as "0110"; requires every symbol to be in [0, 9].
  std::string to_string() const;

  friend bool operator==(const Word& x, const Word& y) {
    return x.symbols == y.symbols && x.base_index == y.base_index;
  }
  friend bool operator!=(const Word& x, const Word& y) { return !(x == y); }
};

// Exact symbol s_n ∈ {0, 1}.
int sturmian_symbol(const SturmianParams& p, long n);

// Symbols s_n for n in [from, to), base_index = from; evaluated with one
// incremental exact update per step.  Throws std::invalid_argument when
// from > to.
Word sturmian_block(const SturmianParams& p, long from, long to);

// Independent generator: symbol at step n is 1 exactly when the line
// y = αx + ρ crosses an integer horizontal line for x ∈ (n−1, n].  Marches
// the next uncrossed horizontal line instead of evaluating floors, so it
// serves as a mutual oracle for sturmian_block; at singular parameters the
// half-open window makes it agree with the lower branch.
Word cutting_sequence(const QuadraticNumber& alpha, const QuadraticNumber& rho,
                      long from, long to);

// All distinct length-n factors of the bi-infinite sequence, enumerated from
// a centered window that is doubled until the factor set is stable for a
// doubling step.
std::set<std::vector<int>> factor_set(const SturmianParams& p, std::size_t n);

// Number of distinct length-n factors (n ≥ 1); sturmian sequences give n + 1.
std::size_t complexity(const SturmianParams& p, std::size_t n);

// Parameters of the shifted sequence σ(S)_n = S_{n+1}: intercept ρ + α
// reduced mod 1, same slope and branch.
SturmianParams shift_params(const SturmianParams& p);

// True when ρ ∈ ℤ + αℤ, i.e. some nα + ρ is an integer and the parameters
// are singular.
bool is_singular(const QuadraticNumber& alpha, const QuadraticNumber& rho);

// The unique n with nα + ρ ∈ ℤ when (α, ρ) is singular, nullopt otherwise.
std::optional<long> singular_position(const QuadraticNumber& alpha,
                                      const QuadraticNumber& rho);

}  // namespace aptile
