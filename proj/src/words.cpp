#include <aptile/words.hpp>

#include <stdexcept>

namespace aptile {

namespace {

Int branch_value(const QuadraticNumber& t, Branch b) {
  return b == Branch::upper ? t.ceil() : t.floor() + 1;
}

}  // namespace

SturmianParams::SturmianParams(QuadraticNumber a, QuadraticNumber r, Branch b)
    : alpha(std::move(a)), rho(std::move(r)), branch(b) {
  if (alpha.is_rational()) throw std::domain_error("sturmian slope must be irrational");
  if (alpha.sign() <= 0 || alpha >= QuadraticNumber(1))
    throw std::domain_error("sturmian slope must lie strictly between 0 and 1");
  if (rho.sign() < 0 || rho >= QuadraticNumber(1))
    throw std::domain_error("sturmian intercept must lie in [0, 1)");
  if (!rho.is_rational() && rho.radicand() != alpha.radicand())
    throw std::domain_error("sturmian intercept must lie in the slope's quadratic field");
}

std::string Word::to_string() const {
  std::string out;
  out.reserve(symbols.size());
  for (int s : symbols) {
    if (s < 0 || s > 9) throw std::domain_error("word symbol outside digit range");
    out.push_back(static_cast<char>('0' + s));
  }
  return out;
}

int sturmian_symbol(const SturmianParams& p, long n) {
  QuadraticNumber t1 = p.alpha * QuadraticNumber(n) + p.rho;
  QuadraticNumber t0 = t1 - p.alpha;
  Int s = branch_value(t1, p.branch) - branch_value(t0, p.branch);
  return static_cast<int>(s.get_si());
}

Word sturmian_block(const SturmianParams& p, long from, long to) {
  if (from > to) throw std::invalid_argument("sturmian_block needs from <= to");
  Word w;
  w.base_index = from;
  w.symbols.reserve(static_cast<std::size_t>(to - from));
  QuadraticNumber t = p.alpha * QuadraticNumber(from - 1) + p.rho;
  Int prev = branch_value(t, p.branch);
  for (long n = from; n < to; ++n) {
    t += p.alpha;
    Int cur = branch_value(t, p.branch);
    w.symbols.push_back(static_cast<int>(Int(cur - prev).get_si()));
    prev = cur;
  }
  return w;
}

Word cutting_sequence(const QuadraticNumber& alpha, const QuadraticNumber& rho,
                      long from, long to) {
  if (alpha.is_rational() || alpha.sign() <= 0 || alpha >= QuadraticNumber(1))
    throw std::domain_error("cutting sequence slope must be irrational in (0, 1)");
  if (from > to) throw std::invalid_argument("cutting_sequence needs from <= to");
  Word w;
  w.base_index = from;
  w.symbols.reserve(static_cast<std::size_t>(to - from));
  // Height of the line at x = from - 1 and the lowest horizontal line not yet
  // crossed; each unit step crosses at most one line because alpha < 1.
  QuadraticNumber y = alpha * QuadraticNumber(from - 1) + rho;
  Int next_line = y.floor() + 1;
  for (long n = from; n < to; ++n) {
    y += alpha;
    if (y >= QuadraticNumber(next_line)) {
      w.symbols.push_back(1);
      next_line += 1;
    } else {
      w.symbols.push_back(0);
    }
  }
  return w;
}

std::set<std::vector<int>> factor_set(const SturmianParams& p, std::size_t n) {
  if (n == 0) throw std::invalid_argument("factor length must be at least 1");
  auto collect = [&](long half) {
    std::set<std::vector<int>> factors;
    Word w = sturmian_block(p, -half, half);
    if (w.symbols.size() >= n) {
      for (std::size_t i = 0; i + n <= w.symbols.size(); ++i) {
        factors.emplace(w.symbols.begin() + static_cast<std::ptrdiff_t>(i),
                        w.symbols.begin() + static_cast<std::ptrdiff_t>(i + n));
      }
    }
    return factors;
  };
  long half = std::max<long>(static_cast<long>(4 * n), 64);
  std::set<std::vector<int>> prev = collect(half);
  for (int round = 0; round < 24; ++round) {
    half *= 2;
    std::set<std::vector<int>> cur = collect(half);
    if (cur == prev) return cur;
    prev = std::move(cur);
  }
  throw std::logic_error("factor enumeration failed to stabilize");
}

std::size_t complexity(const SturmianParams& p, std::size_t n) {
  return factor_set(p, n).size();
}

SturmianParams shift_params(const SturmianParams& p) {
  QuadraticNumber r = p.rho + p.alpha;
  r = r - QuadraticNumber(r.floor());
  return SturmianParams(p.alpha, r, p.branch);
}

std::optional<long> singular_position(const QuadraticNumber& alpha,
                                      const QuadraticNumber& rho) {
  if (alpha.is_rational()) throw std::domain_error("singularity test needs an irrational slope");
  if (!rho.is_rational() && rho.radicand() != alpha.radicand()) return std::nullopt;
  auto [c0, c1] = decompose(rho, alpha);
  if (!c0.is_integer() || !c1.is_integer()) return std::nullopt;
  Int n = -c1.num();
  if (!fits_long(n)) throw std::overflow_error("singular position exceeds long range");
  return n.get_si();
}

bool is_singular(const QuadraticNumber& alpha, const QuadraticNumber& rho) {
  return singular_position(alpha, rho).has_value();
}

}  // namespace aptile
