#include "aptile/rational.hpp"

#include <cctype>

namespace aptile {

namespace {

Int parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  try {
    return Int(s, 10);  // explicit base: no octal surprises from leading zeros
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad integer literal: '" + s + "'");
  }
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
  }
  auto epos = s.find_first_of("eE");
  auto dot = s.find('.');
  if (epos == std::string::npos && dot == std::string::npos) return Rational(parse_int(s));

  // Decimal / scientific literal, converted exactly.
  long exp10 = 0;
  std::string mant = s;
  if (epos != std::string::npos) {
    exp10 = std::stol(s.substr(epos + 1));
    mant = s.substr(0, epos);
    dot = mant.find('.');
  }
  std::string digits = mant;
  if (dot != std::string::npos) {
    digits = mant.substr(0, dot) + mant.substr(dot + 1);
    exp10 -= static_cast<long>(mant.size() - dot - 1);
  }
  Int n = parse_int(digits);
  Int p10 = 1;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  return exp10 < 0 ? Rational(n, p10) : Rational(n * p10, Int(1));
}

}  // namespace aptile
