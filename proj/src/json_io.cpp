#include <aptile/json_io.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace aptile {

namespace {

using nlohmann::json;

Int int_from_string(const std::string& text) {
  try {
    return Int(text, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not an integer literal: '" + text + "'");
  }
}

}  // namespace

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return int_from_string(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) return int_from_string(j.get<std::string>());
  if (j.is_number_float())
    throw std::invalid_argument("floating point numbers are rejected; use exact literals");
  throw std::invalid_argument("expected an integer (number or decimal string)");
}

json rational_to_json(const Rational& v) {
  return json{{"num", int_to_json(v.num())}, {"den", int_to_json(v.den())}};
}

Rational rational_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("rational JSON must be {\"num\": ..., \"den\": ...}");
  return Rational(int_from_json(j.at("num")), int_from_json(j.at("den")));
}

json quadratic_to_json(const QuadraticNumber& v) {
  return json{
      {"rat", json::array({int_to_json(v.rat_part().num()), int_to_json(v.rat_part().den())})},
      {"surd", json::array({int_to_json(v.surd_part().num()), int_to_json(v.surd_part().den())})},
      {"D", int_to_json(v.radicand())}};
}

QuadraticNumber quadratic_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rat") || !j.contains("surd") || !j.contains("D"))
    throw std::invalid_argument(
        "quadratic JSON must be {\"rat\": [p, q], \"surd\": [r, s], \"D\": d}");
  const json& rat = j.at("rat");
  const json& surd = j.at("surd");
  if (!rat.is_array() || rat.size() != 2 || !surd.is_array() || surd.size() != 2)
    throw std::invalid_argument("quadratic JSON parts must be pairs [numerator, denominator]");
  return QuadraticNumber(Rational(int_from_json(rat[0]), int_from_json(rat[1])),
                         Rational(int_from_json(surd[0]), int_from_json(surd[1])),
                         int_from_json(j.at("D")));
}

json cf_to_json(const ContinuedFraction& cf) {
  json pre = json::array();
  for (const Int& d : cf.pre) pre.push_back(int_to_json(d));
  json per = json::array();
  for (const Int& d : cf.per) per.push_back(int_to_json(d));
  return json{{"pre", pre}, {"per", per}};
}

ContinuedFraction cf_from_json(const json& j) {
  if (!j.is_object() || !j.contains("pre") || !j.contains("per"))
    throw std::invalid_argument("continued fraction JSON must be {\"pre\": [...], \"per\": [...]}");
  ContinuedFraction cf;
  for (const json& d : j.at("pre")) cf.pre.push_back(int_from_json(d));
  for (const json& d : j.at("per")) cf.per.push_back(int_from_json(d));
  return cf;
}

Tiling tiling_from_spec(const json& spec) {
  if (!spec.is_object() || !spec.contains("kind"))
    throw std::invalid_argument("tiling spec must be an object with a \"kind\" field");
  const std::string kind = spec.at("kind").get<std::string>();
  if (kind == "cps") {
    if (!spec.contains("alpha") || !spec.contains("rho"))
      throw std::invalid_argument("cps tiling spec requires \"alpha\" and \"rho\"");
    Branch branch = Branch::upper;
    if (spec.contains("branch")) {
      const std::string b = spec.at("branch").get<std::string>();
      if (b == "upper")
        branch = Branch::upper;
      else if (b == "lower")
        branch = Branch::lower;
      else
        throw std::invalid_argument("branch must be \"upper\" or \"lower\"");
    }
    return psi(SturmianParams(quadratic_from_json(spec.at("alpha")),
                              quadratic_from_json(spec.at("rho")), branch));
  }
  if (kind == "subst") {
    if (!spec.contains("rule"))
      throw std::invalid_argument("subst tiling spec requires a \"rule\" string");
    SubstitutionRule rule = SubstitutionRule::parse(spec.at("rule").get<std::string>());
    if (spec.contains("seeds")) {
      const std::string seeds = spec.at("seeds").get<std::string>();
      if (seeds.size() != 2)
        throw std::invalid_argument("seeds must be two letters (left and right of the origin)");
      return Tiling::from_substitution(rule, {seeds[0], seeds[1]});
    }
    return Tiling::from_substitution(rule);
  }
  throw std::invalid_argument("unknown tiling kind '" + kind + "' (use \"cps\" or \"subst\")");
}

json cps_spec(const SturmianParams& s) {
  return json{{"kind", "cps"},
              {"alpha", quadratic_to_json(s.alpha)},
              {"rho", quadratic_to_json(s.rho)},
              {"branch", s.branch == Branch::upper ? "upper" : "lower"}};
}

}  // namespace aptile
