#pragma once

#include <aptile/confrac.hpp>
#include <aptile/hull.hpp>
#include <aptile/quadratic.hpp>

#include <json.hpp>

#include <string>

namespace aptile {

// JSON encodings used by the CLI and the python layer.  Integers are emitted
// as JSON numbers when they fit in 64 bits and as decimal strings otherwise;
// both forms are accepted on input, so emitted values always re-parse to
// equal values.
//
// Schemas:
//   Int                 42                      or "340282366920938463463374607431768211456"
//   Rational            {"num": I, "den": I}    den > 0, reduced
//   QuadraticNumber     {"rat": [p, q], "surd": [r, s], "D": I}
//                       meaning p/q + (r/s)*sqrt(D); D square-free, D = 1
//                       exactly for rational values
//   ContinuedFraction   {"pre": [I...], "per": [I...]}
//   Tiling spec         {"kind": "cps", "alpha": Q, "rho": Q,
//                        "branch": "upper"|"lower"}
//                    or {"kind": "subst", "rule": "a>b; b>ab",
//                        "seeds": "ba" (optional two letters)}

nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

nlohmann::json rational_to_json(const Rational& v);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json quadratic_to_json(const QuadraticNumber& v);
QuadraticNumber quadratic_from_json(const nlohmann::json& j);

nlohmann::json cf_to_json(const ContinuedFraction& cf);
ContinuedFraction cf_from_json(const nlohmann::json& j);

// Builds the tiling described by a spec object (see schema above).  Throws
// std::invalid_argument on malformed specs and propagates domain errors from
// the underlying constructors.
Tiling tiling_from_spec(const nlohmann::json& spec);

// The spec for a sturmian tiling, the inverse of tiling_from_spec for the
// cps kind.
nlohmann::json cps_spec(const SturmianParams& s);

}  // namespace aptile
