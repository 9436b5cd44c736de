#include <aptile/equivalence.hpp>

#include <stdexcept>

namespace aptile {

EquivalenceVerdict soe_tiling_spaces(const QuadraticNumber& alpha, const QuadraticNumber& beta) {
  EquivalenceVerdict v;
  v.alpha_cf = cf_expand(alpha);
  v.beta_cf = cf_expand(beta);
  if (v.alpha_cf.is_rational() || v.beta_cf.is_rational())
    throw std::domain_error("strong orbit equivalence is decided for irrational slopes only");

  if (alpha == beta) {
    v.equivalent = true;
    v.witness = ModularMatrix{};
    v.route = "identical slopes";
    return v;
  }
  std::optional<ModularMatrix> w = cf_equivalent(alpha, beta);
  if (w) {
    v.equivalent = true;
    v.witness = w;
    v.route = "continued fraction periods coincide";
  } else {
    v.equivalent = false;
    v.route = "continued fraction periods differ";
  }
  return v;
}

TorusMapClass diffeo_criterion(const ModularMatrix& m) {
  Int det = m.det();
  if (det == 0) return TorusMapClass::neither;
  if (det == 1 || det == -1) return TorusMapClass::diffeomorphism;
  return TorusMapClass::smooth_only;
}

SubstitutiveWitness class_substitutive_witness(const QuadraticNumber& alpha) {
  SubstitutiveRepresentative rep = substitutive_representative(alpha);

  SubstitutiveWitness w;
  w.beta = rep.beta;
  w.rule = rep.rule;
  w.alpha_cf = cf_expand(alpha);
  w.beta_cf = cf_expand(rep.beta);
  if (w.beta_cf.pre != std::vector<Int>{Int(0)})
    throw std::logic_error("substitutive witness: representative is not [0; (period)]");

  std::optional<ModularMatrix> m = cf_equivalent(alpha, rep.beta);
  if (!m) throw std::logic_error("substitutive witness: representative left the orbit");
  if (mobius_apply(*m, alpha) != rep.beta)
    throw std::logic_error("substitutive witness: matrix does not map alpha to beta");
  w.matrix = *m;

  PerronData pd = perron(rep.rule);
  w.pisot = is_pisot(pd);
  if (!w.pisot) throw std::logic_error("substitutive witness: expansion factor is not Pisot");
  w.lambda = pd.lambda;
  return w;
}

}  // namespace aptile
