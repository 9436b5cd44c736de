// Python bindings for the aptile core: exact quadratic arithmetic, continued
// fractions, sturmian words, substitutions, tilings with their invariants
// (metric, return modules, approximant graphs) and the orbit-equivalence
// decision procedure.  Exact integers cross the boundary as python ints and
// exact rationals as fractions.Fraction, so nothing is rounded silently.
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "aptile/acceptance.hpp"
#include "aptile/apcomplex.hpp"
#include "aptile/confrac.hpp"
#include "aptile/cps.hpp"
#include "aptile/equivalence.hpp"
#include "aptile/hull.hpp"
#include "aptile/json_io.hpp"
#include "aptile/quadratic.hpp"
#include "aptile/rational.hpp"
#include "aptile/render.hpp"
#include "aptile/substitution.hpp"
#include "aptile/words.hpp"

namespace py = pybind11;
using namespace aptile;

namespace {

py::object int_out(const Int& z) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

Int int_in(py::handle v) {
  if (!py::isinstance<py::int_>(v)) throw std::invalid_argument("expected an int");
  return Int(py::str(v).cast<std::string>(), 10);
}

py::object fraction_out(const Rational& r) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(int_out(r.num()), int_out(r.den()));
}

// Accepts Fraction, int, or a string in the p/q, decimal or scientific
// grammar; everything funnels through the exact rational parser.
Rational rational_in(py::handle v) {
  return Rational::parse(py::str(v).cast<std::string>());
}

Branch branch_in(const std::string& name) {
  if (name == "upper") return Branch::upper;
  if (name == "lower") return Branch::lower;
  throw std::invalid_argument("branch must be 'upper' or 'lower'");
}

std::string word_letters(const SubstitutionRule& rule, const Word& w) {
  std::string s;
  s.reserve(w.symbols.size());
  for (int sym : w.symbols) s += rule.alphabet[static_cast<std::size_t>(sym)];
  return s;
}

Word word_from_letters(const SubstitutionRule& rule, const std::string& text) {
  Word w;
  w.symbols.reserve(text.size());
  for (char c : text) w.symbols.push_back(rule.index_of(c));
  return w;
}

py::list rows_out(const ReturnModule& m) {
  py::list rows;
  for (const auto& row : m.rows) rows.append(py::make_tuple(int_out(row[0]), int_out(row[1])));
  return rows;
}

std::string matrix_repr(const ModularMatrix& m) {
  return "[[" + m.a.get_str() + ", " + m.b.get_str() + "], [" + m.c.get_str() + ", " +
         m.d.get_str() + "]]";
}

}  // namespace

PYBIND11_MODULE(_aptile, mod) {
  mod.doc() =
      "Exact one-dimensional aperiodic tilings: sturmian words, cut-and-project "
      "schemes, substitutions, hull invariants and strong orbit equivalence.";

  py::class_<QuadraticNumber>(mod, "QuadraticNumber",
                              "Element p/q + (r/s)*sqrt(D) of a real quadratic field, exact.")
      .def(py::init([](const std::string& text) { return QuadraticNumber::parse(text); }),
           py::arg("text"))
      .def(py::init([](py::int_ v) { return QuadraticNumber(int_in(v)); }), py::arg("value"))
      .def_static("sqrt_of", [](py::int_ d) { return QuadraticNumber::sqrt_of(int_in(d)); },
                  py::arg("radicand"), "The square root of a positive integer, exact.")
      .def_property_readonly("rat", [](const QuadraticNumber& x) { return fraction_out(x.rat_part()); },
                             "Rational part as a Fraction.")
      .def_property_readonly("surd", [](const QuadraticNumber& x) { return fraction_out(x.surd_part()); },
                             "Coefficient of sqrt(D) as a Fraction.")
      .def_property_readonly("radicand", [](const QuadraticNumber& x) { return int_out(x.radicand()); })
      .def("sign", &QuadraticNumber::sign)
      .def("floor", [](const QuadraticNumber& x) { return int_out(x.floor()); })
      .def("ceil", [](const QuadraticNumber& x) { return int_out(x.ceil()); })
      .def("__abs__", &QuadraticNumber::abs)
      .def("__float__", &QuadraticNumber::to_double)
      .def("__str__", &QuadraticNumber::to_string)
      .def("__repr__",
           [](const QuadraticNumber& x) { return "QuadraticNumber('" + x.to_string() + "')"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def("__hash__", [](const QuadraticNumber& x) { return py::hash(py::str(x.to_string())); });
  py::implicitly_convertible<py::str, QuadraticNumber>();
  py::implicitly_convertible<py::int_, QuadraticNumber>();

  mod.def("parse_quadratic", &QuadraticNumber::parse, py::arg("text"),
          "Parse the exact literal grammar 'p/q + r/s*sqrt(D)'.");

  py::class_<ContinuedFraction>(mod, "ContinuedFraction",
                                "Canonical continued fraction: finite digits for rationals, "
                                "preperiod plus primitive period for quadratic irrationals.")
      .def_property_readonly("pre",
                             [](const ContinuedFraction& cf) {
                               py::list out;
                               for (const Int& d : cf.pre) out.append(int_out(d));
                               return out;
                             })
      .def_property_readonly("per",
                             [](const ContinuedFraction& cf) {
                               py::list out;
                               for (const Int& d : cf.per) out.append(int_out(d));
                               return out;
                             })
      .def("is_rational", &ContinuedFraction::is_rational)
      .def("display", &ContinuedFraction::display)
      .def("convergent",
           [](const ContinuedFraction& cf, std::size_t k) {
             return fraction_out(cf_convergent(cf, k));
           },
           py::arg("k"), "The k-th convergent p_k/q_k as a Fraction.")
      .def("__str__", &ContinuedFraction::display)
      .def("__repr__",
           [](const ContinuedFraction& cf) { return "ContinuedFraction " + cf.display(); })
      .def(py::self == py::self);

  mod.def("continued_fraction", &cf_expand, py::arg("x"),
          "Canonical continued fraction expansion of a rational or quadratic number.");

  py::class_<ModularMatrix>(mod, "ModularMatrix",
                            "Integer matrix acting on numbers by x -> (c + d*x)/(a + b*x).")
      .def(py::init([](py::int_ a, py::int_ b, py::int_ c, py::int_ d) {
             return ModularMatrix{int_in(a), int_in(b), int_in(c), int_in(d)};
           }),
           py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"))
      .def_property_readonly("a", [](const ModularMatrix& m) { return int_out(m.a); })
      .def_property_readonly("b", [](const ModularMatrix& m) { return int_out(m.b); })
      .def_property_readonly("c", [](const ModularMatrix& m) { return int_out(m.c); })
      .def_property_readonly("d", [](const ModularMatrix& m) { return int_out(m.d); })
      .def("det", [](const ModularMatrix& m) { return int_out(m.det()); })
      .def("inverse", &ModularMatrix::inverse)
      .def("apply", &mobius_apply, py::arg("x"), "Apply the Moebius action to x.")
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__repr__", &matrix_repr);

  mod.def(
      "sturmian_word",
      [](const QuadraticNumber& alpha, const QuadraticNumber& rho, long lo, long hi,
         const std::string& branch) {
        return sturmian_block(SturmianParams(alpha, rho, branch_in(branch)), lo, hi).to_string();
      },
      py::arg("alpha"), py::arg("rho") = QuadraticNumber(0), py::arg("lo") = 0,
      py::arg("hi") = 40, py::arg("branch") = "upper",
      "Symbols s_lo ... s_(hi-1) of the sturmian sequence with slope alpha and "
      "intercept rho, as a string of 0s and 1s.");

  mod.def(
      "complexity",
      [](const QuadraticNumber& alpha, std::size_t n) {
        return complexity(SturmianParams(alpha, QuadraticNumber(0)), n);
      },
      py::arg("alpha"), py::arg("n"),
      "Number of distinct length-n factors of the sturmian language of slope alpha.");

  py::class_<SubstitutionRule>(mod, "SubstitutionRule",
                               "Primitive substitution on a finite alphabet, e.g. 'a>ab; b>a'.")
      .def(py::init(&SubstitutionRule::parse), py::arg("text"))
      .def_property_readonly("letters",
                             [](const SubstitutionRule& r) {
                               return std::string(r.alphabet.begin(), r.alphabet.end());
                             })
      .def("image",
           [](const SubstitutionRule& r, const std::string& letter) {
             if (letter.size() != 1) throw std::invalid_argument("image expects one letter");
             Word w;
             w.symbols = r.images[static_cast<std::size_t>(r.index_of(letter[0]))];
             return word_letters(r, w);
           },
           py::arg("letter"))
      .def("apply",
           [](const SubstitutionRule& r, const std::string& seed, unsigned iters) {
             return word_letters(r, apply(r, word_from_letters(r, seed), iters));
           },
           py::arg("seed"), py::arg("iters") = 1,
           "Iterate the rule on a word of letters and return the image word.")
      .def("fixed_point_prefix",
           [](const SubstitutionRule& r, const std::string& seed, std::size_t n) {
             if (seed.size() != 1) throw std::invalid_argument("seed must be one letter");
             return word_letters(r, fixed_point_prefix(r, seed[0], n));
           },
           py::arg("seed"), py::arg("n"),
           "First n letters of the fixed point grown from the seed letter.")
      .def("is_primitive", [](const SubstitutionRule& r) { return is_primitive(r); })
      .def("is_pisot", [](const SubstitutionRule& r) { return is_pisot(perron(r)); })
      .def("expansion_factor", [](const SubstitutionRule& r) { return perron(r).lambda; },
           "Perron eigenvalue of the abelianization, exact in its quadratic field.")
      .def("tile_lengths", [](const SubstitutionRule& r) { return perron(r).lengths; },
           "Natural prototile lengths (left Perron eigenvector, first length 1).")
      .def("__str__", &SubstitutionRule::to_string)
      .def("__repr__",
           [](const SubstitutionRule& r) { return "SubstitutionRule('" + r.to_string() + "')"; });

  py::class_<Tiling>(mod, "Tiling",
                     "Tiling of the line by finitely many prototiles, queried exactly.")
      .def_static("from_spec",
                  [](const std::string& text) {
                    return tiling_from_spec(nlohmann::json::parse(text));
                  },
                  py::arg("spec"),
                  "Build from a JSON spec: {\"kind\":\"cps\", \"alpha\":..., \"rho\":..., "
                  "\"branch\":...} or {\"kind\":\"subst\", \"rule\":..., \"seeds\":...}.")
      .def_static("from_cps",
                  [](const QuadraticNumber& alpha, const QuadraticNumber& rho,
                     const std::string& branch) {
                    WindowConvention w = branch_in(branch) == Branch::upper
                                             ? WindowConvention::half_open_high
                                             : WindowConvention::half_open_low;
                    return Tiling::from_cps(CutProjectScheme(alpha, rho, w));
                  },
                  py::arg("alpha"), py::arg("rho") = QuadraticNumber(0),
                  py::arg("branch") = "upper")
      .def_static("from_substitution",
                  [](const SubstitutionRule& rule, const std::string& seeds) {
                    if (seeds.empty()) return Tiling::from_substitution(rule);
                    if (seeds.size() != 2)
                      throw std::invalid_argument("seeds must be two letters");
                    return Tiling::from_substitution(rule, {seeds[0], seeds[1]});
                  },
                  py::arg("rule"), py::arg("seeds") = std::string())
      .def_property_readonly("alphabet_size", &Tiling::alphabet_size)
      .def_property_readonly("lengths", &Tiling::lengths)
      .def_property_readonly("singular_branch",
                             [](const Tiling& t) -> std::optional<std::string> {
                               auto tag = t.singular_tag();
                               if (!tag) return std::nullopt;
                               return std::string(*tag == Branch::upper ? "upper" : "lower");
                             })
      .def("vertex", [](const Tiling& t, py::int_ k) { return t.vertex(int_in(k)); },
           py::arg("k"), "Position of the k-th vertex; tile k is [vertex(k), vertex(k+1)].")
      .def("letter", [](const Tiling& t, py::int_ k) {
             return std::string(1, t.letter(t.label(int_in(k))));
           },
           py::arg("k"), "Letter of tile k.")
      .def("origin_offset", &Tiling::origin_offset)
      .def("window",
           [](const Tiling& t, const QuadraticNumber& lo, const QuadraticNumber& hi) {
             py::list out;
             for (const Tile& tl : window(t, lo, hi).tiles)
               out.append(py::make_tuple(std::string(1, t.letter(tl.label)), tl.left, tl.length));
             return out;
           },
           py::arg("lo"), py::arg("hi"),
           "Tiles meeting [lo, hi] as (letter, left, length) triples.")
      .def("translate", [](const Tiling& t, const QuadraticNumber& x) { return translate(t, x); },
           py::arg("x"), "The tiling T + x.")
      .def("__eq__", [](const Tiling& t, const Tiling& u) { return t.same_realization(u); });

  mod.def(
      "metric_distance",
      [](const Tiling& a, const Tiling& b, py::handle tol) {
        MetricInterval mi = metric_d(a, b, rational_in(tol));
        return py::make_tuple(fraction_out(mi.lo), fraction_out(mi.hi));
      },
      py::arg("a"), py::arg("b"), py::arg("tol") = "1e-6",
      "Exact enclosure [lo, hi] of the tiling distance, with hi - lo <= tol.");

  py::class_<ReturnModule>(mod, "ReturnModule",
                           "Normal form of the module generated by return vectors over "
                           "Z + theta*Z.")
      .def_property_readonly("theta", [](const ReturnModule& m) { return m.theta; })
      .def_property_readonly("rank", [](const ReturnModule& m) { return m.rows.size(); })
      .def_property_readonly("rows", &rows_out)
      .def("generators", &ReturnModule::generators)
      .def("reduce", [](const ReturnModule& m, const QuadraticNumber& x) {
             return torus_reduce(m, x);
           },
           py::arg("x"), "Canonical representative of x modulo the module.")
      .def(py::self == py::self);

  mod.def(
      "return_module",
      [](const QuadraticNumber& alpha, const QuadraticNumber& rho, long tiles,
         const std::string& branch) {
        if (tiles < 8) throw std::domain_error("need at least 8 tiles");
        Tiling t = Tiling::from_cps(CutProjectScheme(
            alpha, rho, branch_in(branch) == Branch::upper ? WindowConvention::half_open_high
                                                           : WindowConvention::half_open_low));
        const long half = tiles / 2;
        QuadraticNumber radius = t.vertex(Int(-half)).abs();
        if (t.vertex(Int(half)).abs() > radius) radius = t.vertex(Int(half)).abs();
        Patch patch = window(t, t.vertex(Int(0)), t.vertex(Int(4)));
        return return_module(return_vectors(t, patch, radius), alpha);
      },
      py::arg("alpha"), py::arg("rho") = QuadraticNumber(0), py::arg("tiles") = 10000,
      py::arg("branch") = "upper",
      "Return-vector module of a sturmian tiling, sampled from the given number of tiles.");

  py::class_<EquivalenceVerdict>(mod, "EquivalenceVerdict")
      .def_readonly("equivalent", &EquivalenceVerdict::equivalent)
      .def_readonly("route", &EquivalenceVerdict::route)
      .def_property_readonly("witness",
                             [](const EquivalenceVerdict& v) {
                               return v.witness ? py::cast(*v.witness) : py::none().cast<py::object>();
                             })
      .def_readonly("alpha_cf", &EquivalenceVerdict::alpha_cf)
      .def_readonly("beta_cf", &EquivalenceVerdict::beta_cf)
      .def("__bool__", [](const EquivalenceVerdict& v) { return v.equivalent; })
      .def("__repr__", [](const EquivalenceVerdict& v) {
        return std::string(v.equivalent ? "equivalent (" : "not equivalent (") + v.route + ")";
      });

  mod.def("orbit_equivalent", &soe_tiling_spaces, py::arg("alpha"), py::arg("beta"),
          "Decide strong orbit equivalence of the tiling spaces of two quadratic "
          "slopes; the verdict carries an exact unimodular witness when positive.");

  py::class_<SubstitutiveWitness>(mod, "SubstitutiveWitness")
      .def_readonly("beta", &SubstitutiveWitness::beta)
      .def_readonly("rule", &SubstitutiveWitness::rule)
      .def_readonly("pisot", &SubstitutiveWitness::pisot)
      .def_readonly("alpha_cf", &SubstitutiveWitness::alpha_cf)
      .def_readonly("beta_cf", &SubstitutiveWitness::beta_cf)
      .def_readonly("matrix", &SubstitutiveWitness::matrix)
      .def_property_readonly("expansion_factor",
                             [](const SubstitutiveWitness& w) { return w.lambda; })
      .def("__repr__", [](const SubstitutiveWitness& w) {
        return "SubstitutiveWitness(beta=" + w.beta.to_string() + ", rule='" +
               w.rule.to_string() + "')";
      });

  mod.def("substitutive_witness", &class_substitutive_witness, py::arg("alpha"),
          "Substitutive slope in the orbit-equivalence class of alpha, with the "
          "fixing rule, the unimodular witness and the Pisot expansion factor.");

  py::class_<APGraph>(mod, "APGraph",
                      "Approximant graph of a substitution with its induced self-map; "
                      "the inverse limit of the iterated map is the tiling space.")
      .def_property_readonly("collared", [](const APGraph& g) { return g.collared; })
      .def_property_readonly("vertices", [](const APGraph& g) { return g.vertex_count; })
      .def_property_readonly("edge_count", [](const APGraph& g) { return g.edges.size(); })
      .def_property_readonly("betti", [](const APGraph& g) { return betti1(g); },
                             "First Betti number: edges - vertices + components.")
      .def_property_readonly("expansion_factor", [](const APGraph& g) { return g.lambda; })
      .def("dot", &render_ap_dot, "Graphviz DOT rendering of the graph and self-map.");

  mod.def(
      "ap_graph",
      [](const SubstitutionRule& rule, bool collared) {
        return collared ? build_collared(rule) : build_uncollared(rule);
      },
      py::arg("rule"), py::arg("collared") = false);

  mod.def("render_svg", &render_tiling_svg, py::arg("tiling"), py::arg("lo"), py::arg("hi"),
          "SVG strip picture of the tiles of a tiling meeting [lo, hi].");

  mod.def(
      "verify",
      [](std::uint64_t seed) {
        py::list out;
        for (const CriterionResult& r : run_acceptance(seed))
          out.append(py::make_tuple(r.index, r.name, r.pass, r.detail));
        return out;
      },
      py::arg("seed") = 20260825u,
      "Run the acceptance checks; returns (index, name, passed, detail) tuples.");
}
