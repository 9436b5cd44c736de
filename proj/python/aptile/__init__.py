"""Exact one-dimensional aperiodic tilings.

Sturmian words, cut-and-project schemes and primitive substitutions, with
hull-level invariants (tiling metric, return modules, approximant graphs)
and a decision procedure for strong orbit equivalence of tiling spaces.
All arithmetic is exact: integers cross the boundary as ``int``, rationals
as ``fractions.Fraction`` and quadratic irrationals as ``QuadraticNumber``.
"""

from ._aptile import (
    APGraph,
    ContinuedFraction,
    EquivalenceVerdict,
    ModularMatrix,
    QuadraticNumber,
    ReturnModule,
    SubstitutionRule,
    SubstitutiveWitness,
    Tiling,
    ap_graph,
    complexity,
    continued_fraction,
    metric_distance,
    orbit_equivalent,
    parse_quadratic,
    render_svg,
    return_module,
    sturmian_word,
    substitutive_witness,
    verify,
)

__all__ = [
    "APGraph",
    "ContinuedFraction",
    "EquivalenceVerdict",
    "ModularMatrix",
    "QuadraticNumber",
    "ReturnModule",
    "SubstitutionRule",
    "SubstitutiveWitness",
    "Tiling",
    "ap_graph",
    "complexity",
    "continued_fraction",
    "metric_distance",
    "orbit_equivalent",
    "parse_quadratic",
    "render_svg",
    "return_module",
    "sturmian_word",
    "substitutive_witness",
    "verify",
]

__version__ = "0.1.0"
