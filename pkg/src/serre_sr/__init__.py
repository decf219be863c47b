"""Generalized Serre conditions (S_l^j) for Stanley-Reisner rings.

Simplicial complexes on at most 63 vertices, exact homology over prime
fields, Hochster-formula invariants, several equivalent deciders for
(S_l^j) and a property harness that checks them against each other.
"""
from .complex import (DomainError, MalformedInputError, SimplicialComplex, alexander_dual,
                      boundary_of_simplex, face, format_facets, from_facets, link,
                      parse_facets, skeleton)
from .criteria import (Criterion, SerreVerdict, serre_profile, s2j_dual_graph, slj_alexander,
                       slj_definition, slj_lemma63, slj_reisner)
from .homology import reduced_betti, reduced_betti_all
from .invariants import betti_of_complex, depth, graded_betti, is_cm, pd, reg
from .linalg import PrimeField
from .monomial import (MonomialIdeal, alexander_dual_ideal, complex_of_ideal, parse_ideal,
                       polarize, radical, stanley_reisner_ideal)

__all__ = [
    "Criterion", "DomainError", "MalformedInputError", "MonomialIdeal", "PrimeField",
    "SerreVerdict", "SimplicialComplex", "alexander_dual", "alexander_dual_ideal",
    "betti_of_complex", "boundary_of_simplex", "complex_of_ideal", "depth", "face",
    "format_facets", "from_facets", "graded_betti", "is_cm", "link", "parse_facets",
    "parse_ideal", "pd", "polarize", "radical", "reduced_betti", "reduced_betti_all", "reg",
    "s2j_dual_graph", "serre_profile", "skeleton", "slj_alexander", "slj_definition",
    "slj_lemma63", "slj_reisner", "stanley_reisner_ideal",
]
