"""Hopf monoid of hypergraphs and its basic polynomial invariant."""

from .hopf import antipode_takeuchi, chi_direct, chi_of_combination, chi_polynomial, zeta_basic
from .hypergraph import Hypergraph, LinearCombination
from .orientations import acyclic_orientations, chi_formula, count_pairs, reciprocity_formula
from .polyring import RationalPoly, f_polynomial
from .setcomp import Composition, Decomposition, DomainError, GroundSet
from .submonoids import Graph, SetOfPaths, SimpleHypergraph, SimplicialComplex

__all__ = [
    "Composition",
    "Decomposition",
    "DomainError",
    "Graph",
    "GroundSet",
    "Hypergraph",
    "LinearCombination",
    "RationalPoly",
    "SetOfPaths",
    "SimpleHypergraph",
    "SimplicialComplex",
    "acyclic_orientations",
    "antipode_takeuchi",
    "chi_direct",
    "chi_formula",
    "chi_of_combination",
    "chi_polynomial",
    "count_pairs",
    "f_polynomial",
    "reciprocity_formula",
    "zeta_basic",
]
