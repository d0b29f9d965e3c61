"""Pointed Hopf algebras over rank-two Nichols algebras of diagonal type.

Exact cyclotomic scalars, braidings and their Cartan data, Lyndon words
and super letters, the smash product with its coproduct, a PBW rewriting
engine, and a catalog of Nichols presentations and liftings that can be
checked case by case.
"""

from .braiding import BraidingMatrix, cartan_matrix, dynkin, reflect, twist_equivalent, weyl_orbit
from .catalog import (
    LIFTING_IDS,
    NICHOLS_IDS,
    admissible_parameters,
    derive_closed_form,
    lifting_case,
    lifting_ideal,
    nichols_presentation,
    verify_case,
)
from .grammar import parse_element
from .hopf import coproduct, is_skew_primitive, is_skew_primitive_mod, skew_defect
from .lyndon import is_lyndon, lyndon_words, shirshov_decompose, super_letter_expand
from .pbw import RewriteSystem, enumerate_pbw_basis, reduce, span_dimension_oracle
from .scalars import CycloNumber, ParamScalar, q_binomial, q_factorial, q_number, zeta
from .smash import GroupRealization, SmashAlgebra, SmashElement, q_commutator

__version__ = "0.1.0"

__all__ = [
    "BraidingMatrix",
    "cartan_matrix",
    "dynkin",
    "reflect",
    "twist_equivalent",
    "weyl_orbit",
    "LIFTING_IDS",
    "NICHOLS_IDS",
    "admissible_parameters",
    "derive_closed_form",
    "lifting_case",
    "lifting_ideal",
    "nichols_presentation",
    "verify_case",
    "parse_element",
    "coproduct",
    "is_skew_primitive",
    "is_skew_primitive_mod",
    "skew_defect",
    "is_lyndon",
    "lyndon_words",
    "shirshov_decompose",
    "super_letter_expand",
    "RewriteSystem",
    "enumerate_pbw_basis",
    "reduce",
    "span_dimension_oracle",
    "CycloNumber",
    "ParamScalar",
    "q_binomial",
    "q_factorial",
    "q_number",
    "zeta",
    "GroupRealization",
    "SmashAlgebra",
    "SmashElement",
    "q_commutator",
]
