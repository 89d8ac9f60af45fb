"""Quadratization and Hilbert series of affinized varieties."""

from app.affine.hilbert import (
    enumerate_compositions,
    free_model,
    free_variables,
    hilbert_affinized,
    hilbert_free_affinized,
    hilbert_free_finite,
    standard_character,
    standard_monomials,
)
from app.affine.models import CompositionAssignment, QuadraticModel
from app.affine.quadratize import (
    chain_ideal,
    chain_substitutions,
    lt_with_substitutions,
    quadratize,
)
from app.groebner.models import GradedVariable

__all__ = [
    "CompositionAssignment",
    "GradedVariable",
    "QuadraticModel",
    "chain_ideal",
    "chain_substitutions",
    "enumerate_compositions",
    "free_model",
    "free_variables",
    "hilbert_affinized",
    "hilbert_free_affinized",
    "hilbert_free_finite",
    "lt_with_substitutions",
    "quadratize",
    "standard_character",
    "standard_monomials",
]
