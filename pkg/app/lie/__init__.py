"""Root systems, weights and characters of A_{n-1} and B_n."""

from app.lie.algebra import algebra_from_name, build_algebra, rep_weights
from app.lie.characters import (
    decompose,
    irreducible_character,
    tensor_decompose,
    weight_set,
    weyl_dim,
)
from app.lie.models import Character, Family, LieAlgebraData, Weight

__all__ = [
    "Character",
    "Family",
    "LieAlgebraData",
    "Weight",
    "algebra_from_name",
    "build_algebra",
    "decompose",
    "irreducible_character",
    "rep_weights",
    "tensor_decompose",
    "weight_set",
    "weyl_dim",
]
