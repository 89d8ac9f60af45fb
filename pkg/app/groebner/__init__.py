"""Polynomials over Q(sqrt 2), lex orders and reduced Groebner bases."""

from app.groebner.buchberger import (
    buchberger,
    interreduce,
    is_groebner_basis,
    lex_compare,
    lt_ideal,
    minimalize,
    normal_form,
    s_polynomial,
)
from app.groebner.models import (
    CoeffExt,
    GradedVariable,
    MonomialIdeal,
    MonomialOrder,
    Polynomial,
    PolynomialRing,
    divides,
)

__all__ = [
    "CoeffExt",
    "GradedVariable",
    "MonomialIdeal",
    "MonomialOrder",
    "Polynomial",
    "PolynomialRing",
    "buchberger",
    "divides",
    "interreduce",
    "is_groebner_basis",
    "lex_compare",
    "lt_ideal",
    "minimalize",
    "normal_form",
    "s_polynomial",
]
