"""Hall-Littlewood side of the affinized Hilbert series and its q=1 limit."""

import logging
from collections.abc import Sequence

from app.affine.hilbert import enumerate_compositions, hilbert_affinized
from app.affine.models import QuadraticModel
from app.errors import DomainError
from app.fixtures.loader import load_fixture
from app.hl.fermionic import assemble, modified_hl, require_supported_pattern
from app.lie.algebra import algebra_from_name
from app.lie.characters import irreducible_character
from app.lie.models import Character, LieAlgebraData, Weight
from app.qseries.functions import poch
from app.qseries.models import CharacterQSeries, QPolynomial
from app.verify.models import CheckReport, compare_characters, compare_series

logger = logging.getLogger(__name__)

SUPPORTED_ALGEBRAS = ("sl2", "sl3", "sl4", "so5", "so7")


def _supported(name: str, target: Sequence[int]) -> tuple[LieAlgebraData, tuple[int, ...]]:
    algebra = algebra_from_name(name)
    if algebra.name not in SUPPORTED_ALGEBRAS:
        raise DomainError(
            f"No fixture model for {algebra.name}; expected one of {list(SUPPORTED_ALGEBRAS)}"
        )
    target = tuple(target)
    if len(target) != algebra.rank or any(m < 0 for m in target):
        raise DomainError(f"Multidegree {list(target)} is invalid for {algebra.name}")
    require_supported_pattern(algebra, Weight(target))
    return algebra, target


def _poch_product(target: Sequence[int]) -> QPolynomial:
    product = QPolynomial.one()
    for m in target:
        product = product * poch(m)
    return product


def _model(algebra: LieAlgebraData) -> QuadraticModel:
    return load_fixture(algebra.name).model()


def normalized_hilbert(
    algebra: LieAlgebraData, target: Sequence[int], order: int
) -> CharacterQSeries:
    """prod_i (q)_{M_i} times the affinized Hilbert series of the fixture model."""
    series = hilbert_affinized(_model(algebra), target, order)
    return series.scale(_poch_product(target))


def check_conjecture_51(name: str, target: Sequence[int], order: int) -> CheckReport:
    """Modified Hall-Littlewood character against the normalized Hilbert series.

    Raises:
        DomainError: For an algebra without a fixture or an unsupported multidegree
    """
    algebra, target = _supported(name, target)
    lam = algebra.highest_weight(target)
    hl_map = modified_hl(algebra, lam)
    lhs = assemble(algebra, hl_map, order)
    rhs = normalized_hilbert(algebra, target, order)
    logger.debug(f"{algebra.name} at M={list(target)}: {len(hl_map)} dominant weights")
    return compare_series("conj51", {"algebra": algebra.name, "M": list(target)}, lhs, rhs)


def polynomial_degree_bound(model: QuadraticModel, target: Sequence[int]) -> int:
    """Upper bound on the q-degree of prod_i (q)_{M_i} h(M).

    Each composition contributes a rational function of degree
    Q(m) + sum_i M_i(M_i+1)/2 - sum_a m_a(m_a+1)/2; a sum of rational
    functions has degree at most the largest of these.
    """
    head = sum(m * (m + 1) // 2 for m in target)
    bound = 0
    for assignment in enumerate_compositions(model.variables, target):
        m = assignment.m
        degree = model.quadratic_form(m) + head - sum(k * (k + 1) // 2 for k in m)
        bound = max(bound, degree)
    return bound


def q_one_limit(algebra: LieAlgebraData, target: Sequence[int]) -> Character:
    """prod_i (q)_{M_i} h(M) evaluated at q = 1."""
    model = _model(algebra)
    bound = polynomial_degree_bound(model, target)
    series = hilbert_affinized(model, target, bound).scale(_poch_product(target))
    return Character({w: sum(s.coeffs) for w, s in series.terms.items()})


def check_q_one_limit(name: str, target: Sequence[int]) -> CheckReport:
    """At q = 1 the normalized Hilbert series is prod_i ch L(Lambda_i)^{M_i}.

    Raises:
        DomainError: For an algebra without a fixture or an unsupported multidegree
    """
    algebra, target = _supported(name, target)
    rhs = Character.trivial(algebra.rank)
    for i, m in enumerate(target, start=1):
        fundamental = irreducible_character(algebra, algebra.fundamental_weight(i))
        for _ in range(m):
            rhs = rhs * fundamental
    lhs = q_one_limit(algebra, target)
    return compare_characters("q1", {"algebra": algebra.name, "M": list(target)}, lhs, rhs)
