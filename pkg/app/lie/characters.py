"""Weyl dimensions, Freudenthal multiplicities and character decomposition."""

import logging
from collections import deque
from collections.abc import Mapping
from fractions import Fraction
from functools import lru_cache
from typing import TypeVar

from app.errors import DomainError, NotAVirtualCharacterError
from app.lie.models import Character, LieAlgebraData, Weight

logger = logging.getLogger(__name__)

T = TypeVar("T")

MAX_STRIP_STEPS = 10_000


def _require_dominant(algebra: LieAlgebraData, weight: Weight) -> None:
    if weight.rank != algebra.rank:
        raise DomainError(f"Weight {weight} does not have rank {algebra.rank}")
    if not weight.is_dominant():
        raise DomainError(f"Weight {weight} is not dominant")


def weyl_dim(algebra: LieAlgebraData, weight: Weight) -> int:
    """Dimension of L(weight) from the Weyl dimension formula.

    Raises:
        DomainError: If the weight is not dominant
    """
    _require_dominant(algebra, weight)
    rho = algebra.rho()
    shifted = weight + rho
    value = Fraction(1)
    for alpha in algebra.positive_root_weights():
        value *= algebra.inner(shifted, alpha) / algebra.inner(rho, alpha)
    assert value.denominator == 1, f"Weyl dimension {value} is not an integer"
    return int(value)


@lru_cache(maxsize=1024)
def weight_set(algebra: LieAlgebraData, weight: Weight) -> dict[Weight, int]:
    """All weights of L(weight) mapped to their level (height of weight - mu).

    The set is generated by closing {weight} under simple-root strings, which
    yields the saturated set of weights of the irreducible module.
    """
    _require_dominant(algebra, weight)
    simple = algebra.simple_root_weights()
    levels = {weight: 0}
    queue = deque([weight])
    while queue:
        mu = queue.popleft()
        for i, alpha in enumerate(simple):
            for k in range(1, mu.dynkin[i] + 1):
                nu = mu - alpha * k
                if nu not in levels:
                    levels[nu] = levels[mu] + k
                    queue.append(nu)
    return levels


@lru_cache(maxsize=1024)
def irreducible_character(algebra: LieAlgebraData, weight: Weight) -> Character:
    """Character of L(weight) by Freudenthal's recursion.

    Args:
        algebra: Root data
        weight: Dominant highest weight

    Returns:
        Weight multiplicities of the irreducible module

    Raises:
        DomainError: If the weight is not dominant
    """
    levels = weight_set(algebra, weight)
    positive = algebra.positive_root_weights()
    shifted = weight + algebra.rho()
    top = algebra.inner(shifted, shifted)

    mult: dict[Weight, int] = {weight: 1}
    for mu in sorted(levels, key=lambda w: (levels[w], w.dynkin)):
        if mu == weight:
            continue
        total = Fraction(0)
        for alpha in positive:
            k = 1
            nu = mu + alpha
            while nu in levels:
                total += mult[nu] * algebra.inner(nu, alpha)
                k += 1
                nu = mu + alpha * k
        mu_shifted = mu + algebra.rho()
        value = 2 * total / (top - algebra.inner(mu_shifted, mu_shifted))
        assert value.denominator == 1, f"Non-integral multiplicity {value} at {mu}"
        mult[mu] = int(value)
    return Character(mult)


def decompose(algebra: LieAlgebraData, values: Mapping[Weight, T]) -> dict[Weight, T]:
    """Write a Weyl-symmetric weight map as a combination of irreducible characters.

    Coefficients may be integers or q-polynomials/series; anything supporting
    subtraction, multiplication by int and truthiness works.

    Args:
        algebra: Root data
        values: Map weight -> coefficient (the virtual character, possibly q-graded)

    Returns:
        Map dominant weight -> coefficient c_mu with values = sum(c_mu * chi_mu)

    Raises:
        NotAVirtualCharacterError: If the input is not Weyl symmetric or the strip does not end
    """
    remaining: dict[Weight, T] = {w: v for w, v in values.items() if v}
    if not algebra.is_weyl_symmetric(remaining):
        raise NotAVirtualCharacterError("Not a virtual character: support is not Weyl symmetric")

    result: dict[Weight, T] = {}
    steps = 0
    while remaining:
        steps += 1
        if steps > MAX_STRIP_STEPS:
            raise NotAVirtualCharacterError("Not a virtual character: strip did not terminate")
        dominant = [w for w in remaining if w.is_dominant()]
        if not dominant:
            raise NotAVirtualCharacterError("Not a virtual character: no dominant weight left")
        top = max(dominant, key=lambda w: (algebra.height(w), w.dynkin))
        coeff = remaining[top]
        result[top] = coeff
        for w, m in irreducible_character(algebra, top).support.items():
            contribution = coeff * m
            updated = remaining[w] - contribution if w in remaining else -contribution
            if updated:
                remaining[w] = updated
            else:
                remaining.pop(w, None)
    return dict(sorted(result.items()))


def tensor_decompose(algebra: LieAlgebraData, lam: Weight, mu: Weight) -> dict[Weight, int]:
    """Multiplicities of irreducibles in L(lam) (x) L(mu)."""
    product = irreducible_character(algebra, lam) * irreducible_character(algebra, mu)
    return decompose(algebra, product.support)
