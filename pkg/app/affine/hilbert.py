"""Character-valued Hilbert series of affinized quadratic monomial models."""

import logging
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor

from tqdm import tqdm

from app.affine.models import CompositionAssignment, QuadraticModel
from app.errors import DomainError
from app.groebner.models import Exponents, GradedVariable, MonomialIdeal
from app.lie.algebra import rep_weights
from app.lie.models import Character, LieAlgebraData, Weight
from app.qseries.functions import inv_poch
from app.qseries.models import CharacterQSeries, QSeries

logger = logging.getLogger(__name__)


def _check_target(variables: Sequence[GradedVariable], target: Sequence[int]) -> tuple[int, ...]:
    target = tuple(int(x) for x in target)
    if any(x < 0 for x in target):
        raise DomainError(f"Multidegree must be componentwise >= 0, got {target}")
    if variables and len(variables[0].multidegree) != len(target):
        raise DomainError(
            f"Multidegree {target} has length {len(target)}, "
            f"variables are graded by length {len(variables[0].multidegree)}"
        )
    return target


def _compositions(
    degrees: Sequence[tuple[int, ...]],
    target: tuple[int, ...],
    first: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Depth-first walk, largest multiplicity first.

    covers[k] holds the coordinates that variables k.. can still fill; a
    branch is cut as soon as the remainder needs a coordinate nobody covers.
    """
    n = len(degrees)
    covers: list[frozenset[int]] = [frozenset()] * (n + 1)
    for k in range(n - 1, -1, -1):
        own = frozenset(i for i, d in enumerate(degrees[k]) if d)
        covers[k] = covers[k + 1] | own

    chosen = [0] * n

    def walk(k: int, remaining: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if not any(remaining):
            yield tuple(chosen[:k]) + (0,) * (n - k)
            return
        if k == n or any(r and i not in covers[k] for i, r in enumerate(remaining)):
            return
        deg = degrees[k]
        bound = min(remaining[i] // d for i, d in enumerate(deg) if d)
        values = range(bound, -1, -1) if (k or first is None) else (first,)
        for m in values:
            if m > bound:
                continue
            chosen[k] = m
            yield from walk(k + 1, tuple(r - m * d for r, d in zip(remaining, deg, strict=True)))
        chosen[k] = 0

    yield from walk(0, target)


def enumerate_compositions(
    variables: Sequence[GradedVariable], target: Sequence[int]
) -> Iterator[CompositionAssignment]:
    """All assignments m with sum(m_a * deg_a) == target.

    Each assignment appears exactly once, in decreasing lexicographic order of m.

    Raises:
        DomainError: If target has a negative entry or the wrong length
    """
    goal = _check_target(variables, target)
    degrees = [v.multidegree for v in variables]
    for m in _compositions(degrees, goal):
        yield CompositionAssignment(m)


def _partial_sum(
    model: QuadraticModel, target: tuple[int, ...], order: int, first: int | None
) -> dict[Weight, QSeries]:
    """Sum over the compositions with the first multiplicity fixed (all if first is None)."""
    degrees = [v.multidegree for v in model.variables]
    rank = model.rank
    terms: dict[Weight, QSeries] = {}
    products: dict[tuple[int, ...], QSeries] = {}
    for m in _compositions(degrees, target, first=first):
        power = model.quadratic_form(m)
        if power > order:
            continue
        key = tuple(sorted(k for k in m if k))
        if key not in products:
            product = QSeries.one(order)
            for k in key:
                product = product * inv_poch(k, order)
            products[key] = product
        series = products[key].shift(power)
        weight = CompositionAssignment(m).weight(model.variables, rank)
        terms[weight] = terms[weight] + series if weight in terms else series
    return terms


def hilbert_affinized(
    model: QuadraticModel, target: Sequence[int], order: int, jobs: int = 1
) -> CharacterQSeries:
    """Hilbert series of the affinization of a quadratic monomial model.

    Sums q^{Q(m)} e^{sum m_a weight_a} / prod (q)_{m_a} over all compositions
    of the target multidegree.

    Args:
        model: Quadratic monomial model
        target: Multidegree M
        order: Truncation order N
        jobs: Worker processes; > 1 splits the sum by the first multiplicity

    Returns:
        Character-valued series through q^order
    """
    goal = _check_target(model.variables, target)
    if order < 0:
        raise DomainError(f"Truncation order must be >= 0, got {order}")
    if not model.variables:
        if any(goal):
            return CharacterQSeries.zero(order)
        return CharacterQSeries.constant(0, order)

    if jobs <= 1:
        terms = _partial_sum(model, goal, order, None)
    else:
        head = model.variables[0].multidegree
        bound = min(goal[i] // d for i, d in enumerate(head) if d)
        firsts = list(range(bound, -1, -1))
        terms = {}
        with (
            ProcessPoolExecutor(max_workers=jobs) as executor,
            tqdm(
                total=len(firsts), desc="Compositions", unit="slice", ncols=100, disable=None
            ) as pbar,
        ):
            futures = [
                executor.submit(_partial_sum, model, goal, order, first) for first in firsts
            ]
            for future in futures:
                for w, s in future.result().items():
                    terms[w] = terms[w] + s if w in terms else s
                pbar.update(1)

    result = CharacterQSeries(order, terms)
    logger.debug(f"Hilbert series at M={goal}: {len(result.terms)} weights through q^{order}")
    return result


def free_variables(algebra: LieAlgebraData, reps: Sequence[int]) -> list[GradedVariable]:
    """Coordinates of the direct sum of fundamental representations L(Lambda_i), i in reps.

    Variables of L(Lambda_i) get the unit multidegree at position i - 1.
    """
    variables = []
    for i in sorted(set(reps)):
        degree = tuple(1 if k == i - 1 else 0 for k in range(algebra.rank))
        for label, weight in rep_weights(algebra, i):
            variables.append(GradedVariable(label, degree, weight))
    return variables


def free_model(algebra: LieAlgebraData, reps: Sequence[int]) -> QuadraticModel:
    """Model of the polynomial ring on the given fundamentals (no relations)."""
    return QuadraticModel(tuple(free_variables(algebra, reps)))


def hilbert_free_affinized(
    algebra: LieAlgebraData, reps: Sequence[int], target: Sequence[int], order: int
) -> CharacterQSeries:
    """Hilbert series of the affinized polynomial ring; zero for a negative multidegree."""
    if any(x < 0 for x in target):
        return CharacterQSeries.zero(order)
    return hilbert_affinized(free_model(algebra, reps), target, order)


def hilbert_free_finite(
    algebra: LieAlgebraData, reps: Sequence[int], target: Sequence[int]
) -> Character:
    """Character of the degree-M piece of the polynomial ring; zero for a negative multidegree."""
    if any(x < 0 for x in target):
        return Character()
    variables = free_variables(algebra, reps)
    weights = (a.weight(variables, algebra.rank) for a in enumerate_compositions(variables, target))
    return Character.from_weights(weights)


def standard_monomials(ideal: MonomialIdeal, target: Sequence[int]) -> list[Exponents]:
    """Monomials of multidegree M outside a monomial ideal."""
    variables = ideal.ring.variables
    return [a.m for a in enumerate_compositions(variables, target) if not ideal.contains(a.m)]


def standard_character(ideal: MonomialIdeal, target: Sequence[int]) -> Character:
    """Character of the degree-M piece of S / ideal by direct monomial enumeration."""
    variables = ideal.ring.variables
    rank = variables[0].weight.rank if variables else 0
    return Character.from_weights(
        CompositionAssignment(m).weight(variables, rank) for m in standard_monomials(ideal, target)
    )
