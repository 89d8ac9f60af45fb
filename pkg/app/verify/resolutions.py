"""Euler-Poincare checks against finite free resolutions, and the resolution-shape conjecture."""

import logging
from collections import Counter
from collections.abc import Sequence
from math import comb

from app.affine.hilbert import hilbert_free_finite
from app.errors import DomainError, FixtureError
from app.fixtures.loader import Fixture, load_fixture
from app.lie.algebra import build_algebra
from app.lie.characters import irreducible_character, weyl_dim
from app.lie.models import Character, Family, LieAlgebraData, Weight
from app.verify.models import (
    CheckReport,
    CheckStatus,
    ResolutionData,
    ResolutionTerm,
    Witness,
    compare_characters,
    compare_values,
)

logger = logging.getLogger(__name__)

RESOLUTION_CASES = ("sl3", "sl4", "so5")


def resolution_from_fixture(fixture: Fixture) -> ResolutionData:
    """Resolution stored with a fixture.

    Raises:
        FixtureError: If the fixture carries no resolution
    """
    spec = fixture.spec.resolution
    if spec is None:
        raise FixtureError(f"Fixture '{fixture.name}' has no resolution")
    terms = tuple(
        ResolutionTerm(t.degree, tuple(t.shift), Weight(tuple(t.module))) for t in spec.terms
    )
    try:
        return ResolutionData(terms, spec.length)
    except DomainError as e:
        raise FixtureError(f"Fixture '{fixture.name}': {e}") from e


def euler_poincare_finite(
    resolution: ResolutionData,
    algebra: LieAlgebraData,
    reps: Sequence[int],
    target: Sequence[int],
) -> Character:
    """sum_j (-1)^j sum_{F^(j)} ch S_{M + shift} * ch L(module)."""
    total = Character()
    for term in resolution.terms:
        degree = [m + a for m, a in zip(target, term.shift, strict=True)]
        piece = hilbert_free_finite(algebra, reps, degree)
        if not piece:
            continue
        contribution = piece * term.character(algebra)
        total = total - contribution if term.degree % 2 else total + contribution
    return total


def _resolution_fixture(case: str) -> tuple[Fixture, ResolutionData]:
    if case not in RESOLUTION_CASES:
        raise DomainError(f"No resolution for '{case}'; expected one of {list(RESOLUTION_CASES)}")
    fixture = load_fixture(case)
    return fixture, resolution_from_fixture(fixture)


def check_euler_poincare(case: str, target: Sequence[int]) -> CheckReport:
    """The alternating sum over the resolution equals ch L(sum M_i Lambda_i).

    Raises:
        DomainError: For an unknown case or a negative multidegree
    """
    if any(m < 0 for m in target):
        raise DomainError(f"Multidegree must be componentwise >= 0, got {list(target)}")
    fixture, resolution = _resolution_fixture(case)
    algebra = fixture.algebra
    lhs = euler_poincare_finite(resolution, algebra, fixture.reps, target)
    rhs = irreducible_character(algebra, algebra.highest_weight(target))
    return compare_characters("ep", {"case": case, "M": list(target)}, lhs, rhs)


def dim_243(m1: int, m2: int) -> int:
    """Dimension of L(M1 Lambda_1 + M2 Lambda_2) for so5 as a signed sum of binomial products."""
    return (
        comb(m1 + 4, 4) * comb(m2 + 3, 3)
        - 4 * comb(m1 + 3, 4) * comb(m2 + 2, 3)
        - comb(m1 + 2, 4) * comb(m2 + 3, 3)
        + comb(m1 + 3, 4) * comb(m2 + 1, 3)
        + 4 * comb(m1 + 2, 4) * comb(m2 + 2, 3)
        - comb(m1 + 1, 4) * comb(m2 + 1, 3)
    )


def check_dim_243(m1: int, m2: int) -> CheckReport:
    """Binomial dimension formula for so5 against the Weyl dimension formula.

    Raises:
        DomainError: If M1 or M2 is negative
    """
    if m1 < 0 or m2 < 0:
        raise DomainError(f"M1, M2 must be >= 0, got ({m1}, {m2})")
    so5 = build_algebra(Family.B, 2)
    rhs = weyl_dim(so5, Weight((m1, m2)))
    return compare_values("dim243", {"M1": m1, "M2": m2}, dim_243(m1, m2), rhs, "dimension")


def _pairing_key(
    algebra: LieAlgebraData, term: ResolutionTerm
) -> tuple[int, tuple[int, ...], tuple]:
    return term.degree, term.shift, term.character(algebra).key()


def _partner_key(
    algebra: LieAlgebraData, term: ResolutionTerm, dims: Sequence[int], length: int
) -> tuple[int, tuple[int, ...], tuple]:
    shift = tuple(2 - d - a for d, a in zip(dims, term.shift, strict=True))
    return length - term.degree, shift, term.character(algebra).dual().key()


def check_conjecture_21(
    resolution: ResolutionData,
    algebra: LieAlgebraData,
    reps: Sequence[int],
    case: str | None = None,
) -> CheckReport:
    """Length and self-duality of a complete-flag resolution.

    (i) sum of the dimensions of the fundamentals in use equals
    #positive roots + rank + resolution length.
    (ii) the terms pair up: (j, a, V) with (length - j, 2 - D - a, V*), D the
    vector of fundamental dimensions.
    """
    label = case or algebra.name
    params = {"case": label}
    dims = [
        algebra.fund_rep_dims[i - 1] if i in reps else 0
        for i in range(1, algebra.rank + 1)
    ]
    lhs = sum(dims)
    rhs = algebra.num_positive_roots + algebra.rank + resolution.length
    if lhs != rhs:
        return compare_values("conj21", params, lhs, rhs, "length")

    terms = Counter(_pairing_key(algebra, t) for t in resolution.terms)
    partners = Counter(_partner_key(algebra, t, dims, resolution.length) for t in resolution.terms)
    for key in sorted(set(terms) | set(partners)):
        if terms[key] != partners[key]:
            degree, shift, _ = key
            logger.info(f"{label}: unpaired resolution term in degree {degree}, shift {shift}")
            return CheckReport(
                check="conj21",
                params=params,
                status=CheckStatus.FAIL,
                witness=Witness(lhs=terms[key], rhs=partners[key], label="pairing"),
                detail=f"degree {degree}, shift {list(shift)}",
            )
    return CheckReport(check="conj21", params=params, status=CheckStatus.PASS)


def check_conjecture_21_case(case: str) -> CheckReport:
    """check_conjecture_21 on a fixture resolution (sl3, sl4 or so5)."""
    fixture, resolution = _resolution_fixture(case)
    return check_conjecture_21(resolution, fixture.algebra, fixture.reps, case)
