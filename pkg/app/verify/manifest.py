"""Manifestly positive forms of the affinized Hilbert series.

Each case rewrites the Hilbert series of the affinized flag variety as an
alternating sum of Hilbert series of the affinized polynomial ring on the
fundamentals. The rewrite is only claimed on part of the multidegree range.
"""

import logging
from collections.abc import Sequence
from enum import Enum

from app.affine.hilbert import hilbert_affinized, hilbert_free_affinized
from app.errors import DomainError, IdentityNotClaimedError
from app.fixtures.loader import load_fixture
from app.lie.characters import irreducible_character
from app.lie.models import Character, LieAlgebraData
from app.qseries.functions import inv_poch
from app.qseries.models import CharacterQSeries, QSeries
from app.verify.models import CheckReport, compare_series

logger = logging.getLogger(__name__)


class ManifestCase(str, Enum):
    """Flag varieties with a manifest form."""

    SL3 = "sl3"
    SL4 = "sl4"
    SO5 = "so5"
    SO7 = "so7"


def _sign(m: int) -> int:
    return -1 if m % 2 else 1


def _alternating(m: int, order: int) -> QSeries:
    """(-1)^m q^{m(m-1)/2} / (q)_m."""
    return inv_poch(m, order).shift(m * (m - 1) // 2) * _sign(m)


def _spinor_weight(m: int, order: int) -> QSeries:
    """(-1)^m q^{m(m+1)/2} / ((q)_m (q)_1)."""
    return (inv_poch(m, order) * inv_poch(1, order)).shift(m * (m + 1) // 2) * _sign(m)


class _Free:
    """Affinized free Hilbert series on the fixture fundamentals, memoized by multidegree."""

    def __init__(self, algebra: LieAlgebraData, reps: Sequence[int], order: int) -> None:
        self.algebra = algebra
        self.reps = list(reps)
        self.order = order
        self._cache: dict[tuple[int, ...], CharacterQSeries] = {}

    def __call__(self, *target: int) -> CharacterQSeries:
        if target not in self._cache:
            self._cache[target] = hilbert_free_affinized(
                self.algebra, self.reps, target, self.order
            )
        return self._cache[target]


def _diagonal_sum(
    free: _Free, step: int, head: Sequence[int], moving: Sequence[int]
) -> CharacterQSeries:
    """sum_m alternating(m) h_S(head - step * m * moving)."""
    total = CharacterQSeries.zero(free.order)
    m = 0
    while True:
        target = tuple(h - step * m * d for h, d in zip(head, moving, strict=True))
        if any(t < 0 for t in target):
            return total
        total = total + free(*target).scale(_alternating(m, free.order))
        m += 1


def _spinor_tail(
    free: _Free, head: Sequence[int], moving: Sequence[int], spinor: Character
) -> CharacterQSeries:
    """Correction for one copy of the spinor chi.

    Subtracts sum_m w(m) h_S(head - (2m+1) moving) chi and adds
    sum_m w(m) h_S(head - (2m+2) moving) chi, with w the spinor weight.
    """
    total = CharacterQSeries.zero(free.order)
    for offset, sign in ((1, -1), (2, 1)):
        m = 0
        while True:
            target = tuple(h - (2 * m + offset) * d for h, d in zip(head, moving, strict=True))
            if any(t < 0 for t in target):
                break
            piece = free(*target).scale(_spinor_weight(m, free.order)) * spinor
            total = total + piece if sign > 0 else total - piece
            m += 1
    return total


def _not_claimed(case: ManifestCase, target: Sequence[int]) -> IdentityNotClaimedError:
    return IdentityNotClaimedError(
        f"No manifest form is claimed for {case.value} at M={list(target)}"
    )


def manifest_form(case: ManifestCase, target: Sequence[int], order: int) -> CharacterQSeries:
    """Right-hand side of the manifest form at multidegree M.

    Raises:
        IdentityNotClaimedError: Outside the claimed range
        DomainError: For a negative multidegree or a wrong length
    """
    fixture = load_fixture(case.value)
    algebra = fixture.algebra
    target = tuple(target)
    if len(target) != algebra.rank or any(t < 0 for t in target):
        raise DomainError(f"Multidegree {list(target)} is invalid for {algebra.name}")
    free = _Free(algebra, fixture.reps, order)

    if case == ManifestCase.SL3:
        return _diagonal_sum(free, 1, target, (1, 1))

    if case == ManifestCase.SL4:
        if target[1] != 0:
            raise _not_claimed(case, target)
        return _diagonal_sum(free, 1, target, (1, 0, 1))

    if case == ManifestCase.SO5:
        m1, m2 = target
        if m1 == 0:
            return free(*target)
        if m2 == 0:
            return _diagonal_sum(free, 2, target, (1, 0))
        if m2 == 1:
            spinor = irreducible_character(algebra, algebra.fundamental_weight(2))
            head = _diagonal_sum(free, 2, target, (1, 0))
            return head + _spinor_tail(free, (m1, 0), (1, 0), spinor)
        raise _not_claimed(case, target)

    m1, m2, m3 = target
    if m2 != 0:
        raise _not_claimed(case, target)
    if m3 == 0:
        return _diagonal_sum(free, 2, target, (1, 0, 0))
    if m3 == 1:
        spinor = irreducible_character(algebra, algebra.fundamental_weight(3))
        head = _diagonal_sum(free, 2, target, (1, 0, 0))
        return head + _spinor_tail(free, (m1, 0, 0), (1, 0, 0), spinor)
    if m1 == 0:
        return _diagonal_sum(free, 2, target, (0, 0, 1))
    raise _not_claimed(case, target)


def check_manifest(case: ManifestCase | str, target: Sequence[int], order: int) -> CheckReport:
    """Hilbert series of the quadratic model against its manifest form.

    Raises:
        IdentityNotClaimedError: Outside the claimed range
    """
    case = ManifestCase(case)
    rhs = manifest_form(case, target, order)
    model = load_fixture(case.value).model()
    lhs = hilbert_affinized(model, target, order)
    logger.debug(f"Manifest {case.value} at M={list(target)}: {len(lhs.terms)} weights")
    return compare_series("manifest", {"case": case.value, "M": list(target)}, lhs, rhs)
