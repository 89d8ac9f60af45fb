"""Scalar q-series identities and the chain quadratization."""

import itertools
import logging
from collections.abc import Sequence

from app.affine.hilbert import hilbert_affinized
from app.affine.quadratize import chain_ideal, chain_substitutions, quadratize
from app.errors import DomainError
from app.lie.models import Character
from app.qseries.functions import inv_poch
from app.qseries.models import CharacterQSeries, QSeries
from app.verify.models import CheckReport, CheckStatus, Witness, compare_series

logger = logging.getLogger(__name__)


def _require_nonnegative(values: Sequence[int]) -> None:
    if any(v < 0 for v in values):
        raise DomainError(f"Multiplicities must be >= 0, got {list(values)}")


def _scalar(series: QSeries) -> CharacterQSeries:
    return CharacterQSeries.from_character(Character.trivial(0), series, series.order)


def compare_scalar(
    check: str, params: dict[str, object], lhs: QSeries, rhs: QSeries
) -> CheckReport:
    """Report equality of two scalar series; the witness carries no weight."""
    k = lhs.first_mismatch(rhs)
    if k is None:
        return CheckReport(check=check, params=params, order=lhs.order, status=CheckStatus.PASS)
    return CheckReport(
        check=check,
        params=params,
        order=lhs.order,
        status=CheckStatus.FAIL,
        witness=Witness(power=k, lhs=lhs.coeffs[k], rhs=rhs.coeffs[k]),
    )


def _sign(m: int) -> int:
    return -1 if m % 2 else 1


def check_identity_35(m1: int, m2: int, order: int) -> CheckReport:
    """q^{M1 M2}/((q)_{M1}(q)_{M2}) as an alternating sum over the common part m.

    Raises:
        DomainError: If M1 or M2 is negative
    """
    _require_nonnegative([m1, m2])
    lhs = (inv_poch(m1, order) * inv_poch(m2, order)).shift(m1 * m2)
    rhs = QSeries.zero(order)
    for m in range(min(m1, m2) + 1):
        term = inv_poch(m, order) * inv_poch(m1 - m, order) * inv_poch(m2 - m, order)
        rhs = rhs + term.shift(m * (m - 1) // 2) * _sign(m)
    return compare_scalar("id35", {"M1": m1, "M2": m2}, lhs, rhs)


def check_identity_36(m1: int, m2: int, order: int) -> CheckReport:
    """1/((q)_{M1}(q)_{M2}) as a positive sum weighted by q^{(M1-m)(M2-m)}.

    Raises:
        DomainError: If M1 or M2 is negative
    """
    _require_nonnegative([m1, m2])
    lhs = inv_poch(m1, order) * inv_poch(m2, order)
    rhs = QSeries.zero(order)
    for m in range(min(m1, m2) + 1):
        term = inv_poch(m, order) * inv_poch(m1 - m, order) * inv_poch(m2 - m, order)
        rhs = rhs + term.shift((m1 - m) * (m2 - m))
    return compare_scalar("id36", {"M1": m1, "M2": m2}, lhs, rhs)


def _removed(multiplicities: Sequence[int], aux: Sequence[int]) -> list[int]:
    """How much each x_i loses to the auxiliary chain variables t_1 .. t_{n-2}.

    t_k covers x_1 .. x_{k+1}, so x_1 and x_2 lose the full sum and x_i loses
    m_{i-1} + ... + m_{n-2} for i >= 3.
    """
    n = len(multiplicities)
    tails = [sum(aux[k:]) for k in range(len(aux) + 1)]
    return [tails[0], tails[0]] + [tails[i - 2] for i in range(3, n + 1)]


def chain_multisum(multiplicities: Sequence[int], order: int) -> QSeries:
    """Hilbert series of the affinized chain model, summed over the auxiliary multiplicities.

    Raises:
        DomainError: If fewer than two multiplicities are given or one is negative
    """
    target = list(multiplicities)
    if len(target) < 2:
        raise DomainError(f"The chain needs at least two multiplicities, got {target}")
    _require_nonnegative(target)
    n = len(target)
    total = QSeries.zero(order)
    for aux in itertools.product(range(min(target) + 1), repeat=n - 2):
        removed = _removed(target, aux)
        rest = [a - b for a, b in zip(target, removed, strict=True)]
        if any(r < 0 for r in rest):
            continue
        power = rest[0] * rest[1] + sum(
            aux[k] * rest[k + 2] for k in range(n - 2)
        )
        if power > order:
            continue
        term = QSeries.one(order)
        for k in itertools.chain(aux, rest):
            if k:
                term = term * inv_poch(k, order)
        total = total + term.shift(power)
    return total


def chain_alternating(multiplicities: Sequence[int], order: int) -> QSeries:
    """sum_m (-1)^m q^{m(m-1)/2} / ((q)_m prod_i (q)_{M_i - m})."""
    target = list(multiplicities)
    _require_nonnegative(target)
    total = QSeries.zero(order)
    for m in range(min(target) + 1):
        term = inv_poch(m, order)
        for a in target:
            term = term * inv_poch(a - m, order)
        total = total + term.shift(m * (m - 1) // 2) * _sign(m)
    return total


def check_identity_313_316(multiplicities: Sequence[int], order: int) -> CheckReport:
    """The chain multisum against the single alternating sum."""
    lhs = chain_multisum(multiplicities, order)
    rhs = chain_alternating(multiplicities, order)
    return compare_scalar("id313", {"M": list(multiplicities)}, lhs, rhs)


def expected_chain_pairs(n: int) -> set[frozenset[str]]:
    """x1 x2 together with t_k x_{k+2} for k = 1 .. n-2."""
    pairs = {frozenset(("x1", "x2"))}
    pairs.update(frozenset((f"t{k}", f"x{k + 2}")) for k in range(1, n - 1))
    return pairs


def check_chain_quadratization(multiplicities: Sequence[int], order: int) -> CheckReport:
    """Quadratize <x1 ... xn> with the chain substitutions and compare Hilbert series.

    The leading-term ideal must be generated by the expected pairs, and the
    Hilbert series of the resulting model must equal the chain multisum.
    """
    target = list(multiplicities)
    n = len(target)
    params = {"n": n, "M": target}
    ideal, monomial_order = chain_ideal(n)
    model = quadratize(ideal, monomial_order, chain_substitutions(n))
    found = {frozenset(p) for p in model.pair_names()}
    expected = expected_chain_pairs(n)
    if found != expected:
        logger.warning(f"Chain model for n={n} has pairs {sorted(map(sorted, found))}")
        return CheckReport(
            check="chain",
            params=params,
            order=order,
            status=CheckStatus.FAIL,
            witness=Witness(lhs=len(found), rhs=len(expected), label="pairs"),
            detail="leading-term pairs differ from the chain pairs",
        )
    lhs = hilbert_affinized(model, target, order)
    rhs = _scalar(chain_multisum(target, order))
    return compare_series("chain", params, lhs, rhs)
