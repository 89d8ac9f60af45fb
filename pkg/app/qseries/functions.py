"""q-Pochhammer symbols, their truncated inverses and Gaussian binomials."""

from functools import lru_cache

from app.errors import DomainError
from app.qseries.models import QPolynomial, QSeries


@lru_cache(maxsize=None)
def poch(m: int) -> QPolynomial:
    """(q)_m = prod_{k=1..m} (1 - q^k)."""
    if m < 0:
        raise DomainError(f"(q)_m requires m >= 0, got {m}")
    result = QPolynomial.one()
    for k in range(1, m + 1):
        result = result * (QPolynomial.one() - QPolynomial.monomial(k))
    return result


@lru_cache(maxsize=None)
def inv_poch(m: int, order: int) -> QSeries:
    """1/(q)_m through q^order.

    Coefficient k counts partitions of k into parts of size at most m.
    """
    if m < 0 or order < 0:
        raise DomainError(f"inv_poch requires m, N >= 0, got ({m}, {order})")
    coeffs = [1] + [0] * order
    for k in range(1, m + 1):
        for i in range(k, order + 1):
            coeffs[i] += coeffs[i - k]
    return QSeries(tuple(coeffs), order)


@lru_cache(maxsize=None)
def qbinom(top: int, bottom: int) -> QPolynomial:
    """Gaussian binomial [top, bottom]_q.

    Total function: zero whenever bottom < 0 or top < bottom.
    """
    if bottom < 0 or top < bottom:
        return QPolynomial.zero()
    if bottom == 0 or bottom == top:
        return QPolynomial.one()
    return qbinom(top - 1, bottom - 1) + qbinom(top - 1, bottom).shift(bottom)
