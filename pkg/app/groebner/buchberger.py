"""Buchberger's algorithm over Q(sqrt 2) with lexicographic orders."""

import logging
from collections.abc import Sequence

from app.errors import DomainError, PairQueueOverflowError
from app.groebner.models import (
    CoeffExt,
    Exponents,
    MonomialIdeal,
    MonomialOrder,
    Polynomial,
    divides,
    lcm,
    quotient,
)

logger = logging.getLogger(__name__)

Pair = tuple[int, int]


def lex_compare(order: MonomialOrder, m1: Exponents, m2: Exponents) -> int:
    """Compare two monomials: 1 if m1 > m2, -1 if m1 < m2, 0 if equal.

    Raises:
        DomainError: If either exponent vector does not match the order's ring
    """
    n = order.ring.nvars
    if len(m1) != n or len(m2) != n:
        raise DomainError(f"Exponent vectors must have length {n}, got {len(m1)} and {len(m2)}")
    k1, k2 = order.key(m1), order.key(m2)
    return (k1 > k2) - (k1 < k2)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """S-polynomial of two monic polynomials."""
    lmf, _ = f.leading(order)
    lmg, _ = g.leading(order)
    common = lcm(lmf, lmg)
    return f.mul_term(quotient(common, lmf)) - g.mul_term(quotient(common, lmg))


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Fully reduce f modulo basis (remainder of multivariate division)."""
    leads = [g.leading(order) for g in basis]
    remainder: dict[Exponents, CoeffExt] = {}
    p = f
    while p:
        lm, lc = p.leading(order)
        for g, (lmg, lcg) in zip(basis, leads, strict=True):
            if divides(lmg, lm):
                p = p - g.mul_term(quotient(lm, lmg), lc / lcg)
                break
        else:
            remainder[lm] = lc
            p = Polynomial(p.ring, {m: c for m, c in p.terms.items() if m != lm})
    return Polynomial(f.ring, remainder)


def _select(pairs: set[Pair], lms: list[Exponents], order: MonomialOrder) -> Pair:
    """Normal strategy: the pair with the smallest lcm, ties by index."""
    return min(pairs, key=lambda p: (order.key(lcm(lms[p[0]], lms[p[1]])), p))


def _update(
    basis: list[Polynomial],
    lms: list[Exponents],
    pairs: set[Pair],
    f: Polynomial,
    lmf: Exponents,
    order: MonomialOrder,
) -> set[Pair]:
    """Add f to the basis and update the pair set with the Gebauer-Moeller criteria."""
    kept = {
        (i, j)
        for i, j in pairs
        if not divides(lmf, lcm(lms[i], lms[j]))
        or lcm(lms[i], lms[j]) == lcm(lms[i], lmf)
        or lcm(lms[i], lms[j]) == lcm(lms[j], lmf)
    }

    groups: dict[Exponents, list[int]] = {}
    for i, lmg in enumerate(lms):
        groups.setdefault(lcm(lmg, lmf), []).append(i)
    minimal: list[Exponents] = []
    for common in sorted(groups, key=order.key):
        if all(not divides(other, common) for other in minimal):
            minimal.append(common)

    new_index = len(basis)
    fresh = set()
    for common in minimal:
        # Coprime leading monomials: the S-polynomial reduces to zero.
        coprime = any(
            lcm(lms[i], lmf) == tuple(a + b for a, b in zip(lms[i], lmf, strict=True))
            for i in groups[common]
        )
        if not coprime:
            fresh.add((min(groups[common]), new_index))

    basis.append(f)
    lms.append(lmf)
    return kept | fresh


def minimalize(basis: Sequence[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """Drop elements whose leading monomial is divisible by another's."""
    kept: list[Polynomial] = []
    kept_lms: list[Exponents] = []
    for f in sorted(basis, key=lambda h: order.key(h.leading(order)[0])):
        lm, _ = f.leading(order)
        if all(not divides(g, lm) for g in kept_lms):
            kept.append(f)
            kept_lms.append(lm)
    return kept


def interreduce(basis: Sequence[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """Reduced basis from a minimal one: every element reduced by the others, made monic."""
    reduced = []
    for i, g in enumerate(basis):
        others = [h for k, h in enumerate(basis) if k != i]
        reduced.append(normal_form(g, others, order).monic(order))
    return reduced


def buchberger(
    generators: Sequence[Polynomial],
    order: MonomialOrder,
    max_pairs: int | None = None,
) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by generators.

    Args:
        generators: Nonzero polynomials over a shared ring
        order: Lex order on that ring
        max_pairs: Optional bound on the pair queue

    Returns:
        Reduced basis sorted by leading monomial, largest first

    Raises:
        DomainError: If a generator is zero or rings differ
        PairQueueOverflowError: If the pair queue exceeds max_pairs
    """
    for f in generators:
        if f.ring != order.ring:
            raise DomainError("Generators and order must share the same ring")
        if not f:
            raise DomainError("Generators must be nonzero")

    basis: list[Polynomial] = []
    lms: list[Exponents] = []
    pairs: set[Pair] = set()
    for f in generators:
        g = f.monic(order)
        pairs = _update(basis, lms, pairs, g, g.leading(order)[0], order)

    reductions = 0
    while pairs:
        if max_pairs is not None and len(pairs) > max_pairs:
            raise PairQueueOverflowError(
                f"Pair queue holds {len(pairs)} pairs, more than the bound {max_pairs}"
            )
        i, j = _select(pairs, lms, order)
        pairs.remove((i, j))
        r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        reductions += 1
        if r:
            r = r.monic(order)
            logger.debug(f"New basis element with leading monomial {r.leading(order)[0]}")
            pairs = _update(basis, lms, pairs, r, r.leading(order)[0], order)

    reduced = interreduce(minimalize(basis, order), order)
    reduced.sort(key=lambda h: order.key(h.leading(order)[0]), reverse=True)
    logger.info(
        f"Groebner basis: {len(generators)} generators -> {len(reduced)} elements "
        f"after {reductions} S-pair reductions"
    )
    return reduced


def lt_ideal(gb: Sequence[Polynomial], order: MonomialOrder) -> MonomialIdeal:
    """Minimal generators of the leading-term ideal of a Groebner basis."""
    return MonomialIdeal(order.ring, frozenset(g.leading(order)[0] for g in gb))


def is_groebner_basis(basis: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Whether every S-polynomial of the basis reduces to zero."""
    monic = [g.monic(order) for g in basis]
    for i in range(len(monic)):
        for j in range(i + 1, len(monic)):
            if normal_form(s_polynomial(monic[i], monic[j], order), monic, order):
                return False
    return True
