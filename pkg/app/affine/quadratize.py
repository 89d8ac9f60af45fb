"""Auxiliary-variable quadratization of monomial ideals."""

import logging
from collections.abc import Mapping, Sequence

from app.affine.models import QuadraticModel
from app.errors import DomainError, ModelError, QuadratizationError
from app.groebner.buchberger import buchberger, lt_ideal
from app.groebner.models import (
    Exponents,
    GradedVariable,
    MonomialIdeal,
    MonomialOrder,
    Polynomial,
    PolynomialRing,
)
from app.lie.models import Weight

logger = logging.getLogger(__name__)

Substitution = tuple[str, dict[str, int]]

DEFAULT_MAX_AUX = 16


def _expand(
    monomial: Mapping[str, int], definitions: Mapping[str, dict[str, int]]
) -> dict[str, int]:
    """Rewrite a monomial in the original variables by unfolding earlier auxiliaries."""
    out: dict[str, int] = {}
    for name, power in monomial.items():
        parts = definitions.get(name, {name: 1})
        for base, p in parts.items():
            out[base] = out.get(base, 0) + p * power
    return out


def _adjoin(
    ring: PolynomialRing, substitutions: Sequence[Substitution]
) -> tuple[PolynomialRing, list[GradedVariable]]:
    """Extend a ring by one graded variable per substitution."""
    extended = ring
    added = []
    for name, monomial in substitutions:
        if sum(monomial.values()) < 2 or any(p < 0 for p in monomial.values()):
            raise DomainError(f"Substitution {name} must be a monomial of degree >= 2")
        exps = extended.monomial(monomial)
        weight = extended.weight(exps)
        var = GradedVariable(
            name,
            extended.multidegree(exps),
            weight if weight is not None else Weight.zero(0),
        )
        extended = extended.extend([var])
        added.append(var)
    return extended, added


def lt_with_substitutions(
    ideal: MonomialIdeal,
    order: MonomialOrder,
    substitutions: Sequence[Substitution],
    max_pairs: int | None = None,
) -> tuple[MonomialIdeal, MonomialOrder]:
    """Leading-term ideal of <ideal, t_k - monomial_k> in the extended ring.

    Auxiliary variables rank below every original variable, in introduction order.
    """
    ring, added = _adjoin(ideal.ring, substitutions)
    extended_order = order.extend(ring, [v.name for v in added])
    pad = (0,) * len(added)

    generators = [Polynomial.from_monomial(ring, g + pad) for g in ideal.sorted_generators(order)]
    for var, (_, monomial) in zip(added, substitutions, strict=True):
        product = Polynomial.from_monomial(ring, ring.monomial(monomial))
        aux = Polynomial.from_monomial(ring, ring.monomial({var.name: 1}))
        generators.append(product - aux)

    gb = buchberger(generators, extended_order, max_pairs=max_pairs)
    return lt_ideal(gb, extended_order), extended_order


def _to_model(
    lt: MonomialIdeal, substitutions: Sequence[Substitution], original: int
) -> QuadraticModel:
    ring = lt.ring
    pairs = []
    for g in lt.generators:
        support = [k for k, e in enumerate(g) for _ in range(e)]
        pairs.append((support[0], support[1]))

    definitions: dict[str, dict[str, int]] = {}
    aux = []
    for k, (name, monomial) in enumerate(substitutions):
        expanded = _expand(monomial, definitions)
        definitions[name] = expanded
        aux.append((original + k, tuple(expanded.items())))
    return QuadraticModel(ring.variables, frozenset(pairs), tuple(aux))


def _non_quadratic(lt: MonomialIdeal, order: MonomialOrder) -> list[Exponents]:
    return [g for g in lt.sorted_generators(order) if sum(g) != 2]


def _greedy_round(
    lt: MonomialIdeal,
    order: MonomialOrder,
    substitutions: list[Substitution],
    definitions: dict[str, dict[str, int]],
) -> list[Substitution]:
    """Factor the two largest variables out of every generator of degree > 2."""
    ring = lt.ring
    known = {tuple(sorted(d.items())): name for name, d in definitions.items()}
    fresh: list[Substitution] = []
    for g in _non_quadratic(lt, order):
        if sum(g) < 2:
            continue
        factors = []
        for name in order.variable_sequence:
            factors.extend([name] * g[ring.index(name)])
        head: dict[str, int] = {}
        for name in factors[:2]:
            head[name] = head.get(name, 0) + 1
        expanded = tuple(sorted(_expand(head, definitions).items()))
        if expanded in known:
            continue
        name = f"t{len(substitutions) + len(fresh) + 1}"
        known[expanded] = name
        definitions[name] = dict(expanded)
        fresh.append((name, head))
    return fresh


def quadratize(
    ideal: MonomialIdeal,
    order: MonomialOrder,
    substitutions: Sequence[tuple[str, Mapping[str, int]]] | None = None,
    max_aux: int = DEFAULT_MAX_AUX,
    max_pairs: int | None = None,
) -> QuadraticModel:
    """Turn a monomial ideal into a quadratic monomial model.

    With explicit substitutions the extended leading-term ideal is computed once.
    Without them auxiliary variables t1, t2, ... are introduced greedily: each
    generator of degree > 2 has its two largest variables replaced by a new
    variable, and the leading-term ideal is recomputed until it is quadratic.

    Args:
        ideal: Monomial ideal over graded variables
        order: Lex order on the ideal's ring
        substitutions: Optional (name, monomial) definitions of auxiliary variables
        max_aux: Bound on greedily introduced auxiliary variables
        max_pairs: Bound on the Buchberger pair queue

    Returns:
        Model over the original variables followed by the auxiliary ones

    Raises:
        QuadratizationError: If the result is not quadratic (carries the partial state)
    """
    original = ideal.ring.nvars
    explicit = substitutions is not None
    current: list[Substitution] = [(n, dict(m)) for n, m in (substitutions or [])]
    definitions: dict[str, dict[str, int]] = {}
    for name, monomial in current:
        definitions[name] = _expand(monomial, definitions)

    while True:
        lt, extended_order = lt_with_substitutions(ideal, order, current, max_pairs)
        remaining = _non_quadratic(lt, extended_order)
        logger.info(
            f"Quadratization with {len(current)} auxiliary variables: "
            f"{len(lt)} generators, {len(remaining)} not quadratic"
        )
        if not remaining:
            try:
                return _to_model(lt, current, original)
            except ModelError as e:
                raise _failure(str(e), lt, current) from e
        if explicit:
            raise _failure(
                "quadratization failed: substitutions leave non-quadratic generators", lt, current
            )
        fresh = _greedy_round(lt, extended_order, current, definitions)
        if not fresh or len(current) + len(fresh) > max_aux:
            raise _failure(
                f"quadratization failed within {max_aux} auxiliary variables", lt, current
            )
        current.extend(fresh)


def _failure(
    message: str, lt: MonomialIdeal, substitutions: Sequence[Substitution]
) -> QuadratizationError:
    remaining = [lt.ring.monomial_names(g) for g in lt.generators if sum(g) != 2]
    return QuadratizationError(
        message,
        substitutions=[(n, dict(m)) for n, m in substitutions],
        remaining=sorted(remaining, key=lambda m: sorted(m.items())),
    )


def chain_ideal(n: int) -> tuple[MonomialIdeal, MonomialOrder]:
    """The ideal <x1 x2 ... xn> over weightless variables with unit multidegrees."""
    if n < 2:
        raise DomainError(f"Chain ideal needs n >= 2, got {n}")
    variables = tuple(
        GradedVariable(f"x{i + 1}", tuple(1 if k == i else 0 for k in range(n)), Weight.zero(0))
        for i in range(n)
    )
    ring = PolynomialRing(variables)
    ideal = MonomialIdeal(ring, frozenset([(1,) * n]))
    return ideal, MonomialOrder.natural(ring)


def chain_substitutions(n: int) -> list[Substitution]:
    """Auxiliary chain t_k = t_{k-1} x_{k+1}, t_1 = x_1 x_2, for k = 1 .. n-2."""
    subs: list[Substitution] = []
    for k in range(1, n - 1):
        previous = {"x1": 1, "x2": 1} if k == 1 else {f"t{k - 1}": 1, f"x{k + 1}": 1}
        subs.append((f"t{k}", previous))
    return subs
