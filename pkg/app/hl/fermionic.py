"""Modified Hall-Littlewood polynomials from the fermionic formula."""

import itertools
import logging
from collections.abc import Iterator, Mapping, Sequence
from fractions import Fraction

from sympy.utilities.iterables import partitions

from app.errors import DomainError, WeightsNotImplementedError
from app.hl.models import FermionicData, HLConfiguration
from app.lie.characters import irreducible_character, weight_set
from app.lie.models import Character, Family, LieAlgebraData, Weight
from app.qseries.functions import qbinom
from app.qseries.models import CharacterQSeries, QPolynomial

logger = logging.getLogger(__name__)


def phi(algebra: LieAlgebraData, i: int, j: int, a: int, b: int) -> Fraction:
    """Phi_ab^ij = 2 (alpha_i, alpha_j) / (alpha_i^2 alpha_j^2) * min(a alpha_i^2, b alpha_j^2).

    Args:
        algebra: Root data
        i: 1-based simple-root index
        j: 1-based simple-root index
        a: Positive integer
        b: Positive integer

    Raises:
        DomainError: If an index is out of range or a, b < 1
    """
    if not (1 <= i <= algebra.rank and 1 <= j <= algebra.rank):
        raise DomainError(f"Root indices ({i}, {j}) out of range for {algebra.name}")
    if a < 1 or b < 1:
        raise DomainError(f"Phi needs a, b >= 1, got ({a}, {b})")
    ni, nj = algebra.root_norms[i - 1], algebra.root_norms[j - 1]
    ai, aj = algebra.simple_roots[i - 1], algebra.simple_roots[j - 1]
    return 2 * algebra.inner_eps(ai, aj) / (ni * nj) * min(a * ni, b * nj)


def _partitions(n: int) -> Iterator[dict[int, int]]:
    if n == 0:
        yield {}
        return
    for p in partitions(n):
        # sympy reuses the yielded dict
        yield dict(p)


def configurations(
    algebra: LieAlgebraData, root_coefficients: Sequence[int]
) -> Iterator[HLConfiguration]:
    """All configurations with sum_a a * m_a^(i) equal to the given root coefficients."""
    if len(root_coefficients) != algebra.rank:
        raise DomainError(
            f"Expected {algebra.rank} root coefficients, got {len(root_coefficients)}"
        )
    if any(c < 0 for c in root_coefficients):
        return
    per_root = [list(_partitions(int(c))) for c in root_coefficients]
    for choice in itertools.product(*per_root):
        yield HLConfiguration.from_partitions(choice)


def vacancy(
    algebra: LieAlgebraData, mu_big: Weight, config: HLConfiguration, i: int, a: int
) -> int:
    """P_a^(i) = (mu_big, alpha_i^vee) - sum_{j,b} Phi_ab^ij m_b^(j), i 1-based."""
    value = Fraction(mu_big.dynkin[i - 1])
    for j, b, m in config.terms():
        value -= phi(algebra, i, j + 1, a, b) * m
    if value.denominator != 1:
        raise ArithmeticError(f"Non-integral vacancy number {value} at (i={i}, a={a})")
    return int(value)


def cocharge(algebra: LieAlgebraData, config: HLConfiguration) -> int:
    """1/2 sum m_a^(i) Phi_ab^ij m_b^(j).

    Raises:
        ArithmeticError: If the value is not a nonnegative integer
    """
    total = Fraction(0)
    terms = list(config.terms())
    for i, a, mi in terms:
        for j, b, mj in terms:
            total += mi * phi(algebra, i + 1, j + 1, a, b) * mj
    value = total / 2
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(
            f"Cocharge {value} of configuration {config.to_records()} on {algebra.name} "
            f"is not a nonnegative integer"
        )
    return int(value)


def _require_dominant(algebra: LieAlgebraData, weight: Weight) -> None:
    if weight.rank != algebra.rank:
        raise DomainError(f"Weight {weight} does not have rank {algebra.rank}")
    if not weight.is_dominant():
        raise DomainError(f"Weight {weight} is not dominant")


def _root_coefficients(
    algebra: LieAlgebraData, lam_small: Weight, mu_big: Weight
) -> tuple[int, ...] | None:
    coords = algebra.root_coordinates(mu_big - lam_small)
    if any(c < 0 or c.denominator != 1 for c in coords):
        return None
    return tuple(int(c) for c in coords)


def require_supported_pattern(algebra: LieAlgebraData, lam: Weight) -> None:
    """Reject B_n weights that use fundamentals other than Lambda_1 and Lambda_n.

    Raises:
        WeightsNotImplementedError: For such weights
    """
    if algebra.family != Family.B:
        return
    inner = [i + 1 for i, m in enumerate(lam.dynkin) if m and i + 1 not in (1, algebra.rank)]
    if inner:
        raise WeightsNotImplementedError(
            f"Weights not implemented for this fundamental: {algebra.name}, Lambda_{inner[0]}"
        )


def fermionic_terms(
    algebra: LieAlgebraData, lam_small: Weight, mu_big: Weight
) -> Iterator[FermionicData]:
    """Per-configuration data for M_{lam_small, mu_big}(q)."""
    _require_dominant(algebra, lam_small)
    _require_dominant(algebra, mu_big)
    coefficients = _root_coefficients(algebra, lam_small, mu_big)
    if coefficients is None:
        return
    for config in configurations(algebra, coefficients):
        top = config.max_part()
        vacancies = {
            (i, a): vacancy(algebra, mu_big, config, i, a)
            for i in range(1, algebra.rank + 1)
            for a in range(1, top + 1)
        }
        c = cocharge(algebra, config)
        poly = QPolynomial.monomial(c)
        for (i, a), p in vacancies.items():
            poly = poly * qbinom(p + config.get(i - 1, a), config.get(i - 1, a))
        yield FermionicData(config, vacancies, c, poly)


def fermionic_poly(algebra: LieAlgebraData, lam_small: Weight, mu_big: Weight) -> QPolynomial:
    """The polynomial M_{lam_small, mu_big}(q).

    Sums q^cocharge * prod qbinom(P_a^(i) + m_a^(i), m_a^(i)) over configurations whose
    root totals equal mu_big - lam_small; negative vacancies give zero factors.
    Zero when mu_big - lam_small is not a nonnegative integral root combination.

    Raises:
        DomainError: If either weight is not dominant
    """
    total = QPolynomial.zero()
    for term in fermionic_terms(algebra, lam_small, mu_big):
        total = total + term.contribution
    return total


def modified_hl(algebra: LieAlgebraData, lam: Weight) -> dict[Weight, QPolynomial]:
    """Map mu -> M_{mu, lam}(q) over dominant mu below lam, zero entries omitted.

    Returns:
        Entries sorted lexicographically by Dynkin labels
    """
    _require_dominant(algebra, lam)
    candidates = sorted(w for w in weight_set(algebra, lam) if w.is_dominant())
    result = {}
    for mu in candidates:
        poly = fermionic_poly(algebra, mu, lam)
        if poly:
            result[mu] = poly
    logger.debug(f"Modified Hall-Littlewood at {lam} on {algebra.name}: {len(result)} terms")
    return result


def assemble(
    algebra: LieAlgebraData, hl_map: Mapping[Weight, QPolynomial], order: int
) -> CharacterQSeries:
    """sum_mu M_{mu, lam}(q) chi_mu as a character-valued series through q^order."""
    total = CharacterQSeries.zero(order)
    for mu, poly in sorted(hl_map.items()):
        total = total + CharacterQSeries.from_character(
            irreducible_character(algebra, mu), poly.to_series(order), order
        )
    return total


def at_q_one(algebra: LieAlgebraData, hl_map: Mapping[Weight, QPolynomial]) -> Character:
    """The q = 1 specialization sum_mu M_{mu, lam}(1) chi_mu."""
    total = Character()
    for mu, poly in hl_map.items():
        total = total + irreducible_character(algebra, mu) * poly.at_one()
    return total
