"""Construction of root data and fundamental-representation weights."""

import itertools
import logging
import re
from fractions import Fraction
from functools import lru_cache
from math import comb

from app.errors import ConfigurationError, WeightsNotImplementedError
from app.lie.models import Family, LieAlgebraData, Vector, Weight

logger = logging.getLogger(__name__)

_NAME_PATTERN = re.compile(r"^(sl|so)(\d+)$")


def _unit(n: int, k: int, scale: Fraction = Fraction(1)) -> list[Fraction]:
    v = [Fraction(0)] * n
    v[k] = scale
    return v


def _type_a(rank: int) -> tuple[list[Vector], list[Vector], list[Vector], list[int]]:
    n = rank + 1
    simple = []
    for i in range(rank):
        v = _unit(n, i)
        v[i + 1] = Fraction(-1)
        simple.append(tuple(v))
    fundamental = []
    for i in range(1, rank + 1):
        shift = Fraction(i, n)
        fundamental.append(tuple((Fraction(1) if k < i else Fraction(0)) - shift for k in range(n)))
    positive = []
    for i, j in itertools.combinations(range(n), 2):
        v = _unit(n, i)
        v[j] = Fraction(-1)
        positive.append(tuple(v))
    dims = [comb(n, i) for i in range(1, rank + 1)]
    return simple, fundamental, positive, dims


def _type_b(rank: int) -> tuple[list[Vector], list[Vector], list[Vector], list[int]]:
    n = rank
    simple = []
    for i in range(n - 1):
        v = _unit(n, i)
        v[i + 1] = Fraction(-1)
        simple.append(tuple(v))
    simple.append(tuple(_unit(n, n - 1)))
    fundamental = []
    for i in range(1, n):
        fundamental.append(tuple(Fraction(1) if k < i else Fraction(0) for k in range(n)))
    fundamental.append(tuple(Fraction(1, 2) for _ in range(n)))
    positive = []
    for i, j in itertools.combinations(range(n), 2):
        for sign in (-1, 1):
            v = _unit(n, i)
            v[j] = Fraction(sign)
            positive.append(tuple(v))
    positive.extend(tuple(_unit(n, i)) for i in range(n))
    dims = [comb(2 * n + 1, i) for i in range(1, n)] + [2**n]
    return simple, fundamental, positive, dims


@lru_cache(maxsize=None)
def build_algebra(family: Family | str, rank: int) -> LieAlgebraData:
    """Build the root data of A_rank or B_rank.

    Args:
        family: Cartan family, "A" or "B"
        rank: Rank of the algebra

    Returns:
        Fully populated LieAlgebraData

    Raises:
        ConfigurationError: If the family or rank is not supported
    """
    try:
        family = Family(family)
    except ValueError as e:
        raise ConfigurationError(f"Unsupported Lie algebra family: {family}") from e
    if rank < 1 or (family == Family.B and rank < 2):
        raise ConfigurationError(f"Unsupported rank {rank} for family {family.value}")

    if family == Family.A:
        simple, fundamental, positive, dims = _type_a(rank)
    else:
        simple, fundamental, positive, dims = _type_b(rank)

    # Partially built instance gives access to inner_eps before the Cartan data exists.
    skeleton = LieAlgebraData(
        family=family,
        rank=rank,
        simple_roots=tuple(simple),
        fundamental_weights=tuple(fundamental),
        cartan_matrix=(),
        root_norms=(),
        positive_roots=tuple(positive),
        fund_rep_dims=tuple(dims),
        gram=(),
    )
    norms = tuple(skeleton.inner_eps(a, a) for a in simple)
    cartan = tuple(
        tuple(int(2 * skeleton.inner_eps(ai, aj) / norms[j]) for j, aj in enumerate(simple))
        for ai in simple
    )
    gram = tuple(tuple(skeleton.inner_eps(li, lj) for lj in fundamental) for li in fundamental)

    algebra = LieAlgebraData(
        family=family,
        rank=rank,
        simple_roots=tuple(simple),
        fundamental_weights=tuple(fundamental),
        cartan_matrix=cartan,
        root_norms=norms,
        positive_roots=tuple(positive),
        fund_rep_dims=tuple(dims),
        gram=gram,
    )
    logger.debug(f"Built {algebra.name} with {algebra.num_positive_roots} positive roots")
    return algebra


def algebra_from_name(name: str) -> LieAlgebraData:
    """Build an algebra from a name such as "sl3" or "so5".

    Raises:
        ConfigurationError: If the name is not sl_n (n >= 2) or so_{2n+1} (n >= 2)
    """
    match = _NAME_PATTERN.match(name.strip().lower())
    if not match:
        raise ConfigurationError(f"Unknown algebra '{name}'. Expected slN or soN")
    kind, size = match.group(1), int(match.group(2))
    if kind == "sl":
        return build_algebra(Family.A, size - 1)
    if size % 2 == 0:
        raise ConfigurationError(f"Only odd orthogonal algebras are supported, got '{name}'")
    return build_algebra(Family.B, (size - 1) // 2)


def _spinor_key(signs: str) -> tuple[int, str]:
    return signs.count("m"), signs.replace("p", "0").replace("m", "1")


def rep_weights(algebra: LieAlgebraData, i: int) -> list[tuple[str, Weight]]:
    """Coordinate labels and weights of the fundamental representation L(Lambda_i).

    Args:
        algebra: Root data
        i: 1-based fundamental index

    Returns:
        Ordered list of (label, weight)

    Raises:
        WeightsNotImplementedError: For B_n fundamentals other than 1 and n
    """
    if not 1 <= i <= algebra.rank:
        raise WeightsNotImplementedError(f"No fundamental representation {i} for {algebra.name}")
    n = algebra.ambient_dim
    out: list[tuple[str, Weight]] = []

    if algebra.family == Family.A:
        for subset in itertools.combinations(range(n), i):
            v = [Fraction(0)] * n
            for k in subset:
                v[k] = Fraction(1)
            label = "x" + "".join(str(k + 1) for k in subset)
            out.append((label, algebra.to_dynkin(tuple(v))))
        return out

    if i == 1:
        for k in range(n):
            out.append((f"x{k + 1}", algebra.to_dynkin(tuple(_unit(n, k)))))
        out.append(("x0", Weight.zero(algebra.rank)))
        for k in reversed(range(n)):
            out.append((f"x{k + 1}b", algebra.to_dynkin(tuple(_unit(n, k, Fraction(-1))))))
        return out

    if i == n:
        strings = sorted(("".join(s) for s in itertools.product("pm", repeat=n)), key=_spinor_key)
        for signs in strings:
            v = tuple(Fraction(1, 2) if s == "p" else Fraction(-1, 2) for s in signs)
            out.append((f"x{signs}", algebra.to_dynkin(v)))
        return out

    raise WeightsNotImplementedError(
        f"Weights not implemented for this fundamental: {algebra.name}, Lambda_{i}"
    )
