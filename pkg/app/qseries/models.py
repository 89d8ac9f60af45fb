"""Exact q-polynomials, truncated q-series and character-valued series."""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from app.errors import DomainError, SeriesOrderError
from app.lie.models import Character, Weight


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class QPolynomial:
    """Polynomial in q with integer coefficients, indexed by power."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "QPolynomial":
        if power < 0:
            raise DomainError(f"Negative q-power {power}")
        return cls((0,) * power + (coeff,))

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient (-1 for the zero polynomial)."""
        return len(self.coeffs) - 1

    def coefficient(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def at_one(self) -> int:
        """Specialize q = 1."""
        return sum(self.coeffs)

    def shift(self, k: int) -> "QPolynomial":
        """Multiply by q^k."""
        if not self.coeffs:
            return self
        return QPolynomial((0,) * k + self.coeffs)

    def to_series(self, order: int) -> "QSeries":
        return QSeries(self.coeffs[: order + 1], order)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: "QPolynomial | int") -> "QPolynomial":
        if isinstance(other, int):
            other = QPolynomial((other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(n)))

    __radd__ = __add__

    def __sub__(self, other: "QPolynomial | int") -> "QPolynomial":
        return self + (-other)

    def __mul__(self, other: "QPolynomial | int") -> "QPolynomial":
        if isinstance(other, int):
            return QPolynomial(tuple(c * other for c in self.coeffs))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(tuple(out))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return _format_terms(self.coeffs) or "0"


@dataclass(frozen=True, eq=False)
class QSeries:
    """Power series in q known through q^order."""

    coeffs: tuple[int, ...]
    order: int

    def __post_init__(self) -> None:
        if self.order < 0:
            raise DomainError(f"Series order must be >= 0, got {self.order}")
        padded = [int(c) for c in self.coeffs[: self.order + 1]]
        padded.extend([0] * (self.order + 1 - len(padded)))
        object.__setattr__(self, "coeffs", tuple(padded))

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls((1,), order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff: int = 1) -> "QSeries":
        if power > order:
            return cls.zero(order)
        return cls((0,) * power + (coeff,), order)

    def coefficient(self, power: int) -> int:
        if power > self.order:
            raise SeriesOrderError(f"Coefficient q^{power} beyond series order {self.order}")
        return self.coeffs[power]

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise SeriesOrderError(f"Cannot extend a series of order {self.order} to {order}")
        return QSeries(self.coeffs, order)

    def shift(self, k: int) -> "QSeries":
        """Multiply by q^k."""
        return QSeries((0,) * k + self.coeffs, self.order)

    def at_one(self) -> int:
        raise DomainError("q=1 evaluation needs an exact polynomial, not a truncated series")

    def first_mismatch(self, other: "QSeries") -> int | None:
        """Lowest power where the two series differ, or None."""
        self._check_order(other)
        for k, (a, b) in enumerate(zip(self.coeffs, other.coeffs, strict=True)):
            if a != b:
                return k
        return None

    def _check_order(self, other: "QSeries") -> None:
        if other.order != self.order:
            raise SeriesOrderError(
                f"Series orders differ: {self.order} vs {other.order}; truncate explicitly"
            )

    def _coerce(self, other: "QSeries | QPolynomial | int") -> "QSeries":
        if isinstance(other, QSeries):
            return other
        if isinstance(other, QPolynomial):
            return other.to_series(self.order)
        if isinstance(other, int):
            return QSeries((other,), self.order)
        raise TypeError(f"Cannot combine QSeries with {type(other).__name__}")

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check_order(other)
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def __neg__(self) -> "QSeries":
        return QSeries(tuple(-c for c in self.coeffs), self.order)

    def __add__(self, other: "QSeries | QPolynomial | int") -> "QSeries":
        rhs = self._coerce(other)
        order = min(self.order, rhs.order)
        return QSeries(tuple(a + b for a, b in zip(self.coeffs[: order + 1], rhs.coeffs)), order)

    __radd__ = __add__

    def __sub__(self, other: "QSeries | QPolynomial | int") -> "QSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other: "QPolynomial | int") -> "QSeries":
        return (-self) + other

    def __mul__(self, other: "QSeries | QPolynomial | int") -> "QSeries":
        if isinstance(other, int):
            return QSeries(tuple(c * other for c in self.coeffs), self.order)
        rhs = self._coerce(other)
        order = min(self.order, rhs.order)
        out = [0] * (order + 1)
        for i in range(order + 1):
            a = self.coeffs[i]
            if a:
                for j in range(order + 1 - i):
                    b = rhs.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return QSeries(tuple(out), order)

    __rmul__ = __mul__

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        body = _format_terms(self.coeffs) or "0"
        return f"{body} + O(q^{self.order + 1})"


Scalar = QSeries | QPolynomial | int


@dataclass(frozen=True, eq=False)
class CharacterQSeries:
    """Map weight -> truncated q-series sharing one truncation order."""

    order: int
    terms: dict[Weight, QSeries] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {}
        for w, s in self.terms.items():
            if s.order != self.order:
                raise SeriesOrderError(
                    f"Entry at {w} has order {s.order}, expected {self.order}"
                )
            if s:
                cleaned[w] = s
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def zero(cls, order: int) -> "CharacterQSeries":
        return cls(order, {})

    @classmethod
    def constant(cls, rank: int, order: int) -> "CharacterQSeries":
        """The series 1 at weight 0."""
        return cls(order, {Weight.zero(rank): QSeries.one(order)})

    @classmethod
    def from_character(cls, character: Character, series: Scalar, order: int) -> "CharacterQSeries":
        """Character times a scalar series."""
        base = QSeries.one(order) * series
        return cls(base.order, {w: base * c for w, c in character.support.items()})

    @classmethod
    def accumulate(
        cls, order: int, pieces: Iterable[tuple[Weight, QSeries]]
    ) -> "CharacterQSeries":
        """Sum (weight, series) pieces."""
        terms: dict[Weight, QSeries] = {}
        for w, s in pieces:
            terms[w] = terms[w] + s if w in terms else s
        return cls(order, terms)

    def coefficient(self, weight: Weight) -> QSeries:
        return self.terms.get(weight, QSeries.zero(self.order))

    def weights(self) -> list[Weight]:
        return sorted(self.terms)

    def items(self) -> Iterator[tuple[Weight, QSeries]]:
        for w in self.weights():
            yield w, self.terms[w]

    def truncate(self, order: int) -> "CharacterQSeries":
        return CharacterQSeries(order, {w: s.truncate(order) for w, s in self.terms.items()})

    def at_q_zero(self) -> Character:
        """The q^0 layer as a character."""
        return Character({w: s.coeffs[0] for w, s in self.terms.items()})

    def first_mismatch(self, other: "CharacterQSeries") -> tuple[Weight, int, int, int] | None:
        """First (weight, power, lhs, rhs) where the two series differ."""
        if other.order != self.order:
            raise SeriesOrderError(f"Series orders differ: {self.order} vs {other.order}")
        for w in sorted(set(self.terms) | set(other.terms)):
            lhs = self.coefficient(w)
            rhs = other.coefficient(w)
            k = lhs.first_mismatch(rhs)
            if k is not None:
                return w, k, lhs.coeffs[k], rhs.coeffs[k]
        return None

    def scale(self, factor: Scalar) -> "CharacterQSeries":
        """Multiply every entry by a scalar series."""
        scaled = {w: s * factor for w, s in self.terms.items()}
        order = min((s.order for s in scaled.values()), default=self._factor_order(factor))
        return CharacterQSeries(order, {w: s.truncate(order) for w, s in scaled.items()})

    def shift_weight(self, weight: Weight) -> "CharacterQSeries":
        """Multiply by e^weight."""
        return CharacterQSeries(self.order, {w + weight: s for w, s in self.terms.items()})

    def _factor_order(self, factor: Scalar) -> int:
        if isinstance(factor, QSeries):
            return min(self.order, factor.order)
        return self.order

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharacterQSeries):
            return NotImplemented
        return self.first_mismatch(other) is None

    def __neg__(self) -> "CharacterQSeries":
        return CharacterQSeries(self.order, {w: -s for w, s in self.terms.items()})

    def __add__(self, other: "CharacterQSeries") -> "CharacterQSeries":
        if not isinstance(other, CharacterQSeries):
            return NotImplemented
        order = min(self.order, other.order)
        terms = {w: s.truncate(order) for w, s in self.terms.items()}
        for w, s in other.terms.items():
            s = s.truncate(order)
            terms[w] = terms[w] + s if w in terms else s
        return CharacterQSeries(order, terms)

    def __sub__(self, other: "CharacterQSeries") -> "CharacterQSeries":
        return self + (-other)

    def __mul__(self, other: "CharacterQSeries | Character | Scalar") -> "CharacterQSeries":
        if isinstance(other, Character):
            other = CharacterQSeries.from_character(other, 1, self.order)
        if not isinstance(other, CharacterQSeries):
            return self.scale(other)
        order = min(self.order, other.order)
        terms: dict[Weight, QSeries] = {}
        for w1, s1 in self.terms.items():
            for w2, s2 in other.terms.items():
                w = w1 + w2
                product = s1.truncate(order) * s2.truncate(order)
                terms[w] = terms[w] + product if w in terms else product
        return CharacterQSeries(order, terms)

    __rmul__ = __mul__

    def to_records(self) -> list[dict[str, list[int]]]:
        """Serialized form: weights sorted lexicographically."""
        return [{"weight": w.to_list(), "coeffs": s.to_list()} for w, s in self.items()]


def _format_terms(coeffs: tuple[int, ...]) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            mono = "q" if k == 1 else f"q^{k}"
            parts.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")
