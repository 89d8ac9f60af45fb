"""Exact coefficients, graded variables, polynomials, orders and monomial ideals."""

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from app.errors import DomainError
from app.lie.models import Weight

Exponents = tuple[int, ...]
Rational = Fraction | int


@dataclass(frozen=True)
class CoeffExt:
    """Element a + b*sqrt(2) of Q(sqrt 2)."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def zero(cls) -> "CoeffExt":
        return cls()

    @classmethod
    def one(cls) -> "CoeffExt":
        return cls(Fraction(1))

    @classmethod
    def from_quadruple(cls, values: Sequence[int]) -> "CoeffExt":
        """Build from [a_num, a_den, b_num, b_den]."""
        if len(values) != 4:
            raise DomainError(f"Coefficient needs four integers, got {list(values)}")
        a_num, a_den, b_num, b_den = values
        if a_den == 0 or b_den == 0:
            raise DomainError(f"Zero denominator in coefficient {list(values)}")
        return cls(Fraction(a_num, a_den), Fraction(b_num, b_den))

    def to_quadruple(self) -> list[int]:
        return [self.a.numerator, self.a.denominator, self.b.numerator, self.b.denominator]

    def norm(self) -> Fraction:
        """Field norm a^2 - 2b^2."""
        return self.a * self.a - 2 * self.b * self.b

    def inverse(self) -> "CoeffExt":
        if not self:
            raise ZeroDivisionError("Inverse of zero in Q(sqrt 2)")
        n = self.norm()
        return CoeffExt(self.a / n, -self.b / n)

    def _coerce(self, other: "CoeffExt | Rational") -> "CoeffExt":
        if isinstance(other, CoeffExt):
            return other
        return CoeffExt(Fraction(other))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __neg__(self) -> "CoeffExt":
        return CoeffExt(-self.a, -self.b)

    def __add__(self, other: "CoeffExt | Rational") -> "CoeffExt":
        o = self._coerce(other)
        return CoeffExt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: "CoeffExt | Rational") -> "CoeffExt":
        return self + (-self._coerce(other))

    def __mul__(self, other: "CoeffExt | Rational") -> "CoeffExt":
        o = self._coerce(other)
        return CoeffExt(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other: "CoeffExt | Rational") -> "CoeffExt":
        return self * self._coerce(other).inverse()

    def as_expr(self) -> sympy.Expr:
        return sympy.Rational(self.a.numerator, self.a.denominator) + sympy.Rational(
            self.b.numerator, self.b.denominator
        ) * sympy.sqrt(2)

    def __str__(self) -> str:
        return str(self.as_expr())


@dataclass(frozen=True)
class GradedVariable:
    """Polynomial variable with a multidegree and a Lie-algebra weight."""

    name: str
    multidegree: tuple[int, ...]
    weight: Weight

    def __post_init__(self) -> None:
        object.__setattr__(self, "multidegree", tuple(int(d) for d in self.multidegree))
        if any(d < 0 for d in self.multidegree) or not any(self.multidegree):
            raise DomainError(
                f"Variable {self.name} needs a nonnegative, nonzero multidegree, "
                f"got {self.multidegree}"
            )


@dataclass(frozen=True)
class PolynomialRing:
    """Ambient variables of a polynomial ring."""

    variables: tuple[GradedVariable, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "variables", tuple(self.variables))
        index = {v.name: k for k, v in enumerate(self.variables)}
        if len(index) != len(self.variables):
            raise DomainError("Duplicate variable names in polynomial ring")
        object.__setattr__(self, "_index", index)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.variables)

    def index(self, name: str) -> int:
        if name not in self._index:
            raise DomainError(f"Unknown variable '{name}'")
        return self._index[name]

    def monomial(self, powers: Mapping[str, int]) -> Exponents:
        """Exponent vector from a name -> power map."""
        exps = [0] * self.nvars
        for name, power in powers.items():
            exps[self.index(name)] += int(power)
        return tuple(exps)

    def monomial_names(self, exps: Exponents) -> dict[str, int]:
        return {self.variables[k].name: e for k, e in enumerate(exps) if e}

    def multidegree(self, exps: Exponents) -> tuple[int, ...]:
        width = len(self.variables[0].multidegree) if self.variables else 0
        total = [0] * width
        for var, e in zip(self.variables, exps, strict=True):
            if e:
                for k, d in enumerate(var.multidegree):
                    total[k] += e * d
        return tuple(total)

    def weight(self, exps: Exponents) -> Weight | None:
        total: Weight | None = None
        for var, e in zip(self.variables, exps, strict=True):
            if e:
                total = var.weight * e if total is None else total + var.weight * e
        return total

    def extend(self, extra: Iterable[GradedVariable]) -> "PolynomialRing":
        return PolynomialRing(self.variables + tuple(extra))

    def format_monomial(self, exps: Exponents) -> str:
        parts = []
        for var, e in zip(self.variables, exps, strict=True):
            if e == 1:
                parts.append(var.name)
            elif e > 1:
                parts.append(f"{var.name}^{e}")
        return "*".join(parts) or "1"


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Polynomial with Q(sqrt 2) coefficients; zero coefficients are never stored."""

    ring: PolynomialRing
    terms: dict[Exponents, CoeffExt] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {}
        for exps, c in self.terms.items():
            exps = tuple(exps)
            if len(exps) != self.ring.nvars:
                raise DomainError(
                    f"Exponent vector of length {len(exps)} in a ring of "
                    f"{self.ring.nvars} variables"
                )
            if c:
                cleaned[exps] = c
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def from_monomial(
        cls, ring: PolynomialRing, exps: Exponents, coeff: CoeffExt | None = None
    ) -> "Polynomial":
        return cls(ring, {tuple(exps): coeff or CoeffExt.one()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def _check_ring(self, other: "Polynomial") -> None:
        if other.ring != self.ring:
            raise DomainError("Polynomials live in different rings")

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms[m] + c if m in terms else c
        return Polynomial(self.ring, terms)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, coeff: CoeffExt | Rational) -> "Polynomial":
        return Polynomial(self.ring, {m: c * coeff for m, c in self.terms.items()})

    def mul_term(self, exps: Exponents, coeff: CoeffExt | Rational = 1) -> "Polynomial":
        """Multiply by coeff * x^exps."""
        return Polynomial(
            self.ring,
            {
                tuple(a + b for a, b in zip(m, exps, strict=True)): c * coeff
                for m, c in self.terms.items()
            },
        )

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        result = Polynomial(self.ring)
        for m, c in other.terms.items():
            result = result + self.mul_term(m, c)
        return result

    def leading(self, order: "MonomialOrder") -> tuple[Exponents, CoeffExt]:
        """Leading monomial and coefficient."""
        if not self.terms:
            raise DomainError("The zero polynomial has no leading term")
        lm = max(self.terms, key=order.key)
        return lm, self.terms[lm]

    def monic(self, order: "MonomialOrder") -> "Polynomial":
        _, lc = self.leading(order)
        return self.scale(lc.inverse())

    def is_homogeneous(self) -> bool:
        """Same multidegree and same weight on every term."""
        degrees = {self.ring.multidegree(m) for m in self.terms}
        weights = {self.ring.weight(m) for m in self.terms}
        return len(degrees) <= 1 and len(weights) <= 1

    def sorted_terms(self, order: "MonomialOrder") -> list[tuple[Exponents, CoeffExt]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def as_expr(self) -> sympy.Expr:
        """Render as a sympy expression (sqrt 2 kept exact)."""
        symbols = [sympy.Symbol(name) for name in self.ring.names]
        expr = sympy.Integer(0)
        for exps, c in self.terms.items():
            mono = sympy.Integer(1)
            for sym, e in zip(symbols, exps, strict=True):
                if e:
                    mono *= sym**e
            expr += c.as_expr() * mono
        return expr


@dataclass(frozen=True)
class MonomialOrder:
    """Lexicographic order along an explicit variable sequence."""

    ring: PolynomialRing
    variable_sequence: tuple[str, ...]
    kind: str = "lex"
    _perm: tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        sequence = tuple(self.variable_sequence)
        object.__setattr__(self, "variable_sequence", sequence)
        if self.kind != "lex":
            raise DomainError(f"Only lex orders are supported, got '{self.kind}'")
        if sorted(sequence) != sorted(self.ring.names) or len(set(sequence)) != len(sequence):
            raise DomainError("Order must be a permutation of the ring variables")
        object.__setattr__(self, "_perm", tuple(self.ring.index(n) for n in sequence))

    @classmethod
    def natural(cls, ring: PolynomialRing) -> "MonomialOrder":
        """Lex order along the ring's own variable listing."""
        return cls(ring, ring.names)

    def key(self, exps: Exponents) -> Exponents:
        """Sort key: larger key means larger monomial."""
        return tuple(exps[i] for i in self._perm)

    def extend(self, ring: PolynomialRing, names: Iterable[str]) -> "MonomialOrder":
        """Append new variables below every existing one."""
        return MonomialOrder(ring, self.variable_sequence + tuple(names))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal stored by a minimal generating set."""

    ring: PolynomialRing
    generators: frozenset[Exponents]

    def __post_init__(self) -> None:
        gens = {tuple(g) for g in self.generators}
        for g in gens:
            if len(g) != self.ring.nvars:
                raise DomainError(f"Generator {g} does not match the ring")
        minimal = {g for g in gens if not any(h != g and divides(h, g) for h in gens)}
        object.__setattr__(self, "generators", frozenset(minimal))

    @classmethod
    def from_names(
        cls, ring: PolynomialRing, monomials: Iterable[Mapping[str, int]]
    ) -> "MonomialIdeal":
        return cls(ring, frozenset(ring.monomial(m) for m in monomials))

    def contains(self, exps: Exponents) -> bool:
        return any(divides(g, exps) for g in self.generators)

    def sorted_generators(self, order: MonomialOrder) -> list[Exponents]:
        return sorted(self.generators, key=order.key, reverse=True)

    def as_names(self) -> set[frozenset[tuple[str, int]]]:
        """Generators as hashable name -> power sets (handy for comparisons)."""
        return {frozenset(self.ring.monomial_names(g).items()) for g in self.generators}

    def is_quadratic(self) -> bool:
        return all(sum(g) == 2 for g in self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Exponents]:
        return iter(self.generators)


def divides(a: Exponents, b: Exponents) -> bool:
    """Whether x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b, strict=True))


def lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b, strict=True))


def quotient(a: Exponents, b: Exponents) -> Exponents:
    """x^a / x^b for b dividing a."""
    return tuple(x - y for x, y in zip(a, b, strict=True))
