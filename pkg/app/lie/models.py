"""Data models for root systems, weights and characters."""

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from app.errors import DomainError

Vector = tuple[Fraction, ...]


class Family(str, Enum):
    """Supported Cartan families."""

    A = "A"
    B = "B"


@dataclass(frozen=True, order=True)
class Weight:
    """Integral weight stored by its Dynkin labels (lambda, alpha_i^vee)."""

    dynkin: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dynkin", tuple(int(x) for x in self.dynkin))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        """The zero weight of the given rank."""
        return cls((0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.dynkin)

    def is_dominant(self) -> bool:
        return all(x >= 0 for x in self.dynkin)

    def _check_rank(self, other: "Weight") -> None:
        if other.rank != self.rank:
            raise DomainError(f"Weight rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check_rank(other)
        return Weight(tuple(a + b for a, b in zip(self.dynkin, other.dynkin, strict=True)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_rank(other)
        return Weight(tuple(a - b for a, b in zip(self.dynkin, other.dynkin, strict=True)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.dynkin))

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.dynkin))

    __rmul__ = __mul__

    def to_list(self) -> list[int]:
        return list(self.dynkin)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.dynkin) + ")"


@dataclass(frozen=True)
class Character:
    """Formal character: finitely supported map from weights to multiplicities."""

    support: dict[Weight, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "support", {w: c for w, c in self.support.items() if c})

    @classmethod
    def from_weights(cls, weights: Iterable[Weight]) -> "Character":
        """Character of a module with the given weight multiset."""
        support: dict[Weight, int] = {}
        for w in weights:
            support[w] = support.get(w, 0) + 1
        return cls(support)

    @classmethod
    def trivial(cls, rank: int) -> "Character":
        return cls({Weight.zero(rank): 1})

    def multiplicity(self, weight: Weight) -> int:
        return self.support.get(weight, 0)

    def mass(self) -> int:
        """Sum of multiplicities (the dimension for a genuine module)."""
        return sum(self.support.values())

    def dual(self) -> "Character":
        """Character of the contragredient module."""
        return Character({-w: c for w, c in self.support.items()})

    def items(self) -> Iterator[tuple[Weight, int]]:
        """Iterate (weight, multiplicity) in lexicographic weight order."""
        for w in sorted(self.support):
            yield w, self.support[w]

    def key(self) -> tuple[tuple[tuple[int, ...], int], ...]:
        """Canonical hashable form."""
        return tuple((w.dynkin, c) for w, c in self.items())

    def __add__(self, other: "Character") -> "Character":
        support = dict(self.support)
        for w, c in other.support.items():
            support[w] = support.get(w, 0) + c
        return Character(support)

    def __neg__(self) -> "Character":
        return Character({w: -c for w, c in self.support.items()})

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def __mul__(self, other: "Character | int") -> "Character":
        if isinstance(other, int):
            return Character({w: c * other for w, c in self.support.items()})
        support: dict[Weight, int] = {}
        for w1, c1 in self.support.items():
            for w2, c2 in other.support.items():
                w = w1 + w2
                support[w] = support.get(w, 0) + c1 * c2
        return Character(support)

    __rmul__ = __mul__

    def __len__(self) -> int:
        return len(self.support)


@dataclass(frozen=True)
class LieAlgebraData:
    """Root data of a simple Lie algebra of type A or B.

    Vectors are given in the orthonormal epsilon basis. For type A_{n-1} the
    vectors live in Q^n and the inner product is taken after projecting onto
    the hyperplane sum(eps_i) = 0, which gives (eps_i, eps_j) = delta_ij - 1/n.
    """

    family: Family
    rank: int
    simple_roots: tuple[Vector, ...]
    fundamental_weights: tuple[Vector, ...]
    cartan_matrix: tuple[tuple[int, ...], ...]
    root_norms: tuple[Fraction, ...]
    positive_roots: tuple[Vector, ...]
    fund_rep_dims: tuple[int, ...]
    gram: tuple[tuple[Fraction, ...], ...]

    @property
    def name(self) -> str:
        if self.family == Family.A:
            return f"sl{self.rank + 1}"
        return f"so{2 * self.rank + 1}"

    @property
    def ambient_dim(self) -> int:
        return self.rank + 1 if self.family == Family.A else self.rank

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    def inner_eps(self, u: Vector, v: Vector) -> Fraction:
        """Inner product of two epsilon-coordinate vectors."""
        dot = sum((a * b for a, b in zip(u, v, strict=True)), Fraction(0))
        if self.family == Family.A:
            n = self.ambient_dim
            dot -= sum(u, Fraction(0)) * sum(v, Fraction(0)) / n
        return dot

    def to_dynkin(self, v: Vector) -> Weight:
        """Convert an epsilon vector to its Dynkin labels."""
        labels = []
        for alpha, norm in zip(self.simple_roots, self.root_norms, strict=True):
            value = 2 * self.inner_eps(v, alpha) / norm
            if value.denominator != 1:
                raise DomainError(f"Vector {v} is not an integral weight of {self.name}")
            labels.append(int(value))
        return Weight(tuple(labels))

    def to_epsilon(self, weight: Weight) -> Vector:
        """Epsilon coordinates sum(lambda_i * Lambda_i)."""
        self._check(weight)
        out = [Fraction(0)] * self.ambient_dim
        for coeff, fund in zip(weight.dynkin, self.fundamental_weights, strict=True):
            for k, x in enumerate(fund):
                out[k] += coeff * x
        return tuple(out)

    def inner(self, lam: Weight, mu: Weight) -> Fraction:
        """Invariant inner product of two weights."""
        self._check(lam)
        self._check(mu)
        total = Fraction(0)
        for i, a in enumerate(lam.dynkin):
            if a:
                row = self.gram[i]
                total += a * sum((row[j] * b for j, b in enumerate(mu.dynkin) if b), Fraction(0))
        return total

    def simple_root_weights(self) -> tuple[Weight, ...]:
        """Simple roots in Dynkin labels (rows of the Cartan matrix)."""
        return tuple(Weight(row) for row in self.cartan_matrix)

    def positive_root_weights(self) -> tuple[Weight, ...]:
        return tuple(self.to_dynkin(r) for r in self.positive_roots)

    def fundamental_weight(self, i: int) -> Weight:
        """Lambda_i for a 1-based index i."""
        if not 1 <= i <= self.rank:
            raise DomainError(f"Fundamental index {i} out of range for {self.name}")
        return Weight(tuple(1 if j == i - 1 else 0 for j in range(self.rank)))

    def highest_weight(self, m: Iterable[int]) -> Weight:
        """The weight sum(M_i * Lambda_i)."""
        weight = Weight(tuple(m))
        self._check(weight)
        return weight

    def rho(self) -> Weight:
        return Weight((1,) * self.rank)

    def root_coordinates(self, weight: Weight) -> tuple[Fraction, ...]:
        """Coefficients c_i with weight = sum(c_i * alpha_i)."""
        return tuple(
            2 * self.inner(weight, self.fundamental_weight(i + 1)) / self.root_norms[i]
            for i in range(self.rank)
        )

    def height(self, weight: Weight) -> Fraction:
        return sum(self.root_coordinates(weight), Fraction(0))

    def reflect(self, i: int, weight: Weight) -> Weight:
        """Simple reflection s_i for a 0-based index i."""
        alpha = Weight(self.cartan_matrix[i])
        return weight - alpha * weight.dynkin[i]

    def is_weyl_symmetric(self, values: Mapping[Weight, object]) -> bool:
        """Whether a weight map is invariant under every simple reflection."""
        for w, v in values.items():
            for i in range(self.rank):
                if values.get(self.reflect(i, w)) != v:
                    return False
        return True

    def _check(self, weight: Weight) -> None:
        if weight.rank != self.rank:
            raise DomainError(
                f"Weight {weight} has rank {weight.rank}, expected {self.rank} for {self.name}"
            )
