"""Quadratic monomial models and composition assignments."""

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

from app.errors import ModelError
from app.groebner.models import GradedVariable
from app.lie.models import Weight

AuxDefinition = tuple[int, tuple[tuple[str, int], ...]]


@dataclass(frozen=True)
class CompositionAssignment:
    """Multiplicity m_a for every variable of a model."""

    m: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        if any(x < 0 for x in self.m):
            raise ModelError(f"Negative multiplicity in composition {self.m}")

    def weight(self, variables: Sequence[GradedVariable], rank: int) -> Weight:
        total = Weight.zero(rank)
        for var, k in zip(variables, self.m, strict=True):
            if k:
                total = total + var.weight * k
        return total

    def multidegree(self, variables: Sequence[GradedVariable]) -> tuple[int, ...]:
        width = len(variables[0].multidegree) if variables else 0
        total = [0] * width
        for var, k in zip(variables, self.m, strict=True):
            for i, d in enumerate(var.multidegree):
                total[i] += k * d
        return tuple(total)


@dataclass(frozen=True)
class QuadraticModel:
    """Graded variables with a quadratic monomial ideal given as a set of pairs.

    Attributes:
        variables: Ordered graded variables, auxiliary ones last
        pairs: Unordered pairs (a, b), a < b, of variable indices
        aux_definitions: (index, monomial in the original variables) per auxiliary variable
    """

    variables: tuple[GradedVariable, ...]
    pairs: frozenset[tuple[int, int]] = frozenset()
    aux_definitions: tuple[AuxDefinition, ...] = ()
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        variables = tuple(self.variables)
        object.__setattr__(self, "variables", variables)
        index = {v.name: k for k, v in enumerate(variables)}
        if len(index) != len(variables):
            raise ModelError("Duplicate variable names in model")
        object.__setattr__(self, "_index", index)

        widths = {len(v.multidegree) for v in variables}
        ranks = {v.weight.rank for v in variables}
        if len(widths) > 1 or len(ranks) > 1:
            raise ModelError("Variables must share multidegree length and weight rank")

        pairs = set()
        for a, b in self.pairs:
            if not (0 <= a < len(variables) and 0 <= b < len(variables)):
                raise ModelError(f"Pair ({a}, {b}) references a missing variable")
            if a == b:
                raise ModelError(
                    f"Square generator {variables[a].name}^2 is not supported in a quadratic model"
                )
            pairs.add((min(a, b), max(a, b)))
        object.__setattr__(self, "pairs", frozenset(pairs))

        aux = tuple(
            (int(k), tuple(sorted((str(n), int(p)) for n, p in dict(mono).items())))
            for k, mono in self.aux_definitions
        )
        object.__setattr__(self, "aux_definitions", aux)
        for k, mono in aux:
            self._check_aux(k, mono)

    def _check_aux(self, k: int, mono: tuple[tuple[str, int], ...]) -> None:
        if not 0 <= k < len(self.variables):
            raise ModelError(f"Auxiliary index {k} references a missing variable")
        target = self.variables[k]
        degree = [0] * len(target.multidegree)
        weight = Weight.zero(target.weight.rank)
        for name, power in mono:
            if name not in self._index:
                raise ModelError(f"Auxiliary {target.name} uses unknown variable '{name}'")
            var = self.variables[self._index[name]]
            for i, d in enumerate(var.multidegree):
                degree[i] += power * d
            weight = weight + var.weight * power
        if tuple(degree) != target.multidegree or weight != target.weight:
            raise ModelError(
                f"Auxiliary {target.name} has grading {target.multidegree}/{target.weight} "
                f"but its definition gives {tuple(degree)}/{weight}"
            )

    @classmethod
    def from_names(
        cls,
        variables: Iterable[GradedVariable],
        pairs: Iterable[tuple[str, str]],
        aux: Iterable[tuple[str, Mapping[str, int]]] = (),
    ) -> "QuadraticModel":
        """Build a model from variable-name pairs and named auxiliary definitions.

        Raises:
            ModelError: If a name is unknown or the model is invalid
        """
        variables = tuple(variables)
        index = {v.name: k for k, v in enumerate(variables)}

        def lookup(name: str) -> int:
            if name not in index:
                raise ModelError(f"Unknown variable '{name}' in model")
            return index[name]

        return cls(
            variables,
            frozenset((lookup(a), lookup(b)) for a, b in pairs),
            tuple((lookup(name), tuple(dict(mono).items())) for name, mono in aux),
        )

    @property
    def rank(self) -> int:
        return self.variables[0].weight.rank if self.variables else 0

    @property
    def grading_length(self) -> int:
        return len(self.variables[0].multidegree) if self.variables else 0

    def index(self, name: str) -> int:
        if name not in self._index:
            raise ModelError(f"Unknown variable '{name}' in model")
        return self._index[name]

    def pair_names(self) -> list[tuple[str, str]]:
        """Pairs as sorted name tuples."""
        return sorted(
            (self.variables[a].name, self.variables[b].name) for a, b in self.pairs
        )

    def aux_names(self) -> list[tuple[str, dict[str, int]]]:
        return [(self.variables[k].name, dict(mono)) for k, mono in self.aux_definitions]

    def quadratic_form(self, m: Sequence[int]) -> int:
        """Q(m) = sum over pairs of m_a * m_b."""
        return sum(m[a] * m[b] for a, b in self.pairs)
