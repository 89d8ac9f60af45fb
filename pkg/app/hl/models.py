"""Configurations and per-configuration data of the fermionic formula."""

from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass

from app.qseries.models import QPolynomial


@dataclass(frozen=True)
class HLConfiguration:
    """Nonnegative integers m_a^(i), one finite partition per simple root.

    parts[i] lists (a, m_a^(i)) with m_a^(i) > 0, sorted by a; roots are 0-based.
    """

    parts: tuple[tuple[tuple[int, int], ...], ...]

    @classmethod
    def from_partitions(cls, partitions: Sequence[Mapping[int, int]]) -> "HLConfiguration":
        return cls(
            tuple(tuple(sorted((int(a), int(m)) for a, m in p.items() if m)) for p in partitions)
        )

    @classmethod
    def empty(cls, rank: int) -> "HLConfiguration":
        return cls(((),) * rank)

    @property
    def rank(self) -> int:
        return len(self.parts)

    def get(self, i: int, a: int) -> int:
        """m_a^(i) for a 0-based root index."""
        for b, m in self.parts[i]:
            if b == a:
                return m
        return 0

    def terms(self) -> Iterator[tuple[int, int, int]]:
        """Iterate nonzero (i, a, m_a^(i))."""
        for i, row in enumerate(self.parts):
            for a, m in row:
                yield i, a, m

    def max_part(self) -> int:
        return max((a for _, a, _ in self.terms()), default=0)

    def root_totals(self) -> tuple[int, ...]:
        """sum_a a * m_a^(i) per root."""
        return tuple(sum(a * m for a, m in row) for row in self.parts)

    def to_records(self) -> list[dict[str, int]]:
        return [{"root": i + 1, "a": a, "m": m} for i, a, m in self.terms()]


@dataclass(frozen=True)
class FermionicData:
    """Vacancy numbers, cocharge and contribution of one configuration."""

    configuration: HLConfiguration
    vacancies: dict[tuple[int, int], int]
    cocharge: int
    contribution: QPolynomial

    @property
    def admissible(self) -> bool:
        """Whether every vacancy number is nonnegative."""
        return all(p >= 0 for p in self.vacancies.values())
