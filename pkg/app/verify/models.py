"""Resolution data and check reports."""

from dataclasses import dataclass
from enum import Enum
from typing import Any

from pydantic import BaseModel, Field, model_validator

from app.errors import DomainError
from app.lie.characters import irreducible_character
from app.lie.models import Character, LieAlgebraData, Weight
from app.qseries.models import CharacterQSeries


@dataclass(frozen=True)
class ResolutionTerm:
    """Free module S(shift) (x) L(module) in homological degree `degree`."""

    degree: int
    shift: tuple[int, ...]
    module: Weight

    def character(self, algebra: LieAlgebraData) -> Character:
        return irreducible_character(algebra, self.module)


@dataclass(frozen=True)
class ResolutionData:
    """Finite free resolution F^(0) <- F^(1) <- ... <- F^(length)."""

    terms: tuple[ResolutionTerm, ...]
    length: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(self.terms))
        zero_terms = [t for t in self.terms if t.degree == 0]
        if len(zero_terms) != 1:
            raise DomainError("A resolution needs exactly one term in degree 0")
        head = zero_terms[0]
        if any(head.shift) or any(head.module.dynkin):
            raise DomainError("The degree-0 term must be S(0) with the trivial module")
        for t in self.terms:
            if not 0 <= t.degree <= self.length:
                raise DomainError(f"Term degree {t.degree} outside 0..{self.length}")
            if t.degree >= 1 and any(a > 0 for a in t.shift):
                raise DomainError(f"Shift {t.shift} in degree {t.degree} must be <= 0")

    def in_degree(self, j: int) -> list[ResolutionTerm]:
        return [t for t in self.terms if t.degree == j]


class CheckStatus(str, Enum):
    """Outcome of a check."""

    PASS = "pass"
    FAIL = "fail"


class Witness(BaseModel):
    """First mismatch between the two sides of a check."""

    weight: list[int] | None = None
    power: int = 0
    lhs: int
    rhs: int
    label: str | None = None


class CheckReport(BaseModel):
    """Structured result of one check."""

    check: str
    params: dict[str, Any] = Field(default_factory=dict)
    order: int | None = Field(default=None, serialization_alias="N")
    status: CheckStatus
    witness: Witness | None = None
    detail: str | None = None

    @model_validator(mode="after")
    def _failure_has_witness(self) -> "CheckReport":
        if self.status == CheckStatus.FAIL and self.witness is None:
            raise ValueError("A failing report must carry a witness")
        return self

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS

    def to_record(self) -> dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True, exclude_none=True)


def compare_series(
    check: str,
    params: dict[str, Any],
    lhs: CharacterQSeries,
    rhs: CharacterQSeries,
    detail: str | None = None,
) -> CheckReport:
    """Report equality of two character-valued series through their common order."""
    order = min(lhs.order, rhs.order)
    mismatch = lhs.truncate(order).first_mismatch(rhs.truncate(order))
    if mismatch is None:
        return CheckReport(check=check, params=params, order=order, status=CheckStatus.PASS)
    weight, power, a, b = mismatch
    return CheckReport(
        check=check,
        params=params,
        order=order,
        status=CheckStatus.FAIL,
        witness=Witness(weight=weight.to_list(), power=power, lhs=a, rhs=b),
        detail=detail,
    )


def compare_characters(
    check: str,
    params: dict[str, Any],
    lhs: Character,
    rhs: Character,
    detail: str | None = None,
) -> CheckReport:
    """Report equality of two characters; the witness is the first differing weight."""
    for weight in sorted(set(lhs.support) | set(rhs.support)):
        a, b = lhs.multiplicity(weight), rhs.multiplicity(weight)
        if a != b:
            return CheckReport(
                check=check,
                params=params,
                status=CheckStatus.FAIL,
                witness=Witness(weight=weight.to_list(), lhs=a, rhs=b),
                detail=detail,
            )
    return CheckReport(check=check, params=params, status=CheckStatus.PASS)


def compare_values(
    check: str, params: dict[str, Any], lhs: int, rhs: int, label: str
) -> CheckReport:
    """Report equality of two integers."""
    if lhs == rhs:
        return CheckReport(check=check, params=params, status=CheckStatus.PASS)
    return CheckReport(
        check=check,
        params=params,
        status=CheckStatus.FAIL,
        witness=Witness(lhs=lhs, rhs=rhs, label=label),
    )
