"""File schemas for fixtures and quadratic model files."""

from enum import Enum

from pydantic import BaseModel, Field, model_validator

from app.lie.models import Family

ONE = [1, 1, 0, 1]


class Provenance(str, Enum):
    """Where a fixture's ideal data comes from."""

    PAPER_IDEAL = "paper-ideal"
    PAPER_LT = "paper-LT"


class AlgebraSpec(BaseModel):
    """Cartan type of the fixture algebra."""

    family: Family
    rank: int = Field(ge=1)


class VariableSpec(BaseModel):
    """One graded coordinate."""

    name: str
    multidegree: list[int]
    dynkin: list[int]


class TermSpec(BaseModel):
    """Coefficient times monomial; the monomial is given by exponents or by a name map."""

    coeff: list[int] = Field(default_factory=lambda: list(ONE), min_length=4, max_length=4)
    exponents: list[int] | None = None
    monomial: dict[str, int] | None = None

    @model_validator(mode="after")
    def _one_monomial_form(self) -> "TermSpec":
        if (self.exponents is None) == (self.monomial is None):
            raise ValueError("Each term needs exactly one of 'exponents' or 'monomial'")
        return self


class PolynomialSpec(BaseModel):
    """Polynomial as a list of terms."""

    label: str | None = None
    terms: list[TermSpec]


class SubstitutionSpec(BaseModel):
    """Auxiliary variable defined by a monomial."""

    name: str
    monomial: dict[str, int]


class ResolutionTermSpec(BaseModel):
    """Free module S(shift) (x) L(module) in homological degree `degree`."""

    degree: int = Field(ge=0)
    shift: list[int]
    module: list[int]


class ResolutionSpec(BaseModel):
    """Terms of a finite free resolution."""

    length: int = Field(ge=0)
    terms: list[ResolutionTermSpec]


class FixtureFile(BaseModel):
    """A flag-variety example: algebra, coordinates, ideal data and optional resolution."""

    name: str
    description: str = ""
    algebra: AlgebraSpec
    reps: list[int]
    provenance: Provenance
    variables: list[VariableSpec]
    order: list[str]
    generators: list[PolynomialSpec] = Field(default_factory=list)
    lt_generators: list[dict[str, int]] = Field(default_factory=list)
    expected_lt: list[dict[str, int]] | None = None
    substitutions: list[SubstitutionSpec] = Field(default_factory=list)
    expected_pairs: list[tuple[str, str]] | None = None
    resolution: ResolutionSpec | None = None

    @model_validator(mode="after")
    def _check_consistency(self) -> "FixtureFile":
        names = [v.name for v in self.variables]
        if sorted(names) != sorted(self.order) or len(set(names)) != len(names):
            raise ValueError("'order' must list every variable exactly once")
        widths = {len(v.multidegree) for v in self.variables}
        if len(widths) != 1:
            raise ValueError("All variables need multidegrees of the same length")
        if any(len(v.dynkin) != self.algebra.rank for v in self.variables):
            raise ValueError(f"Dynkin labels must have length {self.algebra.rank}")
        for sub in self.substitutions:
            if sum(sub.monomial.values()) < 2:
                raise ValueError(f"Substitution '{sub.name}' must be quadratic or higher")
        if self.provenance == Provenance.PAPER_LT and (self.generators or not self.lt_generators):
            raise ValueError("paper-LT fixtures carry lt_generators and no ideal generators")
        if self.provenance == Provenance.PAPER_IDEAL and self.lt_generators:
            raise ValueError("paper-ideal fixtures derive leading terms from their generators")
        return self


class ModelFile(BaseModel):
    """Serialized quadratic monomial model."""

    variables: list[VariableSpec]
    pairs: list[tuple[str, str]]
    aux: list[SubstitutionSpec] = Field(default_factory=list)
