"""Loading, validating and serializing fixtures and model files."""

import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from pydantic import ValidationError

from app.affine.models import QuadraticModel
from app.affine.quadratize import quadratize
from app.config import get_settings
from app.errors import DomainError, FixtureError
from app.fixtures.models import (
    FixtureFile,
    ModelFile,
    PolynomialSpec,
    Provenance,
    SubstitutionSpec,
    TermSpec,
    VariableSpec,
)
from app.groebner.buchberger import buchberger, lt_ideal
from app.groebner.models import (
    CoeffExt,
    GradedVariable,
    MonomialIdeal,
    MonomialOrder,
    Polynomial,
    PolynomialRing,
)
from app.lie.algebra import build_algebra
from app.lie.models import LieAlgebraData, Weight

logger = logging.getLogger(__name__)

FIXTURE_SUFFIX = ".json"


@dataclass
class Fixture:
    """A parsed fixture with its ring, order and ideal data built."""

    spec: FixtureFile
    algebra: LieAlgebraData
    ring: PolynomialRing
    order: MonomialOrder
    generators: list[Polynomial]
    _lt: MonomialIdeal | None = field(default=None, repr=False)
    _models: dict[tuple[bool, int, int | None], QuadraticModel] = field(default_factory=dict, repr=False)

    @property
    def name(self) -> str:
        return self.spec.name

    @property
    def provenance(self) -> Provenance:
        return self.spec.provenance

    @property
    def reps(self) -> list[int]:
        return list(self.spec.reps)

    def substitutions(self) -> list[tuple[str, dict[str, int]]]:
        return [(s.name, dict(s.monomial)) for s in self.spec.substitutions]

    def ideal_generators(self) -> list[Polynomial]:
        """Generators of the defining ideal.

        Raises:
            FixtureError: For paper-LT fixtures, which carry only leading terms
        """
        if self.provenance == Provenance.PAPER_LT:
            raise FixtureError(
                f"Fixture '{self.name}' has no ideal generators available (provenance paper-LT)"
            )
        return list(self.generators)

    def groebner_basis(self, max_pairs: int | None = None) -> list[Polynomial]:
        generators = self.ideal_generators()
        if not generators:
            return []
        return buchberger(generators, self.order, max_pairs=max_pairs)

    def lt_ideal(self, max_pairs: int | None = None) -> MonomialIdeal:
        """Leading-term ideal, computed once from the generators or read from the file."""
        if self._lt is None:
            if self.provenance == Provenance.PAPER_LT:
                self._lt = MonomialIdeal.from_names(self.ring, self.spec.lt_generators)
            else:
                self._lt = lt_ideal(self.groebner_basis(max_pairs), self.order)
        return self._lt

    def expected_lt(self) -> MonomialIdeal | None:
        if self.spec.expected_lt is None:
            return None
        return MonomialIdeal.from_names(self.ring, self.spec.expected_lt)

    def model(
        self, greedy: bool = False, max_aux: int | None = None, max_pairs: int | None = None
    ) -> QuadraticModel:
        """Quadratic model of S / <LT(I)>, from the stored substitutions or greedily."""
        settings = get_settings()
        bound = settings.max_aux if max_aux is None else max_aux
        pairs_bound = settings.max_pairs if max_pairs is None else max_pairs
        key = (greedy, bound, pairs_bound)
        if key not in self._models:
            subs = None if greedy else self.substitutions()
            self._models[key] = quadratize(
                self.lt_ideal(pairs_bound), self.order, subs, max_aux=bound, max_pairs=pairs_bound
            )
        return self._models[key]


def _coefficient(values: list[int]) -> CoeffExt:
    try:
        return CoeffExt.from_quadruple(values)
    except DomainError as e:
        raise FixtureError(str(e)) from e


def _polynomial(ring: PolynomialRing, spec: PolynomialSpec) -> Polynomial:
    terms: dict[tuple[int, ...], CoeffExt] = {}
    for term in spec.terms:
        if term.exponents is not None:
            if len(term.exponents) != ring.nvars:
                raise FixtureError(f"Exponent vector {term.exponents} does not match the variables")
            exps = tuple(term.exponents)
        else:
            exps = ring.monomial(term.monomial or {})
        coeff = _coefficient(term.coeff)
        terms[exps] = terms[exps] + coeff if exps in terms else coeff
    return Polynomial(ring, terms)


def _graded_variables(specs: list[VariableSpec]) -> tuple[GradedVariable, ...]:
    return tuple(
        GradedVariable(v.name, tuple(v.multidegree), Weight(tuple(v.dynkin))) for v in specs
    )


def _lt_monomial(ring: PolynomialRing, powers: dict[str, int]) -> Polynomial:
    if not powers or any(p < 1 for p in powers.values()):
        raise DomainError(f"Leading term {powers} needs positive powers of at least one variable")
    return Polynomial.from_monomial(ring, ring.monomial(powers))


def build_fixture(spec: FixtureFile) -> Fixture:
    """Build ring, order and generators, checking homogeneity.

    Raises:
        FixtureError: If a generator or stored leading term is inhomogeneous, empty or refers
            to unknown variables
    """
    algebra = build_algebra(spec.algebra.family, spec.algebra.rank)
    try:
        ring = PolynomialRing(_graded_variables(spec.variables))
        order = MonomialOrder(ring, tuple(spec.order))
        generators = [_polynomial(ring, p) for p in spec.generators]
        lt_monomials = [_lt_monomial(ring, m) for m in spec.lt_generators]
    except DomainError as e:
        raise FixtureError(f"Fixture '{spec.name}': {e}") from e

    labelled = [(p.label, poly) for poly, p in zip(generators, spec.generators, strict=True)]
    labelled += [(ring.format_monomial(m.leading(order)[0]), m) for m in lt_monomials]
    for label, poly in labelled:
        if not poly:
            raise FixtureError(f"Fixture '{spec.name}': generator {label or '?'} is zero")
        if not poly.is_homogeneous():
            raise FixtureError(
                f"Fixture '{spec.name}': generator {label or poly.as_expr()} is not homogeneous"
            )
    logger.debug(f"Built fixture {spec.name}: {ring.nvars} variables, {len(generators)} generators")
    return Fixture(spec, algebra, ring, order, generators)


def parse_fixture(text: str) -> FixtureFile:
    """Validate fixture JSON.

    Raises:
        FixtureError: If the text is not a valid fixture
    """
    try:
        return FixtureFile.model_validate_json(text)
    except ValidationError as e:
        raise FixtureError(f"Invalid fixture: {e}") from e


def resolve_fixture_path(name_or_path: str, fixture_dir: Path | None = None) -> Path:
    """A path as given, or <fixture_dir>/<name>.json."""
    candidate = Path(name_or_path)
    if candidate.suffix == FIXTURE_SUFFIX or candidate.exists():
        return candidate
    directory = fixture_dir or get_settings().fixture_dir
    return directory / f"{name_or_path}{FIXTURE_SUFFIX}"


@lru_cache(maxsize=32)
def _load_cached(path: Path) -> Fixture:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise FixtureError(f"Cannot read fixture {path}: {e}") from e
    return build_fixture(parse_fixture(text))


def load_fixture(name_or_path: str, fixture_dir: Path | None = None) -> Fixture:
    """Load a fixture by name (from the fixture directory) or by path.

    Raises:
        FixtureError: If the file is missing or invalid
    """
    path = resolve_fixture_path(name_or_path, fixture_dir).resolve()
    if not path.exists():
        raise FixtureError(f"Fixture not found: {name_or_path} ({path})")
    return _load_cached(path)


def list_fixtures(fixture_dir: Path | None = None) -> list[Fixture]:
    directory = fixture_dir or get_settings().fixture_dir
    return [load_fixture(str(p)) for p in sorted(directory.glob(f"*{FIXTURE_SUFFIX}"))]


def _dump(payload: object) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def canonical_fixture(fixture: Fixture) -> FixtureFile:
    """Copy of the fixture file with every term written as an exponent vector."""
    generators = [
        PolynomialSpec(
            label=p.label,
            terms=[
                TermSpec(coeff=c.to_quadruple(), exponents=list(exps))
                for exps, c in poly.sorted_terms(fixture.order)
            ],
        )
        for p, poly in zip(fixture.spec.generators, fixture.generators, strict=True)
    ]
    return fixture.spec.model_copy(update={"generators": generators})


def serialize_fixture(fixture: Fixture) -> str:
    """Canonical JSON for a fixture (sorted keys, two-space indent)."""
    data = canonical_fixture(fixture).model_dump(mode="json", exclude_none=True)
    return _dump(data)


def model_to_file(model: QuadraticModel) -> ModelFile:
    return ModelFile(
        variables=[
            VariableSpec(name=v.name, multidegree=list(v.multidegree), dynkin=v.weight.to_list())
            for v in model.variables
        ],
        pairs=model.pair_names(),
        aux=[SubstitutionSpec(name=n, monomial=m) for n, m in model.aux_names()],
    )


def dump_model(model: QuadraticModel) -> str:
    return _dump(model_to_file(model).model_dump(mode="json"))


def load_model_file(path: Path) -> QuadraticModel:
    """Read a model file.

    Raises:
        FixtureError: If the file is missing or invalid
    """
    try:
        spec = ModelFile.model_validate_json(Path(path).read_text(encoding="utf-8"))
    except (OSError, ValidationError) as e:
        raise FixtureError(f"Invalid model file {path}: {e}") from e
    try:
        return QuadraticModel.from_names(
            _graded_variables(spec.variables),
            spec.pairs,
            [(a.name, a.monomial) for a in spec.aux],
        )
    except (DomainError, ValueError) as e:
        raise FixtureError(f"Invalid model file {path}: {e}") from e
