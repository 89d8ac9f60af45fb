"""Batch execution of checks."""

import itertools
import logging
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Any

from tqdm import tqdm

from app.config import configure_settings, get_settings
from app.errors import ConfigurationError
from app.verify.conjectures import check_conjecture_51, check_q_one_limit
from app.verify.identities import (
    check_chain_quadratization,
    check_identity_35,
    check_identity_36,
    check_identity_313_316,
)
from app.verify.manifest import check_manifest
from app.verify.models import CheckReport
from app.verify.resolutions import (
    RESOLUTION_CASES,
    check_conjecture_21_case,
    check_dim_243,
    check_euler_poincare,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckSpec:
    """One check to run: its selector name, parameters and truncation order."""

    name: str
    params: dict[str, Any] = field(default_factory=dict)
    order: int | None = None


_CHECKS: dict[str, Callable[[dict[str, Any], int | None], CheckReport]] = {
    "id35": lambda p, n: check_identity_35(p["M1"], p["M2"], n),
    "id36": lambda p, n: check_identity_36(p["M1"], p["M2"], n),
    "id313": lambda p, n: check_identity_313_316(p["M"], n),
    "chain": lambda p, n: check_chain_quadratization(p["M"], n),
    "dim243": lambda p, n: check_dim_243(p["M1"], p["M2"]),
    "ep": lambda p, n: check_euler_poincare(p["case"], p["M"]),
    "manifest": lambda p, n: check_manifest(p["case"], p["M"], n),
    "conj21": lambda p, n: check_conjecture_21_case(p["case"]),
    "conj51": lambda p, n: check_conjecture_51(p["algebra"], p["M"], n),
    "q1": lambda p, n: check_q_one_limit(p["algebra"], p["M"]),
}

SELECTORS = tuple(_CHECKS)


def run_check(spec: CheckSpec) -> CheckReport:
    """Run a single check.

    Raises:
        ConfigurationError: If the check name is unknown
    """
    runner = _CHECKS.get(spec.name)
    if runner is None:
        raise ConfigurationError(
            f"Unknown check '{spec.name}'. Expected one of {', '.join(SELECTORS)}"
        )
    return runner(spec.params, spec.order)


def _grid(total: int, parts: int) -> Iterator[list[int]]:
    """Nonnegative vectors of length `parts` with entry sum at most `total`."""
    for values in itertools.product(range(total + 1), repeat=parts):
        if sum(values) <= total:
            yield list(values)


def default_suite(
    identity_order: int | None = None, conjecture_order: int | None = None
) -> list[CheckSpec]:
    """The full acceptance grid, in a fixed order."""
    settings = get_settings()
    n_id = settings.identity_order if identity_order is None else identity_order
    n_conj = settings.conjecture_order if conjecture_order is None else conjecture_order
    specs: list[CheckSpec] = []

    for name in ("id35", "id36"):
        specs.extend(
            CheckSpec(name, {"M1": a, "M2": b}, n_id) for a in range(6) for b in range(6)
        )
    for n in range(2, 5):
        specs.extend(CheckSpec("id313", {"M": m}, n_id) for m in _grid(5, n))
    for n in range(2, 6):
        specs.append(CheckSpec("chain", {"M": [1] * n}, n_conj))
        specs.append(CheckSpec("chain", {"M": [2] + [1] * (n - 1)}, n_conj))

    specs.extend(CheckSpec("dim243", {"M1": a, "M2": b}) for a in range(6) for b in range(6))
    for case in RESOLUTION_CASES:
        rank = 3 if case == "sl4" else 2
        specs.extend(CheckSpec("ep", {"case": case, "M": m}) for m in _grid(4, rank))
        specs.append(CheckSpec("conj21", {"case": case}))

    manifest: list[tuple[str, list[int]]] = []
    manifest += [("sl3", [a, b]) for a in range(5) for b in range(5)]
    manifest += [("sl4", [a, 0, c]) for a in range(4) for c in range(4)]
    manifest += [("so5", [a, b]) for b in (0, 1) for a in range(5)]
    manifest += [("so5", [0, b]) for b in range(2, 5)]
    manifest += [("so7", [0, 0, c]) for c in range(2, 4)]
    manifest += [("so7", [a, 0, c]) for c in (0, 1) for a in range(4)]
    specs.extend(CheckSpec("manifest", {"case": c, "M": m}, n_conj) for c, m in manifest)

    hl: list[tuple[str, list[int]]] = []
    hl += [("sl2", [a]) for a in range(7)]
    hl += [("sl3", m) for m in _grid(4, 2)]
    hl += [("sl4", m) for m in _grid(3, 3)]
    hl += [("so5", [a, b]) for b in (0, 1) for a in range(5 - 2 * b)]
    hl += [("so5", [0, 2])]
    hl += [("so7", [a, 0, c]) for a, c in _grid(2, 2)]
    specs.extend(CheckSpec("conj51", {"algebra": a, "M": m}, n_conj) for a, m in hl)

    for algebra, rank in (("sl2", 1), ("sl3", 2), ("so5", 2)):
        specs.extend(CheckSpec("q1", {"algebra": algebra, "M": m}) for m in _grid(3, rank))
    return specs


def select(specs: Iterable[CheckSpec], selector: str) -> list[CheckSpec]:
    """Specs matching a selector; "all" keeps everything."""
    if selector != "all" and selector not in _CHECKS:
        raise ConfigurationError(
            f"Unknown check '{selector}'. Expected one of all, {', '.join(SELECTORS)}"
        )
    return [s for s in specs if selector == "all" or s.name == selector]


def run_checks(specs: Iterable[CheckSpec], jobs: int = 1) -> list[CheckReport]:
    """Run checks, in parallel when jobs > 1; reports come back in submission order."""
    specs = list(specs)
    logger.info(f"Running {len(specs)} checks with {jobs} worker(s)")
    reports: list[CheckReport] = []
    with tqdm(
        total=len(specs), desc="Checks", unit="check", ncols=100, disable=None
    ) as pbar:
        if jobs <= 1:
            for spec in specs:
                reports.append(run_check(spec))
                pbar.update(1)
        else:
            overrides = get_settings().model_dump()
            with ProcessPoolExecutor(
                max_workers=jobs, initializer=partial(configure_settings, **overrides)
            ) as executor:
                for report in executor.map(run_check, specs):
                    reports.append(report)
                    pbar.update(1)

    failed = [r for r in reports if not r.passed]
    if failed:
        logger.error(f"{len(failed)} of {len(reports)} checks failed")
    else:
        logger.info(f"All {len(reports)} checks passed")
    return reports
