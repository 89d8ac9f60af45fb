"""Command implementations behind the flagq verbs."""

import argparse
import logging
from pathlib import Path
from typing import Any

from app.affine.hilbert import hilbert_affinized
from app.cli.output import CommandOutput, polynomial_record, report_line, series_lines
from app.config import get_settings
from app.errors import ConfigurationError, FixtureError
from app.fixtures.loader import dump_model, list_fixtures, load_fixture, load_model_file
from app.groebner.buchberger import lt_ideal
from app.hl.fermionic import modified_hl, require_supported_pattern
from app.lie.algebra import algebra_from_name
from app.verify.runner import CheckSpec, default_suite, run_checks, select

logger = logging.getLogger(__name__)

IDENTITY_CHECKS = ("id35", "id36", "id313")

_REQUIRED: dict[str, tuple[str, ...]] = {
    "id35": ("M1", "M2"),
    "id36": ("M1", "M2"),
    "dim243": ("M1", "M2"),
    "id313": ("M",),
    "chain": ("M",),
    "ep": ("case", "M"),
    "manifest": ("case", "M"),
    "conj21": ("case",),
    "conj51": ("algebra", "M"),
    "q1": ("algebra", "M"),
}


def cmd_groebner(args: argparse.Namespace) -> CommandOutput:
    """Reduced Groebner basis and minimal leading-term generators of a fixture ideal."""
    settings = get_settings()
    fixture = load_fixture(args.fixture)
    basis = fixture.groebner_basis(settings.max_pairs)
    lt = lt_ideal(basis, fixture.order)
    monomials = [fixture.ring.monomial_names(g) for g in lt.sorted_generators(fixture.order)]
    logger.info(f"{fixture.name}: {len(basis)} basis elements, {len(lt)} leading terms")

    result: dict[str, Any] = {
        "basis": [polynomial_record(p, fixture.order) for p in basis],
        "lt": monomials,
    }
    text = [f"Groebner basis of {fixture.name} ({len(basis)} elements):"]
    text += [f"  {p.as_expr()}" for p in basis]
    text.append(f"Leading-term ideal ({len(lt)} generators):")
    text += [f"  {fixture.ring.format_monomial(g)}" for g in lt.sorted_generators(fixture.order)]

    exit_code = 0
    if args.expect:
        expected = fixture.expected_lt()
        if expected is None:
            raise FixtureError(f"Fixture '{fixture.name}' stores no leading-term expectation")
        match = lt.as_names() == expected.as_names()
        result["expected_match"] = match
        text.append("Matches stored expectation" if match else "DOES NOT match stored expectation")
        if not match:
            logger.error(f"{fixture.name}: leading-term ideal differs from the stored expectation")
            exit_code = 1

    return CommandOutput(
        command="groebner",
        params={"fixture": fixture.name, "expect": bool(args.expect)},
        result=result,
        text=text,
        exit_code=exit_code,
    )


def cmd_hilbert(args: argparse.Namespace) -> CommandOutput:
    """Affinized Hilbert series of a fixture's quadratic model (or a model file)."""
    settings = get_settings()
    if args.model:
        model = load_model_file(Path(args.model))
        source: dict[str, Any] = {"model": args.model}
    else:
        fixture = load_fixture(args.fixture)
        model = fixture.model(greedy=args.greedy)
        source = {"fixture": fixture.name, "greedy": bool(args.greedy)}

    if len(args.target) != model.grading_length or any(m < 0 for m in args.target):
        raise ConfigurationError(
            f"--M needs {model.grading_length} nonnegative entries, got {args.target}"
        )

    if args.dump_model:
        Path(args.dump_model).write_text(dump_model(model), encoding="utf-8")
        logger.info(f"Wrote quadratic model to {args.dump_model}")

    order = settings.truncation
    series = hilbert_affinized(model, args.target, order, jobs=settings.jobs)
    result: dict[str, Any] = {
        "series": series.to_records(),
        "pairs": [list(p) for p in model.pair_names()],
        "aux": [{"name": n, "monomial": m} for n, m in model.aux_names()],
    }
    text = [f"Hilbert series at M={args.target} through q^{order}:"] + series_lines(series)
    if not series:
        result["note"] = "no monomials of this multidegree"
        text.append("(no monomials of this multidegree)")
    return CommandOutput(
        command="hilbert",
        params={**source, "M": list(args.target), "N": order},
        result=result,
        text=text,
    )


def cmd_hl(args: argparse.Namespace) -> CommandOutput:
    """Table mu -> M_{mu, lambda}(q)."""
    algebra = algebra_from_name(args.algebra)
    lam = algebra.highest_weight(args.lam)
    require_supported_pattern(algebra, lam)
    hl_map = modified_hl(algebra, lam)
    records = [{"mu": mu.to_list(), "poly": list(poly.coeffs)} for mu, poly in hl_map.items()]
    text = [f"Modified Hall-Littlewood polynomials for {algebra.name}, lambda={lam}:"]
    text += [f"  {mu}: {poly}" for mu, poly in hl_map.items()]
    return CommandOutput(
        command="hl",
        params={"algebra": algebra.name, "lambda": lam.to_list()},
        result=records,
        text=text,
    )


def _explicit_params(args: argparse.Namespace) -> dict[str, Any]:
    values = {
        "M1": args.M1,
        "M2": args.M2,
        "M": args.target,
        "algebra": args.algebra,
        "case": args.case,
    }
    return {k: v for k, v in values.items() if v is not None}


def _single_spec(selector: str, params: dict[str, Any], order: int | None) -> CheckSpec:
    if selector == "all":
        raise ConfigurationError("'check all' takes no check parameters")
    missing = [k for k in _REQUIRED[selector] if k not in params]
    if missing:
        raise ConfigurationError(f"check {selector} needs {', '.join('--' + k for k in missing)}")
    settings = get_settings()
    if order is None:
        order = (
            settings.identity_order if selector in IDENTITY_CHECKS else settings.conjecture_order
        )
    kept = {k: params[k] for k in _REQUIRED[selector]}
    return CheckSpec(selector, kept, order)


def cmd_check(args: argparse.Namespace) -> CommandOutput:
    """Run one check from explicit parameters, or a selector's share of the acceptance grid.

    For grid runs a single --N replaces both the identity and the conjecture order.
    """
    settings = get_settings()
    params = _explicit_params(args)
    if params:
        specs = [_single_spec(args.selector, params, args.order)]
    else:
        specs = select(default_suite(args.order, args.order), args.selector)

    reports = run_checks(specs, jobs=settings.jobs)
    failed = sum(not r.passed for r in reports)
    text = [report_line(r) for r in reports]
    text.append(f"{len(reports) - failed} passed, {failed} failed")
    return CommandOutput(
        command="check",
        params={"selector": args.selector, **params, "N": args.order},
        result=[r.to_record() for r in reports],
        text=text,
        exit_code=1 if failed else 0,
    )


def cmd_fixtures_list(args: argparse.Namespace) -> CommandOutput:
    """Name, algebra, provenance, generator count and resolution presence per fixture."""
    records = []
    for fixture in list_fixtures():
        spec = fixture.spec
        records.append(
            {
                "name": fixture.name,
                "algebra": fixture.algebra.name,
                "provenance": fixture.provenance.value,
                "generators": len(spec.generators) or len(spec.lt_generators),
                "resolution": spec.resolution is not None,
            }
        )
    text = [
        f"{r['name']:6} {r['algebra']:5} {r['provenance']:12} "
        f"generators={r['generators']} resolution={'yes' if r['resolution'] else 'no'}"
        for r in records
    ]
    return CommandOutput(command="fixtures list", params={}, result=records, text=text)


def dispatch(args: argparse.Namespace) -> CommandOutput:
    if args.command == "groebner":
        return cmd_groebner(args)
    if args.command == "hilbert":
        return cmd_hilbert(args)
    if args.command == "hl":
        return cmd_hl(args)
    if args.command == "check":
        return cmd_check(args)
    if args.command == "fixtures":
        return cmd_fixtures_list(args)
    raise ConfigurationError(f"Unknown command '{args.command}'")

