"""Command results and their text / structured rendering."""

import json
from typing import Any

from pydantic import BaseModel, Field

from app.groebner.models import MonomialOrder, Polynomial
from app.qseries.models import CharacterQSeries
from app.verify.models import CheckReport


class CommandOutput(BaseModel):
    """What a command produced: the structured record plus its text form and exit code."""

    command: str
    params: dict[str, Any] = Field(default_factory=dict)
    result: Any = None
    text: list[str] = Field(default_factory=list, exclude=True)
    exit_code: int = Field(default=0, exclude=True)


def render(output: CommandOutput, structured: bool) -> str:
    """Structured: one JSON record {command, params, result}, sorted keys, two-space indent."""
    if structured:
        return json.dumps(output.model_dump(mode="json"), indent=2, sort_keys=True)
    return "\n".join(output.text)


def polynomial_record(poly: Polynomial, order: MonomialOrder) -> dict[str, Any]:
    return {
        "terms": [
            {"coeff": c.to_quadruple(), "monomial": poly.ring.monomial_names(e)}
            for e, c in poly.sorted_terms(order)
        ],
        "text": str(poly.as_expr()),
    }


def series_lines(series: CharacterQSeries) -> list[str]:
    if not series:
        return [f"0 + O(q^{series.order + 1})"]
    return [f"{w}: {s}" for w, s in series.items()]


def report_line(report: CheckReport) -> str:
    params = " ".join(f"{k}={v}" for k, v in sorted(report.params.items()))
    head = f"{report.status.value.upper():4} {report.check} {params}"
    if report.order is not None:
        head += f" N={report.order}"
    if report.witness is not None:
        w = report.witness
        where = f"weight {w.weight} " if w.weight is not None else ""
        label = f"{w.label} " if w.label else ""
        head += f" | {label}{where}q^{w.power}: {w.lhs} != {w.rhs}"
    if report.detail:
        head += f" ({report.detail})"
    return head
