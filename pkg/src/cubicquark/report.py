"""Structured verification results and their JSON encoding."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"


@dataclass
class CheckReport:
    name: str
    status: str
    residual: float
    samples: int = 1
    seed: int = 0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def line(self) -> str:
        return f"{self.name:<44} {self.status.upper():<4}  residual={self.residual:.3e}  samples={self.samples}"


def make_report(name, ok: bool, residual, samples=1, seed=0, **details) -> CheckReport:
    residual = float(residual)
    if not math.isfinite(residual):
        details["residual_nonfinite"] = str(residual)
        residual = float("inf")
        ok = False
    return CheckReport(name, PASS if ok else FAIL, residual, samples, seed, details)


def _number(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    return format(x, ".17g")


def report_to_json(r: CheckReport) -> str:
    return (
        "{"
        f'"name": {json.dumps(r.name)}, '
        f'"status": {json.dumps(r.status)}, '
        f'"residual": {_number(r.residual)}, '
        f'"samples": {int(r.samples)}, '
        f'"seed": {int(r.seed)}, '
        f'"details": {json.dumps(r.details, sort_keys=True)}'
        "}"
    )


def reports_to_json(reports) -> str:
    """JSON array of reports in the given order; residuals use 17 significant digits."""
    if not reports:
        return "[]\n"
    return "[\n  " + ",\n  ".join(report_to_json(r) for r in reports) + "\n]\n"


def report_from_dict(d: dict) -> CheckReport:
    residual = d["residual"]
    return CheckReport(d["name"], d["status"], float("inf") if residual is None else float(residual),
                       d["samples"], d["seed"], d.get("details", {}))
