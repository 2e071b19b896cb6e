"""Report assembly and the fixed JSON/CSV number formatting."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Iterable

from .critical import critical_determinant, scaled_critical_determinant
from .errors import DomainError, NotSmooth
from .lattice import Ball, Lattice2, Point2, check_exponent, is_admissible
from .packing import (
    ball_volume,
    central_density,
    circumscribed_hexagon_area,
    domain_critical_lattice,
    inscribed_hexagon_area,
    packing_density,
    packing_lattice,
    verify_packing,
)
from .shells import arc_length, count_integer_points, jarnik_bound, paper_length_integral

__all__ = [
    "REPORT_FIELDS",
    "SweepSpec",
    "format_real",
    "dumps",
    "report_record",
    "cmd_report",
    "sweep_rows",
    "to_csv",
    "cmd_sweep",
    "jarnik_table",
]

REPORT_FIELDS = (
    "p", "m", "class", "branch", "sigma_p", "tau_p", "delta0", "delta1", "delta",
    "scaled_delta", "volume", "density", "central_density", "kappa_optimal",
    "kappa_sufficient", "hexagon_inscribed", "hexagon_circumscribed", "perimeter",
    "paper_integral", "verified",
)

MAX_DIGITS = 15


def format_real(x: float) -> str:
    """Shortest representation that round-trips, capped at 15 significant
    digits. Infinity is spelled ``inf``."""
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        raise DomainError("cannot format NaN")
    if x == 0.0:
        return "0"
    for digits in range(1, MAX_DIGITS + 1):
        text = f"{x:.{digits}g}"
        if float(text) == x:
            return text
    return f"{x:.{MAX_DIGITS}g}"


def _json_value(value: Any) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isinf(value):
            return '"inf"' if value > 0 else '"-inf"'
        return format_real(value)
    if isinstance(value, str):
        out = value.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
        return f'"{out}"'
    if isinstance(value, Point2):
        return _json_value([value.x, value.y])
    if isinstance(value, Lattice2):
        return _json_value([value.b1, value.b2])
    if isinstance(value, dict):
        items = ", ".join(f"{_json_value(str(k))}: {_json_value(v)}" for k, v in value.items())
        return "{" + items + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_json_value(v) for v in value) + "]"
    raise TypeError(f"cannot serialise {type(value).__name__}")


def dumps(obj: Any) -> str:
    """JSON text with insertion-ordered keys and :func:`format_real` numbers."""
    return _json_value(obj)


def report_record(p: float, m: int = 0) -> dict[str, Any]:
    """All reported quantities for ``2**m D_p``, keyed in ``REPORT_FIELDS`` order."""
    p = check_exponent(p)
    if int(m) != m or m < 0:
        raise DomainError(f"m must be a non-negative integer, got {m}")
    m = int(m)
    crit = critical_determinant(p)
    try:
        outer = circumscribed_hexagon_area(p, m)
    except NotSmooth:
        outer = None
    verified = (
        is_admissible(domain_critical_lattice(p, m), Ball(p, m)).admissible
        and verify_packing(packing_lattice(p, m), p, m).admissible
    )
    return {
        "p": p,
        "m": m,
        "class": crit.ball_class.value,
        "branch": int(crit.branch),
        "sigma_p": crit.sigma_p,
        "tau_p": crit.tau_p,
        "delta0": crit.delta0,
        "delta1": crit.delta1,
        "delta": crit.delta,
        "scaled_delta": scaled_critical_determinant(p, m),
        "volume": ball_volume(p, m),
        "density": packing_density(p, m),
        "central_density": central_density(p),
        "kappa_optimal": crit.kappa_optimal,
        "kappa_sufficient": crit.kappa_sufficient,
        "hexagon_inscribed": inscribed_hexagon_area(p, m),
        "hexagon_circumscribed": outer,
        "perimeter": arc_length(p),
        "paper_integral": paper_length_integral(p),
        "verified": verified,
    }


def cmd_report(p: float, m: int = 0) -> str:
    return dumps(report_record(p, m)) + "\n"


@dataclass(frozen=True)
class SweepSpec:
    p_from: float
    p_to: float
    steps: int
    m: int = 0
    outputs: tuple[str, ...] = ("p", "delta")

    def __post_init__(self) -> None:
        if not (self.p_from >= 1.0 and math.isfinite(self.p_to)):
            raise DomainError("sweep needs 1 <= p_from and a finite p_to")
        if self.p_to < self.p_from:
            raise DomainError("sweep needs p_to >= p_from")
        if int(self.steps) != self.steps or self.steps < 1:
            raise DomainError("steps must be a positive integer")
        if int(self.m) != self.m or self.m < 0:
            raise DomainError("m must be a non-negative integer")
        unknown = [c for c in self.outputs if c not in REPORT_FIELDS]
        if unknown or not self.outputs:
            raise DomainError(f"unknown or empty columns: {unknown}")

    def grid(self) -> list[float]:
        span = self.p_to - self.p_from
        return [
            self.p_to if i == self.steps else self.p_from + span * i / self.steps
            for i in range(self.steps + 1)
        ]


def sweep_rows(spec: SweepSpec) -> list[dict[str, Any]]:
    rows = []
    for p in spec.grid():
        record = report_record(p, spec.m)
        rows.append({c: record[c] for c in spec.outputs})
    return rows


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_real(value)
    return str(value)


def to_csv(columns: Iterable[str], rows: Iterable[dict[str, Any]]) -> str:
    columns = list(columns)
    lines = [",".join(columns)]
    lines += [",".join(_csv_cell(row[c]) for c in columns) for row in rows]
    return "\n".join(lines) + "\n"


def cmd_sweep(spec: SweepSpec, fmt: str = "csv") -> str:
    rows = sweep_rows(spec)
    if fmt == "csv":
        return to_csv(spec.outputs, rows)
    if fmt == "json":
        return dumps(rows) + "\n"
    raise DomainError(f"unknown format {fmt!r}")


def jarnik_table(p: int, n_max: int) -> list[dict[str, Any]]:
    """Exact counts on ``N C_p`` beside Jarnik's leading term for ``N <= n_max``.

    The bound is only tabulated: its lower-order constant is unknown.
    """
    ell = arc_length(p)
    return [
        {
            "N": n,
            "count": count_integer_points(p, n),
            "length": n * ell,
            "jarnik_leading": jarnik_bound(n * ell),
        }
        for n in range(1, n_max + 1)
    ]
