"""Deterministic SVG diagrams of the optimal lattice packing."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .lattice import Point2, check_exponent
from .packing import packing_lattice

__all__ = ["SvgSpec", "outline", "packing_centers", "render_svg"]

OUTLINE_POINTS = 256
MARGIN = 0.05


@dataclass(frozen=True)
class SvgSpec:
    p: float
    m: int = 0
    copies: int = 3
    width_px: int = 512

    def __post_init__(self) -> None:
        check_exponent(self.p)
        if int(self.m) != self.m or self.m < 0:
            raise DomainError("m must be a non-negative integer")
        if int(self.copies) != self.copies or self.copies < 1:
            raise DomainError("copies must be a positive integer")
        if int(self.width_px) != self.width_px or self.width_px < 64:
            raise DomainError("width_px must be an integer >= 64")


def outline(p: float, radius: float) -> list[Point2]:
    """Boundary of ``radius * D_p``: the polygon itself for ``p`` in
    ``{1, inf}``, otherwise 256 radially projected points."""
    p = check_exponent(p)
    if p == 1.0:
        return [Point2(radius, 0), Point2(0, radius), Point2(-radius, 0), Point2(0, -radius)]
    if math.isinf(p):
        return [Point2(radius, radius), Point2(-radius, radius),
                Point2(-radius, -radius), Point2(radius, -radius)]
    pts = []
    for k in range(OUTLINE_POINTS):
        theta = 2.0 * math.pi * k / OUTLINE_POINTS
        c, s = math.cos(theta), math.sin(theta)
        norm = (abs(c) ** p + abs(s) ** p) ** (1.0 / p)
        pts.append(Point2(radius * c / norm, radius * s / norm))
    return pts


def packing_centers(p: float, m: int, copies: int) -> list[Point2]:
    L = packing_lattice(p, m)
    return [L.point(a, c) for a in range(copies) for c in range(copies)]


def _num(x: float) -> str:
    text = f"{x:.4f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def render_svg(spec: SvgSpec) -> str:
    radius = float(2**spec.m)
    shape = outline(spec.p, radius)
    centers = packing_centers(spec.p, spec.m, spec.copies)

    xs = [c.x + q.x for c in centers for q in shape]
    ys = [c.y + q.y for c in centers for q in shape]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    pad = MARGIN * max(x1 - x0, y1 - y0)
    x0, x1, y0, y1 = x0 - pad, x1 + pad, y0 - pad, y1 + pad
    w, h = x1 - x0, y1 - y0
    height_px = max(1, round(spec.width_px * h / w))
    stroke = 0.01 * max(w, h)
    dot = 0.02 * radius

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width_px}" height="{height_px}" '
        f'viewBox="{_num(x0)} {_num(-y1)} {_num(w)} {_num(h)}">',
        f'<g fill="none" stroke="#1f4e79" stroke-width="{_num(stroke)}">',
    ]
    # y is flipped so the picture has the usual orientation
    for c in centers:
        pts = " ".join(f"{_num(c.x + q.x)},{_num(-(c.y + q.y))}" for q in shape)
        lines.append(f'<polygon class="ball" points="{pts}"/>')
    lines.append("</g>")
    lines.append('<g fill="#c0392b">')
    for c in centers:
        lines.append(f'<circle class="center" cx="{_num(c.x)}" cy="{_num(-c.y)}" r="{_num(dot)}"/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
