"""Optimal lattice packings of ``2**m D_p``, their densities and hexagons.

A lattice packs ``2**m D_p`` exactly when it is admissible for
``2**(m+1) D_p``, so the densest lattice packing is the critical lattice of
the doubled domain, ``2**(m+1)`` times the critical lattice of ``D_p``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .critical import (
    Branch,
    critical_lattice,
    davis_constant,
    scaled_critical_determinant,
    sigma_p,
    tau_p,
)
from .errors import DomainError, NotSmooth, TangentDegenerate
from .lattice import (
    Admissibility,
    Ball,
    Lattice2,
    Point2,
    check_exponent,
    is_admissible,
    lattice_det,
)
from .numerics import Tolerance, log_gamma

__all__ = [
    "PackingReport",
    "ball_volume",
    "shell_basis",
    "packing_branch",
    "domain_critical_lattice",
    "packing_lattice",
    "packing_density",
    "central_density",
    "verify_packing",
    "hexagon_vertices",
    "shoelace_area",
    "inscribed_hexagon_area",
    "circumscribed_hexagon_area",
    "packing_report",
]

# critical lattices of the two polygonal limits, from the classical tilings
_L1_BASIS = Lattice2(Point2(0.5, 0.5), Point2(0.0, 1.0))
_LINF_BASIS = Lattice2(Point2(1.0, 1.0), Point2(0.0, 1.0))


def _check_m(m: int) -> int:
    if int(m) != m or m < 0:
        raise DomainError(f"m must be a non-negative integer, got {m}")
    return int(m)


def ball_volume(p: float, m: int = 0) -> float:
    """Area of ``2**m D_p``: ``4**m * 4 Gamma(1 + 1/p)**2 / Gamma(1 + 2/p)``."""
    p, m = check_exponent(p), _check_m(m)
    if math.isinf(p):
        return 4.0**m * 4.0
    return 4.0**m * 4.0 * math.exp(2.0 * log_gamma(1.0 + 1.0 / p) - log_gamma(1.0 + 2.0 / p))


def packing_branch(p: float) -> Branch:
    """Branch used for packings: the ``(1, 0)`` lattice for Davis balls
    (``2 <= p < p0``), the other one for Minkowski and Chebyshev-Cohn balls.

    This agrees with the critical-determinant branch except at the tie
    points ``p = 2`` and ``p = p0``, where both lattices are critical.
    """
    p = check_exponent(p)
    return Branch.BRANCH0 if 2.0 <= p < davis_constant() else Branch.BRANCH1


def _unit_critical_lattice(p: float) -> Lattice2:
    if p == 1.0:
        return _L1_BASIS
    if math.isinf(p):
        return _LINF_BASIS
    return critical_lattice(p, packing_branch(p))


def shell_basis(p: float) -> Lattice2:
    """Critical basis of ``D_p`` whose vectors and their sum lie on the curve.

    For ``p = inf`` the listed basis ``{(1, 1), (0, 1)}`` is replaced by the
    equivalent ``{(1, 0), (0, 1)}``, which has that property.
    """
    p = check_exponent(p)
    if math.isinf(p):
        return Lattice2(Point2(1.0, 0.0), Point2(0.0, 1.0))
    return critical_lattice(p, packing_branch(p))


def domain_critical_lattice(p: float, m: int = 0) -> Lattice2:
    """Critical lattice of ``2**m D_p``; the polygonal limits use their
    classical tiling lattices."""
    p, m = check_exponent(p), _check_m(m)
    return _unit_critical_lattice(p).scaled(2.0**m)


def packing_lattice(p: float, m: int = 0) -> Lattice2:
    """Densest packing lattice of ``2**m D_p``: the critical lattice of the
    doubled domain ``2**(m+1) D_p``."""
    return domain_critical_lattice(p, _check_m(m) + 1)


def packing_density(p: float, m: int = 0) -> float:
    p, m = check_exponent(p), _check_m(m)
    return ball_volume(p, m) / scaled_critical_determinant(p, m + 1)


def central_density(p: float) -> float:
    """Reciprocal critical determinant of ``2 D_p``, from the branch formulas."""
    p = check_exponent(p)
    if math.isinf(p):
        return 0.25
    if packing_branch(p) is Branch.BRANCH0:
        return 0.5 / sigma_p(p)
    t = tau_p(p)
    return 4.0 ** (1.0 / p - 1.0) * (1.0 - t) / (1.0 + t)


def verify_packing(
    L: Lattice2, p: float, m: int = 0, tol: Tolerance | None = None
) -> Admissibility:
    """Translates of ``2**m D_p`` by ``L`` overlap iff ``L`` is not admissible
    for ``2**(m+1) D_p``; a witness is a lattice vector joining two
    overlapping copies."""
    return is_admissible(L, Ball(p, _check_m(m) + 1), tol)


def hexagon_vertices(L: Lattice2) -> list[Point2]:
    """``b1, b1 + b2, b2, -b1, -b1 - b2, -b2`` in that cyclic order."""
    s = L.b1 + L.b2
    return [L.b1, s, L.b2, -L.b1, -s, -L.b2]


def shoelace_area(vertices: list[Point2]) -> float:
    n = len(vertices)
    twice = 0.0
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        twice += a.x * b.y - b.x * a.y
    return 0.5 * abs(twice)


def inscribed_hexagon_area(p: float, m: int = 0) -> float:
    """Area of the hexagon on the six shell points of the critical lattice of
    ``2**m D_p``. Always equal to three times the lattice determinant."""
    p, m = check_exponent(p), _check_m(m)
    return shoelace_area(hexagon_vertices(shell_basis(p).scaled(2.0**m)))


def _normal(pt: Point2, p: float) -> Point2:
    # gradient direction of |x|^p + |y|^p
    return Point2(
        math.copysign(abs(pt.x) ** (p - 1.0), pt.x),
        math.copysign(abs(pt.y) ** (p - 1.0), pt.y),
    )


def circumscribed_hexagon_area(p: float, m: int = 0) -> float:
    """Area of the hexagon cut out by the tangents to ``2**m C_p`` at the six
    shell points of its critical lattice."""
    p, m = check_exponent(p), _check_m(m)
    if p == 1.0 or math.isinf(p):
        raise NotSmooth(f"tangent lines are not unique on C_p for p = {p}")
    contacts = hexagon_vertices(shell_basis(p).scaled(2.0**m))
    lines = []
    for pt in contacts:
        n = _normal(pt, p)
        lines.append((n, n.x * pt.x + n.y * pt.y))
    corners = []
    for i in range(6):
        (n1, c1), (n2, c2) = lines[i], lines[(i + 1) % 6]
        det = n1.x * n2.y - n1.y * n2.x
        scale = math.hypot(n1.x, n1.y) * math.hypot(n2.x, n2.y)
        if abs(det) <= 1e-12 * scale:
            raise TangentDegenerate(
                f"tangents at {contacts[i]} and {contacts[(i + 1) % 6]} are parallel"
            )
        corners.append(Point2((c1 * n2.y - c2 * n1.y) / det, (n1.x * c2 - n2.x * c1) / det))
    return shoelace_area(corners)


@dataclass(frozen=True)
class PackingReport:
    p: float
    m: int
    volume: float
    packing_lattice: Lattice2
    density: float
    central_density: float
    verified: bool
    hexagon_inscribed_area: float
    hexagon_circumscribed_area: float | None


def packing_report(p: float, m: int = 0) -> PackingReport:
    p, m = check_exponent(p), _check_m(m)
    L = packing_lattice(p, m)
    volume = ball_volume(p, m)
    try:
        outer = circumscribed_hexagon_area(p, m)
    except NotSmooth:
        outer = None
    return PackingReport(
        p=p,
        m=m,
        volume=volume,
        packing_lattice=L,
        density=volume / lattice_det(L),
        central_density=central_density(p),
        verified=verify_packing(L, p, m).admissible,
        hexagon_inscribed_area=inscribed_hexagon_area(p, m),
        hexagon_circumscribed_area=outer,
    )
