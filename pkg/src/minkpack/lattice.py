"""Planar lattices, p-norms and admissibility against scaled L^p balls."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import BudgetExceeded, Degenerate, DomainError
from .numerics import Tolerance, default_tolerance

__all__ = [
    "Point2",
    "Lattice2",
    "Ball",
    "BallClass",
    "Admissibility",
    "check_exponent",
    "pnorm_power",
    "lattice_det",
    "enumerate_nonzero_points",
    "is_admissible",
    "classify",
    "DEFAULT_POINT_CAP",
]

INF = math.inf
DEFAULT_POINT_CAP = 10**7


def check_exponent(p: float) -> float:
    p = float(p)
    if math.isnan(p) or p < 1.0:
        raise DomainError(f"exponent must satisfy p >= 1, got {p}")
    return p


@dataclass(frozen=True, slots=True)
class Point2:
    x: float
    y: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"non-finite point ({self.x}, {self.y})")

    def __add__(self, other: Point2) -> Point2:
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point2) -> Point2:
        return Point2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Point2:
        return Point2(-self.x, -self.y)

    def __mul__(self, s: float) -> Point2:
        return Point2(s * self.x, s * self.y)

    __rmul__ = __mul__

    def __iter__(self) -> Iterator[float]:
        yield self.x
        yield self.y


@dataclass(frozen=True, slots=True)
class Lattice2:
    """Lattice spanned by ``b1`` and ``b2``."""

    b1: Point2
    b2: Point2

    def __post_init__(self) -> None:
        if self.b1.x * self.b2.y - self.b1.y * self.b2.x == 0.0:
            raise Degenerate(f"basis {self.b1}, {self.b2} is degenerate")

    @classmethod
    def from_tuples(cls, b1: tuple[float, float], b2: tuple[float, float]) -> Lattice2:
        return cls(Point2(*b1), Point2(*b2))

    def scaled(self, s: float) -> Lattice2:
        return Lattice2(self.b1 * s, self.b2 * s)

    def point(self, a: int, c: int) -> Point2:
        return Point2(a * self.b1.x + c * self.b2.x, a * self.b1.y + c * self.b2.y)

    @property
    def signed_det(self) -> float:
        return self.b1.x * self.b2.y - self.b1.y * self.b2.x


@dataclass(frozen=True, slots=True)
class Ball:
    """The domain ``2**m * D_p``; ``p = math.inf`` is the square."""

    p: float
    m: int = 0

    def __post_init__(self) -> None:
        check_exponent(self.p)
        if int(self.m) != self.m or self.m < 0:
            raise DomainError(f"scale exponent must be a non-negative integer, got {self.m}")

    @property
    def radius(self) -> float:
        return float(2**self.m)

    def contains_strictly(self, pt: Point2, slack: float = 0.0) -> bool:
        r = self.radius
        return pnorm_power(Point2(pt.x / r, pt.y / r), self.p) < 1.0 - slack


class BallClass(str, enum.Enum):
    LIMIT_MINKOWSKI = "LimitMinkowski"
    MINKOWSKI = "Minkowski"
    DAVIS = "Davis"
    CHEBYSHEV_COHN = "ChebyshevCohn"
    LIMIT_CHEBYSHEV = "LimitChebyshev"


def pnorm_power(pt: Point2, p: float) -> float:
    """``|x|**p + |y|**p``, or ``max(|x|, |y|)`` when ``p`` is infinite."""
    p = check_exponent(p)
    ax, ay = abs(pt.x), abs(pt.y)
    if math.isinf(p):
        return max(ax, ay)
    return ax**p + ay**p


def lattice_det(L: Lattice2, tol: Tolerance | None = None) -> float:
    tol = tol or default_tolerance()
    det = abs(L.signed_det)
    if det <= tol.abs_tol:
        raise Degenerate(f"lattice determinant {det} is zero within {tol.abs_tol}")
    return det


def _coefficients(
    L: Lattice2, halfwidth: float, cap: int
) -> Iterator[tuple[int, int, Point2]]:
    if not halfwidth > 0:
        raise DomainError(f"box half-width must be positive, got {halfwidth}")
    det = L.signed_det
    # rows of the inverse basis matrix [[b1.x, b2.x], [b1.y, b2.y]]^-1
    ia = (L.b2.y / det, -L.b2.x / det)
    ic = (-L.b1.y / det, L.b1.x / det)
    corners = [(sx * halfwidth, sy * halfwidth) for sx in (-1, 1) for sy in (-1, 1)]
    a_vals = [ia[0] * x + ia[1] * y for x, y in corners]
    c_vals = [ic[0] * x + ic[1] * y for x, y in corners]
    a_lo, a_hi = math.floor(min(a_vals)) - 1, math.ceil(max(a_vals)) + 1
    c_lo, c_hi = math.floor(min(c_vals)) - 1, math.ceil(max(c_vals)) + 1
    size = (a_hi - a_lo + 1) * (c_hi - c_lo + 1)
    if size > cap:
        raise BudgetExceeded(f"enumeration window has {size} candidates (cap {cap})")
    for a in range(a_lo, a_hi + 1):
        for c in range(c_lo, c_hi + 1):
            if a == 0 and c == 0:
                continue
            pt = L.point(a, c)
            if abs(pt.x) <= halfwidth and abs(pt.y) <= halfwidth:
                yield a, c, pt


def enumerate_nonzero_points(
    L: Lattice2, box_halfwidth: float, cap: int = DEFAULT_POINT_CAP
) -> list[Point2]:
    """Nonzero lattice points inside the square ``|x|, |y| <= box_halfwidth``.

    Points come out in lexicographic order of their integer coordinates
    ``(a, c)`` with respect to the basis.
    """
    return [pt for _, _, pt in _coefficients(L, box_halfwidth, cap)]


class Admissibility(NamedTuple):
    admissible: bool
    witness: Point2 | None


def is_admissible(
    L: Lattice2,
    B: Ball,
    tol: Tolerance | None = None,
    cap: int = DEFAULT_POINT_CAP,
) -> Admissibility:
    """Check that no nonzero point of ``L`` lies strictly inside ``B``.

    Boundary contact is allowed: a point counts as interior only when its
    normalised p-norm is below ``1 - tol.abs_tol``. If the lattice is not
    admissible the witness is the deepest interior point, ties going to the
    larger ``x`` and then the larger ``y``.
    """
    tol = tol or default_tolerance()
    r = B.radius
    best = None
    best_key = None
    for _, _, pt in _coefficients(L, r, cap):
        value = pnorm_power(Point2(pt.x / r, pt.y / r), B.p)
        if value < 1.0 - tol.abs_tol:
            key = (round(value, 12), -pt.x, -pt.y)
            if best_key is None or key < best_key:
                best, best_key = pt, key
    return Admissibility(best is None, best)


def classify(p: float, p0: float | None = None) -> BallClass:
    """Name the ball class of ``D_p`` given the Davis constant ``p0``."""
    p = check_exponent(p)
    if p0 is None:
        from .critical import davis_constant

        p0 = davis_constant()
    if not 2.57 < p0 < 2.58:
        raise DomainError(f"Davis constant {p0} outside (2.57, 2.58)")
    if p == 1.0:
        return BallClass.LIMIT_MINKOWSKI
    if p < 2.0:
        return BallClass.MINKOWSKI
    if p < p0:
        return BallClass.DAVIS
    if math.isinf(p):
        return BallClass.LIMIT_CHEBYSHEV
    return BallClass.CHEBYSHEV_COHN
