"""Shells of critical lattices, theta coefficients and integer-point counts."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BudgetExceeded, DomainError, InconsistentInput, IntegerOverflow
from .lattice import Point2, check_exponent, pnorm_power
from .numerics import Tolerance, find_root, integrate

__all__ = [
    "Shell",
    "solve_shell",
    "theta_coefficients",
    "count_integer_points",
    "arc_length",
    "paper_length_integral",
    "jarnik_bound",
    "genus_c2d",
    "THETA_CAP",
]

THETA_CAP = 10**6
SCAN_POINTS = 2048
MERGE_TOL = 1e-8
MAX_INT_BITS = 512

_POLISH = Tolerance(abs_tol=1e-15, rel_tol=1e-15, max_iter=200)


@dataclass(frozen=True)
class Shell:
    points: list[Point2]
    p: float
    lattice_det: float


def _line_roots(residual, lo: float, hi: float) -> list[float]:
    """Isolate sign changes of ``residual`` on a uniform grid and polish."""
    roots = []
    xs = [lo + (hi - lo) * i / SCAN_POINTS for i in range(SCAN_POINTS + 1)]
    vals = [residual(x) for x in xs]
    for i in range(SCAN_POINTS):
        if vals[i] == 0.0:
            roots.append(xs[i])
        elif vals[i] * vals[i + 1] < 0.0:
            roots.append(find_root(residual, xs[i], xs[i + 1], _POLISH))
    if vals[-1] == 0.0:
        roots.append(xs[-1])
    return roots


def solve_shell(p: float, P: Point2, d: float) -> Shell:
    """Solve ``|P_x v - P_y u| = d`` together with ``|u|^p + |v|^p = 1``.

    For a point ``P`` of a critical lattice and ``d`` its determinant the
    solutions, together with ``P`` and ``-P``, are the six lattice points on
    the unit curve. They are returned sorted by polar angle.

    Raises:
        InconsistentInput: the system does not produce exactly six distinct
            points, which signals a wrong ``d`` or a ``P`` off the curve.
    """
    p = check_exponent(p)
    if not (p > 1.0 and math.isfinite(p)):
        raise DomainError(f"solve_shell needs finite p > 1, got {p}")
    if not d > 0:
        raise DomainError(f"d must be positive, got {d}")
    if abs(pnorm_power(P, p) - 1.0) > 1e-9:
        raise InconsistentInput(f"{P} is not on the unit curve for p = {p}")

    px, py = P.x, P.y
    found = [P, -P]
    for sign in (1.0, -1.0):
        rhs = sign * d
        if abs(py) >= abs(px):
            def residual(v, rhs=rhs):
                u = (px * v - rhs) / py
                return abs(u) ** p + abs(v) ** p - 1.0

            found += [Point2((px * v - rhs) / py, v) for v in _line_roots(residual, -1.0, 1.0)]
        else:
            def residual(u, rhs=rhs):
                v = (py * u + rhs) / px
                return abs(u) ** p + abs(v) ** p - 1.0

            found += [Point2(u, (py * u + rhs) / px) for u in _line_roots(residual, -1.0, 1.0)]

    distinct: list[Point2] = []
    for q in found:
        if all(max(abs(q.x - r.x), abs(q.y - r.y)) > MERGE_TOL for r in distinct):
            distinct.append(q)
    if len(distinct) != 6:
        raise InconsistentInput(
            f"expected 6 shell points, found {len(distinct)}; is d = {d} the critical determinant?"
        )
    distinct.sort(key=lambda q: math.atan2(q.y, q.x))
    return Shell(distinct, p, d)


def theta_coefficients(max_m: int, cap: int = THETA_CAP) -> list[int]:
    """``N_k = #{(x, y) in Z^2 : x^2 - xy + y^2 = k}`` for ``0 <= k <= max_m``."""
    if int(max_m) != max_m or max_m < 0:
        raise DomainError(f"max_m must be a non-negative integer, got {max_m}")
    if max_m > cap:
        raise BudgetExceeded(f"max_m = {max_m} exceeds cap {cap}")
    counts = [0] * (max_m + 1)
    # x^2 - xy + y^2 = (x - y/2)^2 + 3 y^2 / 4, so 3 y^2 <= 4 max_m
    y_max = math.isqrt(4 * max_m // 3)
    for y in range(-y_max, y_max + 1):
        # 4 Q = (2x - y)^2 + 3 y^2
        room = 4 * max_m - 3 * y * y
        if room < 0:
            continue
        w = math.isqrt(room)
        for x in range((y - w + 1) // 2, (y + w) // 2 + 1):
            q = x * x - x * y + y * y
            if q <= max_m:
                counts[q] += 1
    return counts


def _int_root(n: int, p: int) -> int:
    """Largest ``k >= 0`` with ``k**p <= n``, by exact integer bisection.

    A floating-point estimate only narrows the starting bracket; the
    invariant ``lo**p <= n < hi**p`` is checked in integers.
    """
    if p == 2:
        return math.isqrt(n)
    guess = int(round(float(n) ** (1.0 / p)))
    lo, hi = max(guess - 2, 0), guess + 2
    if lo**p > n:
        lo = 0
    while hi**p <= n:
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**p <= n:
            lo = mid
        else:
            hi = mid
    return lo


def count_integer_points(p: int, N: int) -> int:
    """Exact number of integer points on ``x^p + y^p = N^p`` for even ``p``."""
    if int(p) != p or p < 2 or p % 2:
        raise DomainError(f"p must be an even positive integer, got {p}")
    if int(N) != N or N < 1:
        raise DomainError(f"N must be a positive integer, got {N}")
    p, N = int(p), int(N)
    target = N**p
    if target.bit_length() > MAX_INT_BITS:
        raise IntegerOverflow(f"N^p has {target.bit_length()} bits (limit {MAX_INT_BITS})")
    total = 0
    for x in range(0, N + 1):
        rest = target - x**p
        y = _int_root(rest, p)
        if y**p != rest:
            continue
        # (±x, ±y) without double counting zeros
        total += (1 if x == 0 else 2) * (1 if y == 0 else 2)
    return total


def arc_length(p: float, tol: Tolerance | None = None) -> float:
    """Euclidean perimeter of ``C_p``.

    By symmetry the perimeter is eight times the arc from ``(1, 0)`` to the
    diagonal point ``(c, c)``, ``c = 2**(-1/p)``, parametrised by ``y`` so
    that ``|dx/dy| <= 1`` along it.
    """
    p = check_exponent(p)
    if math.isinf(p):
        return 8.0
    if p == 1.0:
        return 4.0 * math.sqrt(2.0)
    c = 2.0 ** (-1.0 / p)

    def speed(y: float) -> float:
        if y == 0.0:
            return 1.0
        rest = 1.0 - y**p
        slope = y ** (p - 1.0) * rest ** (1.0 / p - 1.0)
        return math.sqrt(1.0 + slope * slope)

    return 8.0 * integrate(speed, 0.0, c, tol)


def paper_length_integral(p: float, tol: Tolerance | None = None) -> float:
    """``4 * integral_0^1 (1 - y^p)^(1/p) dy``, which is the area of ``D_p``."""
    p = check_exponent(p)
    if math.isinf(p):
        return 4.0
    c = 2.0 ** (-1.0 / p)
    # quarter area = square [0, c]^2 plus two congruent slivers beyond it;
    # this avoids the vertical tangent at y = 1
    sliver = integrate(lambda y: (1.0 - y**p) ** (1.0 / p) - c if y < c else 0.0, 0.0, c, tol)
    return 4.0 * (c * c + 2.0 * sliver)


def jarnik_bound(ell: float) -> float:
    """Leading term ``3 (4 pi)**(-1/3) ell**(2/3)`` of Jarnik's bound."""
    if not ell > 0:
        raise DomainError(f"arc length must be positive, got {ell}")
    return 3.0 * (4.0 * math.pi) ** (-1.0 / 3.0) * ell ** (2.0 / 3.0)


def genus_c2d(d: int) -> int:
    """Genus ``(2d - 1)(d - 1)`` of the projective curve ``x^2d + y^2d = z^2d``."""
    if int(d) != d or d < 1:
        raise DomainError(f"d must be a positive integer, got {d}")
    return (2 * d - 1) * (d - 1)
