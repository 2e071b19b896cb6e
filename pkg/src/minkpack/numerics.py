"""Scalar numerical kernels: bracketed root finding, log-gamma and quadrature.

Everything here is a pure function of its arguments. The only configurable
state is the default tolerance, which may be overridden through the
``MINKPACK_ABS_TOL`` environment variable.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, NoBracket, NoConvergence

__all__ = [
    "Tolerance",
    "DEFAULT_TOLERANCE",
    "default_tolerance",
    "find_root",
    "log_gamma",
    "integrate",
]


@dataclass(frozen=True)
class Tolerance:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_iter: int = 200

    def __post_init__(self) -> None:
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise DomainError(f"tolerances must be positive: {self}")
        if self.max_iter < 1:
            raise DomainError(f"max_iter must be >= 1: {self}")


DEFAULT_TOLERANCE = Tolerance()

ENV_ABS_TOL = "MINKPACK_ABS_TOL"


def default_tolerance() -> Tolerance:
    """Return the process-wide default, honouring ``MINKPACK_ABS_TOL``."""
    raw = os.environ.get(ENV_ABS_TOL)
    if not raw:
        return DEFAULT_TOLERANCE
    try:
        value = float(raw)
    except ValueError as exc:
        raise DomainError(f"{ENV_ABS_TOL}={raw!r} is not a number") from exc
    return Tolerance(abs_tol=value, rel_tol=DEFAULT_TOLERANCE.rel_tol,
                     max_iter=DEFAULT_TOLERANCE.max_iter)


# ---------------------------------------------------------------------------
# root finding
# ---------------------------------------------------------------------------

def find_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: Tolerance | None = None,
) -> float:
    """Find a zero of ``f`` in ``[lo, hi]`` with Brent's method.

    Bisection is combined with secant and inverse quadratic interpolation
    steps; the bracket is kept at every iteration so convergence is
    guaranteed for continuous ``f``.

    Raises:
        NoBracket: ``f(lo)`` and ``f(hi)`` share a sign and neither endpoint
            is a root within ``tol.abs_tol``.
        NoConvergence: ``tol.max_iter`` iterations were not enough.
    """
    tol = tol or default_tolerance()
    if not lo < hi:
        raise DomainError(f"empty bracket [{lo}, {hi}]")

    a, b = float(lo), float(hi)
    fa, fb = f(a), f(b)
    if abs(fa) <= tol.abs_tol and abs(fa) <= abs(fb):
        return a
    if abs(fb) <= tol.abs_tol:
        return b
    if fa * fb > 0:
        raise NoBracket(f"f({a})={fa} and f({b})={fb} have the same sign")

    c, fc = a, fa
    d = e = b - a
    for _ in range(tol.max_iter):
        if fb * fc > 0:
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb

        width_tol = 0.5 * (tol.rel_tol * abs(b) + tol.abs_tol)
        mid = 0.5 * (c - b)
        if abs(fb) <= tol.abs_tol or abs(mid) <= width_tol:
            return b

        if abs(e) >= width_tol and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                # secant
                num = 2.0 * mid * s
                den = 1.0 - s
            else:
                # inverse quadratic interpolation
                q = fa / fc
                r = fb / fc
                num = s * (2.0 * mid * q * (q - r) - (b - a) * (r - 1.0))
                den = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if num > 0:
                den = -den
            else:
                num = -num
            if 2.0 * num < min(3.0 * mid * den - abs(width_tol * den), abs(e * den)):
                e, d = d, num / den
            else:
                d = e = mid
        else:
            d = e = mid

        a, fa = b, fb
        b += d if abs(d) > width_tol else math.copysign(width_tol, mid)
        fb = f(b)

    raise NoConvergence(f"find_root: no convergence in {tol.max_iter} iterations")


# ---------------------------------------------------------------------------
# log-gamma
# ---------------------------------------------------------------------------

_EULER_GAMMA = 0.57721566490153286061

# zeta(k) - 1 for k = 2, 3, ...; coefficients of the Taylor series of
# ln Gamma about 2.
_ZETA_MINUS_ONE = (
    0.64493406684822643647, 0.2020569031595942854, 0.082323233711138191516,
    0.036927755143369926331, 0.017343061984449139715, 0.0083492773819228268398,
    0.0040773561979443393787, 0.0020083928260822144179, 0.00099457512781808533715,
    0.0004941886041194645587, 0.00024608655330804829864, 0.00012271334757848914675,
    6.1248135058704829259e-5, 3.0588236307020493552e-5, 1.5282259408651871733e-5,
    7.6371976378997622736e-6, 3.8172932649998398565e-6, 1.9082127165539389257e-6,
    9.5396203387279611315e-7, 4.7693298678780646312e-7, 2.3845050272773299e-7,
    1.1921992596531107307e-7, 5.9608189051259479612e-8, 2.9803503514652280186e-8,
    1.4901554828365041235e-8, 7.450711789835429492e-9, 3.7253340247884570548e-9,
    1.8626597235130490064e-9, 9.3132743241966818287e-10, 4.656629065033784073e-10,
)

# B_2k / (2k (2k - 1))
_STIRLING = (
    1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0, 1.0 / 1188.0,
    -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0,
)

_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)


def _log_gamma_near_two(z: float) -> float:
    # ln Gamma(2 + z) for |z| <= 1/2
    acc = 0.0
    for k in range(len(_ZETA_MINUS_ONE) + 1, 1, -1):
        acc = acc * z + (-1) ** k * _ZETA_MINUS_ONE[k - 2] / k
    return z * ((1.0 - _EULER_GAMMA) + z * acc)


def log_gamma(x: float) -> float:
    """Natural logarithm of the Gamma function for real ``x > 0``.

    Arguments are moved into ``[1.5, 2.5]`` by the functional equation and
    evaluated with the Taylor series about 2, whose coefficients are
    ``zeta(k) - 1``. Large arguments use the Stirling series. The zeros at
    ``x = 1`` and ``x = 2`` are reproduced exactly.
    """
    if not x > 0 or math.isnan(x):
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    if math.isinf(x):
        return math.inf
    if x >= 10.0:
        inv = 1.0 / x
        inv2 = inv * inv
        series = 0.0
        for c in reversed(_STIRLING):
            series = series * inv2 + c
        return (x - 0.5) * math.log(x) - x + _HALF_LOG_TWO_PI + series * inv
    if x < 1.5:
        # ln Gamma(x) = ln Gamma(x + 1) - ln x; x - 1 is exact here
        shift = 0.0
        while x < 0.5:
            shift += math.log(x)
            x += 1.0
        return _log_gamma_near_two(x - 1.0) - math.log1p(x - 1.0) - shift
    prod = 1.0
    while x > 2.5:
        x -= 1.0
        prod *= x
    return _log_gamma_near_two(x - 2.0) + math.log(prod)


# ---------------------------------------------------------------------------
# quadrature
# ---------------------------------------------------------------------------

MAX_DEPTH = 50


def integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: Tolerance | None = None,
) -> float:
    """Adaptive Simpson quadrature of ``f`` over ``[a, b]``.

    The local tolerance halves with each bisection but never drops below a
    few ulps of the running integral, so integrable endpoint singularities
    such as ``(1 - y)**(1/4)`` terminate well inside the depth cap.

    Raises:
        NoConvergence: some subinterval still fails the error test at
            depth ``MAX_DEPTH``.
    """
    tol = tol or default_tolerance()
    if a > b:
        raise DomainError(f"integrate requires a <= b, got [{a}, {b}]")
    if a == b:
        return 0.0

    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = (b - a) * (fa + 4.0 * fm + fb) / 6.0
    floor = 16.0 * 2.220446049250313e-16 * max(abs(whole), 1e-300)

    def step(a, b, fa, fm, fb, whole, eps, depth):
        m = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        left = (m - a) * (fa + 4.0 * flm + fm) / 6.0
        right = (b - m) * (fm + 4.0 * frm + fb) / 6.0
        delta = left + right - whole
        if abs(delta) <= 15.0 * max(eps, floor) or not (a < lm < m < rm < b):
            return left + right + delta / 15.0
        if depth >= MAX_DEPTH:
            raise NoConvergence(
                f"integrate: depth cap {MAX_DEPTH} reached on [{a}, {b}]"
            )
        half = 0.5 * eps
        return (step(a, m, fa, flm, fm, left, half, depth + 1)
                + step(m, b, fm, frm, fb, right, half, depth + 1))

    return step(a, b, fa, fm, fb, whole, tol.abs_tol, 1)
