"""Critical determinants and critical lattices of the planar L^p balls.

Two families of admissible lattices with three pairs of points on the unit
curve compete for the minimum determinant:

* branch 0 contains ``(1, 0)``; its determinant is ``sigma_p / 2`` with
  ``sigma_p = (2**p - 1)**(1/p)``;
* branch 1 contains ``(-2**(-1/p), 2**(-1/p))``; its determinant is
  ``4**(-1/p) (1 + tau_p) / (1 - tau_p)`` where ``tau_p`` solves
  ``2 (1 - tau)**p = 1 + tau**p``.

Branch 1 is critical for ``1 <= p <= 2`` and ``p >= p0``, branch 0 on
``[2, p0]``, with ``p0 ~ 2.5725`` the Davis constant where the two meet.
"""

from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass

from .errors import DomainError
from .lattice import BallClass, Lattice2, Point2, check_exponent, classify
from .numerics import Tolerance, default_tolerance, find_root, log_gamma

__all__ = [
    "Branch",
    "CriticalReport",
    "sigma_p",
    "tau_p",
    "delta0",
    "delta1",
    "davis_constant",
    "select_branch",
    "critical_determinant",
    "kappa_constants",
    "critical_lattice",
    "tau_of_sigma",
    "delta_moduli",
    "ModuliSweep",
    "moduli_sweep",
    "scaled_critical_determinant",
]

INF = math.inf

# the defining constants are solved to a bracket of a few ulps, terminating on
# width rather than residual, so composed quantities stay accurate
_CONSTANT_TOL = Tolerance(abs_tol=1e-300, rel_tol=4.5e-16, max_iter=200)


class Branch(enum.IntEnum):
    BRANCH0 = 0
    BRANCH1 = 1


@dataclass(frozen=True)
class CriticalReport:
    p: float
    sigma_p: float
    tau_p: float
    delta0: float
    delta1: float
    delta: float
    branch: Branch
    ball_class: BallClass
    kappa_optimal: float
    kappa_sufficient: float


def _finite(p: float, name: str) -> float:
    p = check_exponent(p)
    if math.isinf(p):
        raise DomainError(f"{name} requires a finite exponent")
    return p


def sigma_p(p: float) -> float:
    """``(2**p - 1)**(1/p)``, evaluated as ``2 (1 - 2**-p)**(1/p)``.

    The limit value 2 is returned for ``p = inf``.
    """
    p = check_exponent(p)
    if math.isinf(p):
        return 2.0
    return 2.0 * math.exp(math.log1p(-(2.0**-p)) / p)


def _tau_equation(p: float):
    def g(t: float) -> float:
        return 2.0 * (1.0 - t) ** p - 1.0 - t**p

    return g


def tau_p(p: float, tol: Tolerance | None = None) -> float:
    """Root in ``[0, 1)`` of ``2 (1 - tau)**p = 1 + tau**p`` (0 at ``p = inf``)."""
    p = check_exponent(p)
    if math.isinf(p):
        return 0.0
    # g(0) = 1 and g(1) = -2 always bracket the root
    return find_root(_tau_equation(p), 0.0, 1.0, tol or _CONSTANT_TOL)


def delta0(p: float) -> float:
    return 0.5 * sigma_p(p)


def delta1(p: float, tol: Tolerance | None = None) -> float:
    p = check_exponent(p)
    if math.isinf(p):
        return 1.0
    t = tau_p(p, tol)
    return 4.0 ** (-1.0 / p) * (1.0 + t) / (1.0 - t)


_p0_lock = threading.Lock()
_p0_cache: float | None = None


def davis_constant() -> float:
    """The exponent in ``[2.5, 2.7]`` where both branch determinants agree."""
    global _p0_cache
    if _p0_cache is None:
        with _p0_lock:
            if _p0_cache is None:
                _p0_cache = find_root(
                    lambda p: delta1(p) - delta0(p), 2.5, 2.7, _CONSTANT_TOL
                )
    return _p0_cache


def select_branch(p: float) -> Branch:
    p = check_exponent(p)
    if 2.0 < p <= davis_constant():
        return Branch.BRANCH0
    return Branch.BRANCH1


def kappa_constants(p: float) -> tuple[float, float]:
    """Return ``(kappa_optimal, kappa_sufficient)``.

    ``kappa_sufficient`` is Minkowski's convex-body bound
    ``Gamma(1 + 2/p)**(1/2) / Gamma(1 + 1/p)``; ``kappa_optimal`` is the sharp
    ``Delta(D_p)**(-p/2)``.
    """
    p = _finite(p, "kappa_constants")
    sufficient = math.exp(0.5 * log_gamma(1.0 + 2.0 / p) - log_gamma(1.0 + 1.0 / p))
    optimal = _branch_delta(p, select_branch(p)) ** (-0.5 * p)
    return optimal, sufficient


def _branch_delta(p: float, branch: Branch) -> float:
    return delta0(p) if branch is Branch.BRANCH0 else delta1(p)


def critical_determinant(p: float) -> CriticalReport:
    p = check_exponent(p)
    branch = select_branch(p)
    s, t = sigma_p(p), tau_p(p)
    d0, d1 = delta0(p), delta1(p)
    delta = d0 if branch is Branch.BRANCH0 else d1
    if math.isinf(p):
        # Minkowski's bound degenerates to 1 = Delta**0 at the square
        kappa_opt = kappa_suf = 1.0
    else:
        kappa_opt, kappa_suf = kappa_constants(p)
    return CriticalReport(
        p=p, sigma_p=s, tau_p=t, delta0=d0, delta1=d1, delta=delta,
        branch=branch, ball_class=classify(p, davis_constant()),
        kappa_optimal=kappa_opt, kappa_sufficient=kappa_suf,
    )


def _basis(p: float, t: float, s: float) -> Lattice2:
    a = (1.0 + t**p) ** (-1.0 / p)
    b = (1.0 + s**p) ** (-1.0 / p)
    return Lattice2(Point2(a, t * a), Point2(-b, s * b))


def critical_lattice(p: float, branch: Branch) -> Lattice2:
    """Critical lattice of ``D_p`` on the given branch.

    Both basis vectors and their sum lie on the unit curve.
    """
    p = _finite(p, "critical_lattice")
    branch = Branch(branch)
    if branch is Branch.BRANCH0:
        return Lattice2(Point2(1.0, 0.0), Point2(-0.5, 0.5 * sigma_p(p)))
    t = tau_p(p)
    a = (1.0 + t**p) ** (-1.0 / p)
    c = 2.0 ** (-1.0 / p)
    return Lattice2(Point2(a, t * a), Point2(-c, c))


def _third_point_residual(p: float, s: float):
    b = (1.0 + s**p) ** (-1.0 / p)

    def residual(t: float) -> float:
        a = (1.0 + t**p) ** (-1.0 / p)
        return abs(a - b) ** p + (t * a + s * b) ** p - 1.0

    return residual


def _check_moduli(p: float, s: float) -> tuple[float, float]:
    p = _finite(p, "moduli")
    if not p > 1.0:
        raise DomainError(f"moduli space needs p > 1, got {p}")
    sp = sigma_p(p)
    if not 1.0 <= s <= sp + 1e-12:
        raise DomainError(f"sigma={s} outside [1, {sp}]")
    return p, min(s, sp)


def tau_of_sigma(p: float, sigma: float, tol: Tolerance | None = None) -> float:
    """The ``tau`` putting ``lambda1 + lambda2`` on the unit curve.

    Here ``lambda1 = A (1, tau)`` and ``lambda2 = B (-1, sigma)`` with
    ``A = (1 + tau**p)**(-1/p)`` and ``B = (1 + sigma**p)**(-1/p)``.
    The search runs over ``[0, tau_p + 1e-9]``.
    """
    p, sigma = _check_moduli(p, sigma)
    return find_root(_third_point_residual(p, sigma), 0.0, tau_p(p) + 1e-9, tol)


def delta_moduli(p: float, sigma: float, tol: Tolerance | None = None) -> float:
    """Determinant of the three-pair admissible lattice with parameter ``sigma``."""
    p, sigma = _check_moduli(p, sigma)
    t = tau_of_sigma(p, sigma, tol)
    return abs(_basis(p, t, sigma).signed_det)


@dataclass(frozen=True)
class ModuliSweep:
    sigma_star: float
    delta_min: float
    profile: list[tuple[float, float]]


def moduli_sweep(p: float, grid_size: int) -> ModuliSweep:
    """Evaluate ``delta_moduli`` on a uniform grid over ``[1, sigma_p]``."""
    if grid_size < 2:
        raise DomainError(f"grid_size must be >= 2, got {grid_size}")
    p = _finite(p, "moduli_sweep")
    sp = sigma_p(p)
    profile = []
    for i in range(grid_size):
        s = sp if i == grid_size - 1 else 1.0 + (sp - 1.0) * i / (grid_size - 1)
        profile.append((s, delta_moduli(p, s)))
    sigma_star, delta_min = min(profile, key=lambda row: row[1])
    return ModuliSweep(sigma_star, delta_min, profile)


def scaled_critical_determinant(p: float, m: int) -> float:
    """Critical determinant of ``2**m D_p``, i.e. ``4**m Delta(D_p)``."""
    if int(m) != m or m < 0:
        raise DomainError(f"m must be a non-negative integer, got {m}")
    p = check_exponent(p)
    if math.isinf(p):
        return 4.0**m
    return 4.0**m * _branch_delta(p, select_branch(p))
