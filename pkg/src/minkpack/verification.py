"""Independent checks that a computed packing is what it claims to be.

The sampled minimality check draws random lattices near the critical one
with the SplitMix64 generator below, so that a run is reproducible from its
seed alone, independent of the host language's RNG.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

from .critical import (
    Branch,
    delta0,
    delta1,
    moduli_sweep,
    scaled_critical_determinant,
    select_branch,
    sigma_p,
)
from .lattice import Ball, Lattice2, Point2, check_exponent, is_admissible
from .packing import domain_critical_lattice, packing_lattice, verify_packing

__all__ = [
    "SplitMix64",
    "CheckResult",
    "VerifyResult",
    "check_critical_admissible",
    "check_shrink_inadmissible",
    "check_packing",
    "check_moduli_endpoint",
    "check_sampled_minimality",
    "run_verification",
]

_MASK = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 (Steele, Lea, Flood 2014).

    ``state += 0x9E3779B97F4A7C15``, then the output is the state mixed by
    ``z = (z ^ z >> 30) * 0xBF58476D1CE4E5B9``,
    ``z = (z ^ z >> 27) * 0x94D049BB133111EB``, ``z ^ z >> 31`` (mod 2^64).
    Doubles take the top 53 bits.
    """

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        return lo + (hi - lo) * ((self.next_u64() >> 11) * 2.0**-53)


@dataclass
class CheckResult:
    name: str
    passed: bool
    skipped: bool = False
    details: dict[str, Any] = field(default_factory=dict)


@dataclass
class VerifyResult:
    p: float
    m: int
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def check_critical_admissible(p: float, m: int) -> CheckResult:
    L = domain_critical_lattice(p, m)
    res = is_admissible(L, Ball(p, m))
    return CheckResult("critical_admissible", res.admissible, details={"witness": res.witness})


def check_shrink_inadmissible(p: float, m: int, factor: float = 0.999) -> CheckResult:
    L = domain_critical_lattice(p, m).scaled(factor)
    res = is_admissible(L, Ball(p, m))
    return CheckResult(
        "shrink_inadmissible", not res.admissible,
        details={"factor": factor, "witness": res.witness},
    )


def check_packing(p: float, m: int) -> CheckResult:
    res = verify_packing(packing_lattice(p, m), p, m)
    return CheckResult("packing_non_overlap", res.admissible, details={"witness": res.witness})


def check_moduli_endpoint(p: float, grid_size: int = 200) -> CheckResult:
    """The sampled moduli function attains its minimum at the endpoint that
    the branch rule predicts. Near-constant profiles (``p = 2``) pass when the
    predicted endpoint ties with the grid minimum."""
    p = check_exponent(p)
    if not (p > 1.0 and math.isfinite(p)):
        return CheckResult("moduli_endpoint_minimum", True, skipped=True,
                           details={"reason": "moduli space needs finite p > 1"})
    sweep = moduli_sweep(p, grid_size)
    sp = sigma_p(p)
    step = (sp - 1.0) / (grid_size - 1)
    predicted = sp if select_branch(p) is Branch.BRANCH0 else 1.0
    expected = min(delta0(p), delta1(p))
    endpoint_value = sweep.profile[-1][1] if predicted == sp else sweep.profile[0][1]
    near_endpoint = abs(sweep.sigma_star - predicted) <= step * (1 + 1e-9)
    tied = abs(endpoint_value - sweep.delta_min) <= 1e-9
    passed = (
        abs(sweep.delta_min - expected) <= 1e-6
        and sweep.delta_min >= expected - 1e-9
        and (near_endpoint or tied)
    )
    return CheckResult(
        "moduli_endpoint_minimum", passed,
        details={
            "sigma_star": sweep.sigma_star,
            "predicted_sigma": predicted,
            "delta_min": sweep.delta_min,
            "expected": expected,
        },
    )


def _perturb(v: Point2, rng: SplitMix64, length_window: tuple[float, float],
             angle_window: float) -> Point2:
    r = math.hypot(v.x, v.y) * rng.uniform(*length_window)
    theta = math.atan2(v.y, v.x) + rng.uniform(-angle_window, angle_window)
    return Point2(r * math.cos(theta), r * math.sin(theta))


def sample_admissible_lattices(
    p: float,
    m: int,
    samples: int,
    rng: SplitMix64,
    length_window: tuple[float, float] = (0.97, 1.15),
    angle_window: float = 0.12,
    max_attempts_factor: int = 100,
) -> tuple[list[Lattice2], int]:
    """Rejection-sample lattices admissible for ``2**(m+1) D_p`` around the
    critical packing basis. Returns the accepted lattices and the number of
    attempts made."""
    base = packing_lattice(p, m)
    ball = Ball(p, m + 1)
    accepted: list[Lattice2] = []
    attempts = 0
    while len(accepted) < samples and attempts < max_attempts_factor * samples:
        attempts += 1
        b1 = _perturb(base.b1, rng, length_window, angle_window)
        b2 = _perturb(base.b2, rng, length_window, angle_window)
        if abs(b1.x * b2.y - b1.y * b2.x) < 1e-9:
            continue
        L = Lattice2(b1, b2)
        if is_admissible(L, ball).admissible:
            accepted.append(L)
    return accepted, attempts


def check_sampled_minimality(p: float, m: int, samples: int, seed: int) -> CheckResult:
    rng = SplitMix64(seed)
    lattices, attempts = sample_admissible_lattices(p, m, samples, rng)
    bound = scaled_critical_determinant(p, m + 1)
    dets = [abs(L.signed_det) for L in lattices]
    smallest = min(dets) if dets else math.inf
    slack = 1e-9 * max(1.0, bound)
    passed = len(lattices) == samples and smallest >= bound - slack
    witness = None
    if dets and smallest < bound - slack:
        witness = lattices[dets.index(smallest)]
    return CheckResult(
        "sampled_minimality", passed,
        details={
            "accepted": len(lattices),
            "attempts": attempts,
            "min_det": smallest,
            "critical_det": bound,
            "witness": witness,
        },
    )


def run_verification(p: float, m: int = 0, samples: int = 1000, seed: int = 42) -> VerifyResult:
    p = check_exponent(p)
    checks = [
        check_critical_admissible(p, m),
        check_shrink_inadmissible(p, m),
        check_packing(p, m),
        check_moduli_endpoint(p),
        check_sampled_minimality(p, m, samples, seed),
    ]
    return VerifyResult(p, m, checks)
