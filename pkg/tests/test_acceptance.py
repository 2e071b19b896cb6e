"""Acceptance criteria, one test per criterion.

Each criterion returns ``(passed, detail)``; the outcome line is printed in
the pytest terminal summary and by running this file directly.
"""

import math
import sys
import time

import pytest

from minkpack import critical
from minkpack.critical import (
    Branch,
    critical_determinant,
    critical_lattice,
    davis_constant,
    delta0,
    delta1,
    moduli_sweep,
    scaled_critical_determinant,
    select_branch,
    sigma_p,
)
from minkpack.lattice import Ball, Point2, is_admissible
from minkpack.packing import (
    circumscribed_hexagon_area,
    domain_critical_lattice,
    inscribed_hexagon_area,
    packing_density,
    packing_lattice,
    verify_packing,
)
from minkpack.report import SweepSpec, cmd_report, cmd_sweep, jarnik_table
from minkpack.shells import arc_length, count_integer_points, solve_shell, theta_coefficients
from minkpack.svg import SvgSpec, render_svg

SQ3 = math.sqrt(3.0)
INF = math.inf
RESULTS: list[tuple[str, bool, str]] = []


def record(name, ok, detail):
    RESULTS.append((name, ok, detail))
    return ok, detail


def ac1_davis_constant():
    critical._p0_cache = None
    t0 = time.perf_counter()
    p0 = davis_constant()
    elapsed = time.perf_counter() - t0
    ok = 2.57 < p0 < 2.58 and abs(p0 - 2.5725) <= 5e-4 and elapsed < 1.0
    return ok, f"p0={p0!r} in {elapsed * 1e3:.2f} ms"


def ac2_crossings():
    p0 = davis_constant()
    e = [abs(delta0(2) - SQ3 / 2), abs(delta1(2) - SQ3 / 2), abs(delta0(p0) - delta1(p0))]
    ok = e[0] <= 1e-12 and e[1] <= 1e-10 and e[2] <= 1e-9
    return ok, "errors " + ", ".join(f"{x:.1e}" for x in e)


def ac3_known_determinants():
    d1, dinf, d2 = (critical_determinant(p).delta for p in (1, INF, 2))
    ok = abs(d1 - 0.5) <= 1e-12 and dinf == 1.0 and abs(d2 - SQ3 / 2) <= 1e-12
    return ok, f"D1={d1!r} Dinf={dinf!r} D2={d2!r}"


def ac4_densities():
    hexa = max(abs(packing_density(2, m) - math.pi / (2 * SQ3)) for m in (0, 1, 2))
    diamond = max(abs(packing_density(1, m) - 1) for m in (0, 1, 2))
    square_exact = all(packing_density(INF, m) == 1.0 for m in (0, 1, 2))
    spread = 0.0
    for p in (1, 1.2, 1.5, 2, 2.3, 2.5725, 3, 5, 10, INF):
        vals = [packing_density(p, m) for m in (0, 1, 2)]
        spread = max(spread, max(vals) - min(vals))
    ok = hexa <= 1e-12 and diamond <= 1e-12 and square_exact and spread <= 1e-12
    return ok, f"disc err {hexa:.1e}, diamond err {diamond:.1e}, m-spread {spread:.1e}"


def ac5_moduli_endpoint():
    t0 = time.perf_counter()
    worst, far = 0.0, []
    for p in (1.5, 2.2, 2.4, 3, 5, 10):
        sw = moduli_sweep(p, 200)
        worst = max(worst, abs(sw.delta_min - min(delta0(p), delta1(p))))
        sp = sigma_p(p)
        predicted = sp if select_branch(p) is Branch.BRANCH0 else 1.0
        if abs(sw.sigma_star - predicted) > (sp - 1) / 199 * (1 + 1e-9):
            far.append(p)
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-6 and not far and elapsed < 30
    return ok, f"max |min - endpoint| {worst:.1e}, off-endpoint {far}, {elapsed:.2f}s"


def ac6_admissibility():
    slowest, failures = 0.0, []
    for p in (1, 1.2, 1.5, 2, 2.3, davis_constant(), 3, 5, 10, INF):
        for m in (0, 1, 2):
            t0 = time.perf_counter()
            L = domain_critical_lattice(p, m)
            a = is_admissible(L, Ball(p, m)).admissible
            shrunk = is_admissible(L.scaled(0.999), Ball(p, m))
            b = not shrunk.admissible and shrunk.witness is not None
            c = verify_packing(packing_lattice(p, m), p, m).admissible
            elapsed = time.perf_counter() - t0
            slowest = max(slowest, elapsed)
            if not (a and b and c and elapsed < 0.5):
                failures.append((p, m))
    return not failures, f"30 cases, failures {failures}, slowest {slowest:.3f}s"


def _matches(points, expected, tol=1e-8):
    return len(points) == len(expected) and all(
        any(abs(q.x - x) <= tol and abs(q.y - y) <= tol for q in points) for x, y in expected)


def ac7_shells():
    hexa = solve_shell(2, Point2(1, 0), SQ3 / 2).points
    want0 = [(s, 0.0) for s in (1, -1)] + [(sx * 0.5, sy * SQ3 / 2) for sx in (1, -1) for sy in (1, -1)]
    a, b, r = (math.sqrt(6) + math.sqrt(2)) / 4, (math.sqrt(6) - math.sqrt(2)) / 4, 2**-0.5
    want1 = [(a, b), (-a, -b), (b, a), (-b, -a), (-r, r), (r, -r)]
    rotated = solve_shell(2, Point2(-r, r), SQ3 / 2).points
    ok = _matches(hexa, want0) and _matches(rotated, want1)
    return ok, "both shells reproduced" if ok else f"got {hexa} / {rotated}"


def ac8_theta():
    prefix = theta_coefficients(12) == [1, 6, 0, 6, 6, 0, 0, 12, 0, 6, 0, 0, 6]
    counts = [0] * 201
    for x in range(-20, 21):
        for y in range(-20, 21):
            k = x * x + x * y + y * y
            if k <= 200:
                counts[k] += 1
    agree = theta_coefficients(200) == counts
    return prefix and agree, f"prefix {prefix}, enumeration to 200 {agree}"


def ac9_hexagons():
    inner = max(abs(inscribed_hexagon_area(p, m) - 3 * scaled_critical_determinant(p, m))
                for p in (1.5, 2, 2.3, 3) for m in (0, 1))
    circle = abs(circumscribed_hexagon_area(2, 0) - 2 * SQ3)
    dev = {(p, m): circumscribed_hexagon_area(p, m) - 4 * scaled_critical_determinant(p, m)
           for p in (1.5, 2, 2.3, 3) for m in (0, 1)}
    outer = max(abs(v) for v in dev.values())
    flagged = {k: v for k, v in dev.items() if abs(v) > 1e-6}
    ok = inner <= 1e-9 and circle <= 1e-9 and not flagged
    return ok, f"inscribed err {inner:.1e}, circle err {circle:.1e}, tangent dev {outer:.1e}, over tol {flagged}"


def ac10_counting():
    counts = count_integer_points(2, 5) == 12 and all(
        count_integer_points(4, n) == 4 for n in (1, 2, 3, 5))
    lengths = abs(arc_length(2) - 2 * math.pi) <= 1e-9 and abs(arc_length(1) - 4 * math.sqrt(2)) <= 1e-12
    table = jarnik_table(2, 1000)
    over = sum(r["count"] > r["jarnik_leading"] for r in table)
    ok = counts and lengths and len(table) == 1000
    return ok, f"counts {counts}, lengths {lengths}, N<=1000 rows above leading term: {over}"


def ac11_determinism():
    spec = SweepSpec(1, 4, 12, 1, ("p", "branch", "delta", "density"))
    svg = SvgSpec(2.3, 1, 3, 400)
    same = [cmd_report(2.3, 1) == cmd_report(2.3, 1),
            cmd_sweep(spec) == cmd_sweep(spec),
            render_svg(svg) == render_svg(svg)]
    return all(same), f"report/sweep/svg identical: {same}"


CRITERIA = [
    ("AC1 Davis constant", ac1_davis_constant),
    ("AC2 crossing identities", ac2_crossings),
    ("AC3 known critical determinants", ac3_known_determinants),
    ("AC4 densities", ac4_densities),
    ("AC5 moduli endpoint minimum", ac5_moduli_endpoint),
    ("AC6 admissibility and packing", ac6_admissibility),
    ("AC7 shells", ac7_shells),
    ("AC8 theta prefix", ac8_theta),
    ("AC9 hexagons", ac9_hexagons),
    ("AC10 counting and arc length", ac10_counting),
    ("AC11 determinism", ac11_determinism),
]


@pytest.mark.parametrize("name, criterion", CRITERIA, ids=[n.split()[0] for n, _ in CRITERIA])
def test_criterion(name, criterion):
    ok, detail = record(name, *criterion())
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for name, criterion in CRITERIA:
        ok, detail = criterion()
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    sys.exit(1 if failed else 0)
