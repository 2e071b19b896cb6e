import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minkpack.critical import Branch, critical_determinant, critical_lattice, delta0, delta1
from minkpack.errors import BudgetExceeded, DomainError, InconsistentInput, IntegerOverflow
from minkpack.lattice import Point2, pnorm_power
from minkpack.numerics import integrate
from minkpack.packing import ball_volume
from minkpack.shells import (
    arc_length,
    count_integer_points,
    genus_c2d,
    jarnik_bound,
    paper_length_integral,
    solve_shell,
    theta_coefficients,
)

SQ3 = math.sqrt(3.0)
S6, S2 = math.sqrt(6.0), math.sqrt(2.0)


def as_set(points, digits=8):
    return {(round(q.x, digits), round(q.y, digits)) for q in points}


def assert_same_points(got, expected, tol=1e-8):
    assert len(got) == len(expected)
    for e in expected:
        assert any(abs(g.x - e[0]) <= tol and abs(g.y - e[1]) <= tol for g in got), e


def brute_count(p, N):
    return sum(1 for x in range(-N, N + 1) for y in range(-N, N + 1) if x**p + y**p == N**p)


class TestSolveShell:
    def test_hexagonal(self):
        shell = solve_shell(2, Point2(1, 0), SQ3 / 2)
        expected = [(1, 0), (-1, 0), (0.5, SQ3 / 2), (-0.5, SQ3 / 2),
                    (0.5, -SQ3 / 2), (-0.5, -SQ3 / 2)]
        assert_same_points(shell.points, expected)

    def test_rotated(self):
        r = 2**-0.5
        shell = solve_shell(2, Point2(-r, r), SQ3 / 2)
        a, b = (S6 + S2) / 4, (S6 - S2) / 4
        assert_same_points(shell.points, [(a, b), (-a, -b), (b, a), (-b, -a), (-r, r), (r, -r)])

    def test_cubic(self):
        d = critical_determinant(3).delta
        shell = solve_shell(3, critical_lattice(3, Branch.BRANCH1).b2, d)
        assert len(shell.points) == 6
        for q in shell.points:
            assert abs(pnorm_power(q, 3) - 1) <= 1e-12
        assert as_set(shell.points) == as_set([-q for q in shell.points])

    def test_angle_order(self):
        pts = solve_shell(2, Point2(1, 0), SQ3 / 2).points
        angles = [math.atan2(q.y, q.x) for q in pts]
        assert angles == sorted(angles)

    @pytest.mark.parametrize("branch", list(Branch))
    @pytest.mark.parametrize("p", [1.2, 1.5, 2, 2.3, 3, 5])
    def test_reproduces_lattice_shell(self, p, branch):
        L = critical_lattice(p, branch)
        d = delta0(p) if branch is Branch.BRANCH0 else delta1(p)
        expected = [tuple(v) for q in (L.b1, L.b2, L.b1 + L.b2) for v in (q, -q)]
        for start in (L.b1, L.b2, L.b1 + L.b2):
            assert_same_points(solve_shell(p, start, d).points, expected)

    def test_wrong_determinant(self):
        with pytest.raises(InconsistentInput):
            solve_shell(2, Point2(1, 0), 1.2)

    def test_off_curve(self):
        with pytest.raises(InconsistentInput):
            solve_shell(2, Point2(0.5, 0), SQ3 / 2)

    def test_domain(self):
        with pytest.raises(DomainError):
            solve_shell(1, Point2(1, 0), 0.5)
        with pytest.raises(DomainError):
            solve_shell(2, Point2(1, 0), 0)


class TestTheta:
    def test_printed_prefix(self):
        assert theta_coefficients(12) == [1, 6, 0, 6, 6, 0, 0, 12, 0, 6, 0, 0, 6]

    def test_lattice_enumeration(self):
        # vectors a (1, 0) + c (1/2, sqrt3/2) of squared length k, exactly:
        # |v|^2 = a^2 + ac + c^2
        M = 200
        counts = [0] * (M + 1)
        for a in range(-20, 21):
            for c in range(-20, 21):
                k = a * a + a * c + c * c
                if k <= M:
                    counts[k] += 1
        assert theta_coefficients(M) == counts

    def test_zero(self):
        assert theta_coefficients(0) == [1]

    def test_limits(self):
        with pytest.raises(DomainError):
            theta_coefficients(-1)
        with pytest.raises(BudgetExceeded):
            theta_coefficients(101, cap=100)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(1, 400))
    def test_nonzero_coefficients_multiple_of_six(self, M):
        coeffs = theta_coefficients(M)
        assert all(c % 6 == 0 for c in coeffs[1:])


class TestCounting:
    def test_circle(self):
        assert count_integer_points(2, 5) == 12
        assert count_integer_points(2, 1) == 4

    @pytest.mark.parametrize("N", [1, 2, 3, 5])
    def test_quartic(self, N):
        assert count_integer_points(4, N) == 4

    @pytest.mark.parametrize("p", [2, 4, 6])
    @pytest.mark.parametrize("N", [1, 5, 10, 13, 25, 65])
    def test_brute_force(self, p, N):
        assert count_integer_points(p, N) == brute_count(p, N)

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from([2, 4, 6, 8]), st.integers(1, 2000))
    def test_divisible_by_four(self, p, N):
        c = count_integer_points(p, N)
        assert c % 4 == 0 and c >= 4

    def test_large_square_sum(self):
        # 5**k has k + 1 representations by primes 1 mod 4 -> 4 (2k + 1) points
        assert count_integer_points(2, 5**10) == 4 * 21

    def test_errors(self):
        with pytest.raises(DomainError):
            count_integer_points(3, 5)
        with pytest.raises(DomainError):
            count_integer_points(2, 0)
        with pytest.raises(IntegerOverflow):
            count_integer_points(64, 2**10)


class TestArcLength:
    def test_exact_values(self):
        assert abs(arc_length(2) - 2 * math.pi) <= 1e-9
        assert abs(arc_length(1) - 4 * S2) <= 1e-12
        assert arc_length(math.inf) == 8.0

    def test_near_one_continuous(self):
        assert arc_length(1.0001) == pytest.approx(4 * S2, abs=1e-3)

    def test_bounds_and_monotone(self):
        grid = [1 + 0.05 * k for k in range(200)]
        lengths = [arc_length(p) for p in grid]
        assert all(4 * S2 - 1e-12 <= v <= 8 + 1e-12 for v in lengths)
        tail = [v for p, v in zip(grid, lengths) if p >= 2]
        assert all(a < b for a, b in zip(tail, tail[1:]))

    def test_against_polyline(self):
        p, n = 3.0, 200000
        pts = [((1 - t**p) ** (1 / p), t) for t in (k / n for k in range(n + 1))]
        poly = 4 * sum(math.dist(a, b) for a, b in zip(pts, pts[1:]))
        assert arc_length(3) == pytest.approx(poly, abs=1e-6)


class TestPaperIntegral:
    @pytest.mark.parametrize("p", [1, 1.5, 2, 3, 4, 10])
    def test_is_area(self, p):
        assert paper_length_integral(p) == pytest.approx(ball_volume(p), abs=1e-10)

    def test_disc(self):
        assert paper_length_integral(2) == pytest.approx(math.pi, abs=1e-12)

    def test_direct_integral(self):
        direct = 4 * integrate(lambda y: (1 - y**4) ** 0.25, 0, 1)
        assert paper_length_integral(4) == pytest.approx(direct, abs=1e-9)


class TestJarnik:
    def test_values(self):
        assert jarnik_bound(4 * math.pi) == pytest.approx(3 * (4 * math.pi) ** (1 / 3), rel=1e-15)
        assert jarnik_bound(4 * math.pi) == pytest.approx(6.974684109057758, abs=1e-12)
        assert jarnik_bound(1) == pytest.approx(1.2903810207421493, abs=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            jarnik_bound(0)

    def test_genus(self):
        assert [genus_c2d(d) for d in (1, 2, 3)] == [0, 3, 10]
        with pytest.raises(DomainError):
            genus_c2d(0)
