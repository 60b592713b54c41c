"""Tests for continued fractions, approximation statistics, and the
golden-ratio unimodular-equivalence search."""

import math

import numpy as np
import pytest

from cfifc.diophantine import (
    GoldenEquivalent,
    continued_fraction,
    convergents,
    golden_equivalent_value,
    hurwitz_scan,
    nearest_golden_equivalent,
    scaled_dist,
)
from cfifc.errors import DegenerateMap, NotUnimodular

PHI = (1.0 + math.sqrt(5.0)) / 2.0
SQRT2 = math.sqrt(2.0)


class TestContinuedFraction:
    def test_golden_all_ones(self):
        cf = continued_fraction(PHI, 30)
        assert cf.a0 == 1
        assert cf.partial_quotients == (1,) * 30

    def test_half_terminates(self):
        cf = continued_fraction(0.5, 10)
        assert cf.a0 == 0
        assert cf.partial_quotients == (2,)

    def test_sqrt2_all_twos(self):
        cf = continued_fraction(SQRT2, 5)
        assert cf.a0 == 1
        assert cf.partial_quotients == (2, 2, 2, 2, 2)

    def test_integer_input(self):
        cf = continued_fraction(7.0, 10)
        assert cf.a0 == 7
        assert cf.partial_quotients == ()


class TestConvergents:
    def test_golden_fibonacci(self):
        # a0 contributes (1, 1); four all-ones quotients give the next
        # four Fibonacci ratios.
        cf = continued_fraction(PHI, 4)
        assert convergents(cf) == [(1, 1), (2, 1), (3, 2), (5, 3), (8, 5)]

    def test_half(self):
        cf = continued_fraction(0.5, 10)
        assert convergents(cf) == [(0, 1), (1, 2)]

    def test_sqrt2_quality(self):
        cf = continued_fraction(SQRT2, 4)
        convs = convergents(cf)
        assert convs[-1] == (41, 29)
        for p, q in convs:
            assert abs(SQRT2 - p / q) < 1.0 / (q * q)
            assert math.gcd(p, q) == 1

    def test_quality_for_random_irrationals(self):
        rng = np.random.RandomState(61)
        for _ in range(50):
            theta = rng.uniform(0, 10) + math.pi * 1e-3  # push off rationals
            for p, q in convergents(continued_fraction(theta, 12)):
                # abs slack covers doubles whose expansion terminates on an
                # exact rational hit
                assert abs(theta - p / q) < 1.0 / (q * q) + 1e-14


class TestScaledDist:
    def test_golden_q1(self):
        assert scaled_dist(PHI, 1) == pytest.approx(0.381966, abs=1e-6)

    def test_exact_rational_hit(self):
        assert scaled_dist(0.5, 2) == 0.0

    def test_golden_fibonacci_89(self):
        assert scaled_dist(PHI, 89) == pytest.approx(0.4473, abs=5e-4)

    def test_range(self):
        rng = np.random.RandomState(67)
        for _ in range(200):
            theta = rng.uniform(-5, 5)
            q = int(rng.randint(1, 1000))
            v = scaled_dist(theta, q)
            assert 0.0 <= v <= q / 2


class TestHurwitzScan:
    def test_golden_min_at_q1(self):
        min_value, argmin_q, trace = hurwitz_scan(PHI, 100)
        assert argmin_q == 1
        assert min_value == pytest.approx(0.381966, abs=1e-6)
        assert trace == [(1, pytest.approx(0.381966, abs=1e-6))]

    def test_golden_fibonacci_bracket(self):
        hurwitz_scan(PHI, 300)  # smoke: larger scan stays finite
        for q in (89, 144, 233):
            assert 0.4470 <= scaled_dist(PHI, q) <= 0.4474

    def test_sqrt2_beats_golden_constant(self):
        min_value, _, _ = hurwitz_scan(SQRT2, 10**4)
        assert min_value <= 0.36

    def test_trace_is_decreasing_records(self):
        _, _, trace = hurwitz_scan(math.pi, 1000)
        values = [v for _, v in trace]
        assert values == sorted(values, reverse=True)


class TestGoldenEquivalentValue:
    def test_identity(self):
        eq = golden_equivalent_value(1, 0, 0, 1)
        assert eq.value == pytest.approx(PHI, rel=1e-12)

    def test_conjugate(self):
        eq = golden_equivalent_value(0, -1, 1, 0)
        assert eq.value == pytest.approx(-1.0 / PHI, rel=1e-12)
        assert eq.value == pytest.approx((1 - math.sqrt(5)) / 2, rel=1e-12)

    def test_translate(self):
        eq = golden_equivalent_value(1, 1, 0, 1)
        assert eq.value == pytest.approx(PHI + 1.0, rel=1e-12)

    def test_rejects_non_unimodular(self):
        with pytest.raises(NotUnimodular):
            golden_equivalent_value(2, 0, 0, 2)

    def test_rejects_degenerate(self):
        with pytest.raises(DegenerateMap):
            GoldenEquivalent(a=1, b=0, c=0, d=0, value=0.0)

    def test_group_action(self):
        # Evaluating a composed map equals applying one map's fractional
        # transformation to the other's value.
        rng = np.random.RandomState(71)
        tuples = []
        for a in range(-3, 4):
            for b in range(-3, 4):
                for c in range(-3, 4):
                    for d in range(-3, 4):
                        if abs(a * d - b * c) == 1 and (c, d) != (0, 0):
                            tuples.append((a, b, c, d))
        for _ in range(1000):
            a1, b1, c1, d1 = tuples[rng.randint(len(tuples))]
            a2, b2, c2, d2 = tuples[rng.randint(len(tuples))]
            # matrix product (m1 @ m2)
            a = a1 * a2 + b1 * c2
            b = a1 * b2 + b1 * d2
            c = c1 * a2 + d1 * c2
            d = c1 * b2 + d1 * d2
            if (c, d) == (0, 0):
                continue
            inner = golden_equivalent_value(a2, b2, c2, d2).value
            denom = c1 * inner + d1
            if abs(denom) < 1e-9:
                continue
            outer = (a1 * inner + b1) / denom
            composed = golden_equivalent_value(a, b, c, d).value
            assert composed == pytest.approx(outer, rel=1e-9, abs=1e-12)

    def test_inverse_is_valid_map(self):
        for a, b, c, d in [(1, 1, 0, 1), (2, 1, 1, 1), (5, -3, 3, -2)]:
            det = a * d - b * c
            ia, ib, ic, id_ = det * d, det * -b, det * -c, det * a
            inv = golden_equivalent_value(ia, ib, ic, id_)
            assert inv.a * inv.d - inv.b * inv.c in (-1, 1)


class TestNearestGoldenEquivalent:
    def test_golden_itself(self):
        eq = nearest_golden_equivalent(PHI, 1)
        assert (eq.a, eq.b, eq.c, eq.d) == (1, 0, 0, 1)
        assert eq.value == pytest.approx(PHI, rel=1e-12)

    def test_integer_translate(self):
        eq = nearest_golden_equivalent(PHI + 1.0, 1)
        assert (eq.a, eq.b, eq.c, eq.d) == (1, 1, 0, 1)

    def test_two_at_bound_five(self):
        # Frozen from the exhaustive-search oracle: the minimizing value at
        # g = 2, bound 5, is 1.78346, reachable through several tuples
        # ((5, -3, 3, -2) among them); the simplest-denominator tie-break
        # selects (2, 5, 1, 3).
        eq = nearest_golden_equivalent(2.0, 5)
        assert (eq.a, eq.b, eq.c, eq.d) == (2, 5, 1, 3)
        assert eq.value == pytest.approx(1.7834576, abs=1e-6)
        assert abs(2.0 - eq.value) == pytest.approx(0.2165424, abs=1e-6)

    def test_error_monotone_in_bound(self):
        rng = np.random.RandomState(73)
        for _ in range(20):
            g = float(rng.uniform(0.5, 4.0))
            errs = [
                abs(g - nearest_golden_equivalent(g, bound).value)
                for bound in (1, 3, 5, 10)
            ]
            assert all(a >= b - 1e-15 for a, b in zip(errs, errs[1:]))

    def test_density_in_window(self):
        # Coverage of the unimodular orbit near [1, 4]: threshold pinned by
        # running this exact search at build time (74/100 with this seed);
        # small rationals keep permanent dead zones, so full coverage is
        # unattainable at bound 30.
        rng = np.random.RandomState(2024)
        gs = rng.uniform(1.0, 4.0, 100)
        hits = sum(
            1
            for g in gs
            if abs(nearest_golden_equivalent(float(g), 30).value - g) < 0.01
        )
        assert hits >= 70
