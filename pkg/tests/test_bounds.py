"""Tests for regime classification and capacity upper bounds."""

import math

import numpy as np
import pytest

from cfifc.bounds import (
    Regime,
    classify_regime,
    per_user_upper_bound,
    sum_upper_bound,
)
from cfifc.errors import InvalidSnr

PHI = (1.0 + math.sqrt(5.0)) / 2.0
SNR65 = 10.0**6.5


class TestClassifyRegime:
    def test_intermediate_exponent(self):
        assert classify_regime(SNR65, 10.0**4.5) is Regime.INTERMEDIATE

    def test_strong_golden(self):
        assert classify_regime(SNR65, PHI * PHI * SNR65) is Regime.STRONG

    def test_very_strong(self):
        assert classify_regime(100.0, 1e6) is Regime.VERY_STRONG

    def test_zero_inr_is_weak(self):
        assert classify_regime(100.0, 0.0) is Regime.WEAK

    def test_boundary_owned_by_strong(self):
        snr = 1000.0
        assert classify_regime(snr, snr) is Regime.STRONG

    def test_rejects_snr_at_most_one(self):
        with pytest.raises(InvalidSnr):
            classify_regime(1.0, 10.0)

    def test_total_function(self):
        rng = np.random.RandomState(47)
        for _ in range(500):
            snr = 10 ** (rng.uniform(0.1, 14))
            inr = 10 ** (rng.uniform(-3, 16))
            assert classify_regime(snr, inr) in tuple(Regime)


class TestPerUserUpperBound:
    def test_interference_free(self):
        snr = 316.0
        assert per_user_upper_bound(snr, 0.0) == pytest.approx(
            0.5 * math.log2(1 + snr), rel=1e-12
        )

    def test_strong_golden_value(self):
        inr = PHI * PHI * SNR65
        assert per_user_upper_bound(SNR65, inr) == pytest.approx(
            0.25 * math.log2(1 + SNR65 + inr), rel=1e-6
        )
        assert per_user_upper_bound(SNR65, inr) == pytest.approx(5.8622, abs=5e-4)

    def test_very_strong_interference_free_binds(self):
        assert per_user_upper_bound(100.0, 1e6) == pytest.approx(
            0.5 * math.log2(101.0), rel=1e-12
        )

    def test_nonnegative(self):
        rng = np.random.RandomState(53)
        for _ in range(500):
            snr = 10 ** (rng.uniform(-2, 14))
            inr = 10 ** (rng.uniform(-3, 16))
            assert per_user_upper_bound(snr, inr) >= 0.0

    def test_nonincreasing_in_inr_up_to_sqrt_snr(self):
        # The binding weak-regime term 1/2*log2(1 + inr + snr/(1+inr)) is
        # V-shaped with its minimum near inr = sqrt(snr); the bound is
        # non-increasing only up to that dip, then rises toward the strong
        # regime, so the monotone window ends at sqrt(snr).
        snr = 10.0**6
        inrs = np.linspace(0.0, math.sqrt(snr), 200)
        vals = [per_user_upper_bound(snr, float(i)) for i in inrs]
        assert all(a >= b - 1e-12 for a, b in zip(vals, vals[1:]))

    def test_nondecreasing_in_snr_no_interference(self):
        snrs = np.logspace(0, 12, 200)
        vals = [per_user_upper_bound(float(s), 0.0) for s in snrs]
        assert all(a <= b + 1e-12 for a, b in zip(vals, vals[1:]))

    def test_continuity_at_very_strong_threshold(self):
        # At inr = snr*(1+snr) the interference-free bound and the
        # sum-constraint bound agree exactly: log2(1+snr) = half of
        # log2((1+snr)^2).
        for snr in (10.0, 1e3, 1e6, 1e10):
            inr = snr * (1 + snr)
            a = 0.5 * math.log2(1 + snr)
            b = 0.25 * math.log2(1 + snr + inr)
            assert a == pytest.approx(b, rel=1e-9)


class TestSumUpperBound:
    def test_twice_per_user(self):
        assert sum_upper_bound(100.0, 7.0) == pytest.approx(
            2 * per_user_upper_bound(100.0, 7.0), rel=1e-15
        )

    def test_interference_free(self):
        snr = 50.0
        assert sum_upper_bound(snr, 0.0) == pytest.approx(
            math.log2(1 + snr), rel=1e-12
        )

    def test_golden_strong_value(self):
        assert sum_upper_bound(SNR65, PHI * PHI * SNR65) == pytest.approx(
            11.7244, abs=1e-3
        )

    def test_capped_by_interference_free_when_inr_large(self):
        rng = np.random.RandomState(59)
        for _ in range(200):
            snr = 10 ** (rng.uniform(0, 12))
            inr = snr * 10 ** (rng.uniform(0, 4))
            assert sum_upper_bound(snr, inr) <= math.log2(1 + snr) + 1e-12
