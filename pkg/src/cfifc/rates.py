"""Compute-and-forward rates for the 2-user Gaussian symmetric channel.

A channel point (SNR, g) defines the quadratic form

    q(x, y) = (x g - y)^2 + (x^2 + y^2) / SNR

whose successive minima govern the achievable rate: both independent
decoding equations must be reliable, so the per-user rate is the
computation rate evaluated at the second minimum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bounds import Regime, classify_regime, sum_upper_bound
from .errors import InvalidSnr, NotCoprime, PrecisionCap, ZeroVector
from .lattice import GramMatrix2, MinimaResult, gauss_reduce

PHI = (1.0 + math.sqrt(5.0)) / 2.0
PHI_BAR = (1.0 - math.sqrt(5.0)) / 2.0

#: Above ~140 dB the form values drown in double-precision noise.
SNR_CAP = 1e14


@dataclass(frozen=True)
class ChannelPoint:
    """One operating point of the symmetric interference channel.

    g may be negative: precoded slots use the golden conjugate, which is
    below zero, and the INR only ever sees g squared.
    """

    snr: float
    g: float

    def __post_init__(self):
        if not self.snr > 0.0:
            raise InvalidSnr(f"snr must be > 0, got {self.snr}")
        if self.snr > SNR_CAP:
            raise PrecisionCap(f"snr {self.snr:g} above the 140 dB precision cap")

    @property
    def inr(self) -> float:
        return self.g * self.g * self.snr


@dataclass(frozen=True)
class RatePoint:
    per_user_rate: float
    sum_rate: float
    minima: MinimaResult
    regime: Regime
    upper_bound_sum: float
    gap: float


@dataclass(frozen=True)
class AsymptoticPrediction:
    x_opt: float
    lambda1_pred: float
    lambda2_pred: float
    per_user_rate_pred: float
    gap_pred: float


def cf_gram(point: ChannelPoint) -> GramMatrix2:
    """Gram matrix of the decoding quadratic form at this channel point."""
    inv = 1.0 / point.snr
    return GramMatrix2(
        g11=point.g * point.g + inv,
        g12=-point.g,
        g22=1.0 + inv,
    )


def _numerator(point: ChannelPoint) -> float:
    return 1.0 / point.snr + 1.0 + point.g * point.g


def computation_rate(point: ChannelPoint, a: tuple[int, int]) -> float:
    """Rate for reliably decoding the integer equation with coefficients a."""
    x, y = a
    if x == 0 and y == 0:
        raise ZeroVector("coefficient vector (0, 0)")
    q = (x * point.g - y) ** 2 + (x * x + y * y) / point.snr
    return 0.5 * max(math.log2(_numerator(point) / q), 0.0)


def computation_rate_reference(point: ChannelPoint, a: tuple[int, int]) -> float:
    """Same rate from the projection form 1/2 log2+ of
    (||a||^2 - SNR (h.a)^2 / (1 + SNR ||h||^2))^(-1), h = (1, g).

    Evaluated in exact rational arithmetic: the subtraction cancels nearly
    all of ||a||^2 at high SNR and a float evaluation would be meaningless
    exactly where the check matters.
    """
    x, y = a
    if x == 0 and y == 0:
        raise ZeroVector("coefficient vector (0, 0)")
    snr = Fraction(point.snr)
    g = Fraction(point.g)
    denom = (x * x + y * y) - snr * (x + g * y) ** 2 / (1 + snr * (1 + g * g))
    # denom = q / (1/SNR + 1 + g^2) > 0 for any nonzero integer vector.
    return 0.5 * max(-math.log2(float(denom)), 0.0)


def achievable_sum_rate(point: ChannelPoint) -> RatePoint:
    """Full pipeline: reduce the form, rate from the second minimum, bound."""
    minima = gauss_reduce(cf_gram(point))
    per_user = 0.5 * max(math.log2(_numerator(point) / minima.lambda2), 0.0)
    inr = point.inr
    regime = classify_regime(point.snr, inr)
    ub = sum_upper_bound(point.snr, inr)
    sum_rate = 2.0 * per_user
    return RatePoint(
        per_user_rate=per_user,
        sum_rate=sum_rate,
        minima=minima,
        regime=regime,
        upper_bound_sum=ub,
        gap=ub - sum_rate,
    )


def asymptotic_golden_predictor(point: ChannelPoint) -> AsymptoticPrediction:
    """High-SNR predictions valid when g is equivalent to the golden ratio.

    No equivalence check is performed; feeding a non-golden g simply yields
    predictions that the exact pipeline will not match.
    """
    one_plus_g2 = 1.0 + point.g * point.g
    x_opt = (point.snr / (5.0 * one_plus_g2)) ** 0.25
    lambda1 = 2.0 * math.sqrt(one_plus_g2 / (5.0 * point.snr))
    lambda2 = math.sqrt(1.25 * one_plus_g2 / point.snr)
    gap = 0.25 * math.log2(1.25)
    rate = 0.25 * max(math.log2(point.snr * one_plus_g2), 0.0) - gap
    return AsymptoticPrediction(
        x_opt=x_opt,
        lambda1_pred=lambda1,
        lambda2_pred=lambda2,
        per_user_rate_pred=rate,
        gap_pred=gap,
    )


def rational_limit(p: int, q: int) -> tuple[float, float]:
    """Infinite-SNR limits (lambda2, per-user rate) for rational g = p/q.

    The rate saturates at 1/2 log2(p^2 + q^2): rational cross-gains are the
    deep fades and do not scale with SNR.
    """
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"{p}/{q} is reducible")
    return 1.0 / (q * q), 0.5 * math.log2(p * p + q * q)
