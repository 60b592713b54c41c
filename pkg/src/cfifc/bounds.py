"""Interference-regime classification and sum-capacity upper bounds.

The classifier uses the exponent ratio alpha = log(INR)/log(SNR) with the
classical very-strong cutoff INR > SNR(1+SNR).  The bound is the standard
two-user outer bound transcribed for one real dimension: in the strong
regimes it reduces to the MAC-style 1/4 log2(1+SNR+INR) term, in the very
strong regime to interference-free capacity.
"""

from __future__ import annotations

import math
from enum import Enum

from .errors import InvalidSnr


class Regime(str, Enum):
    WEAK = "weak"
    INTERMEDIATE = "intermediate"
    STRONG = "strong"
    VERY_STRONG = "very_strong"


def classify_regime(snr: float, inr: float) -> Regime:
    """Map one (SNR, INR) operating point to its interference regime."""
    if snr <= 1.0:
        raise InvalidSnr(f"classification needs snr > 1, got {snr}")
    if inr < 0.0:
        raise ValueError("inr must be >= 0")
    if inr > snr * (1.0 + snr):
        return Regime.VERY_STRONG
    alpha = 0.0 if inr == 0.0 else math.log(inr) / math.log(snr)
    if alpha >= 1.0:
        return Regime.STRONG
    if alpha >= 2.0 / 3.0:
        return Regime.INTERMEDIATE
    return Regime.WEAK


def per_user_upper_bound(snr: float, inr: float) -> float:
    """Capacity upper bound per user, bits per real channel use."""
    if snr <= 0.0:
        raise InvalidSnr(f"snr must be > 0, got {snr}")
    if inr < 0.0:
        raise ValueError("inr must be >= 0")
    free = 0.5 * math.log2(1.0 + snr)
    if inr >= snr:
        return min(free, 0.25 * math.log2(1.0 + snr + inr))
    return min(
        free,
        0.25 * (math.log2(1.0 + snr + inr) + math.log2(1.0 + snr / (1.0 + inr))),
        0.5 * math.log2(1.0 + inr + snr / (1.0 + inr)),
    )


def sum_upper_bound(snr: float, inr: float) -> float:
    """Sum-capacity upper bound: symmetric channel, twice the per-user bound."""
    return 2.0 * per_user_upper_bound(snr, inr)
