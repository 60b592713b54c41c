"""n-time-slot diversity precoding.

Each slot scales the cross-gain by a distinct number equivalent to the
golden ratio, so whatever g is, at most one slot can see a rational (deep
fade) effective gain.  The reported rate and upper bound are per-slot
arithmetic means.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import Regime, classify_regime, sum_upper_bound
from .diophantine import GoldenEquivalent, golden_equivalent_value
from .errors import InvalidSlotCount, ZeroEta
from .lattice import GramMatrix2
from .rates import ChannelPoint, RatePoint, achievable_sum_rate, cf_gram


@dataclass(frozen=True)
class SlotGain:
    """One precoder gain; map is None only for the identity (eta = 1) slot."""

    value: float
    map: GoldenEquivalent | None = None


@dataclass(frozen=True)
class SlotPlan:
    etas: tuple[SlotGain, ...]

    def __post_init__(self):
        if len(self.etas) < 1:
            raise InvalidSlotCount("a slot plan needs at least one slot")
        values = [gain.value for gain in self.etas]
        if any(v == 0.0 for v in values):
            raise ZeroEta("slot gains must be nonzero")
        if len(set(values)) != len(values):
            raise ValueError("slot gains must be distinct")

    @property
    def n(self) -> int:
        return len(self.etas)


@dataclass(frozen=True)
class PrecodedRateResult:
    per_slot: tuple[RatePoint, ...]
    avg_sum_rate: float
    avg_upper_bound_sum: float
    gap: float


def default_slot_plan(n: int) -> SlotPlan:
    """Built-in plans: [1] for n=1, [phi, phi_bar] for n=2, and for n >= 3
    the family eta_i = (phi+i)/(phi+i-1), i = 1..n.

    The n >= 3 gains are all equivalent to the golden ratio, distinct, and
    decrease from phi toward 1 (staying above it), so the upper bound keeps
    its unprecoded shape.
    """
    if n < 1:
        raise InvalidSlotCount(f"n must be >= 1, got {n}")
    if n == 1:
        return SlotPlan(etas=(SlotGain(value=1.0, map=None),))
    if n == 2:
        phi = golden_equivalent_value(1, 0, 0, 1)
        phi_bar = golden_equivalent_value(0, -1, 1, 0)
        return SlotPlan(etas=(SlotGain(phi.value, phi), SlotGain(phi_bar.value, phi_bar)))
    gains = []
    for i in range(1, n + 1):
        ge = golden_equivalent_value(1, i, 1, i - 1)
        gains.append(SlotGain(ge.value, ge))
    return SlotPlan(etas=tuple(gains))


def slot_gram(point: ChannelPoint, eta: float) -> GramMatrix2:
    """Gram matrix of the slot's form: the channel point with cross-gain eta*g."""
    if eta == 0.0:
        raise ZeroEta("eta must be nonzero")
    return cf_gram(ChannelPoint(snr=point.snr, g=eta * point.g))


def slot_inr(point: ChannelPoint, eta: float) -> float:
    """Per-slot interference-to-noise ratio (eta*g)^2 * SNR."""
    eff = eta * point.g
    return eff * eff * point.snr


def precoded_sum_rate(
    point: ChannelPoint, plan: SlotPlan, rx2_normalized: bool = False
) -> PrecodedRateResult:
    """Slot-averaged achievable sum-rate and upper bound.

    rx2_normalized enables the physically asymmetric alternative where the
    second receiver normalizes its direct gain and sees cross-gain g/eta
    instead of eta*g.  Default follows the symmetric per-slot form.
    """
    per_slot = []
    for gain in plan.etas:
        slot_point = ChannelPoint(snr=point.snr, g=gain.value * point.g)
        rp = achievable_sum_rate(slot_point)
        if rx2_normalized:
            alt = achievable_sum_rate(
                ChannelPoint(snr=point.snr, g=point.g / gain.value)
            )
            sum_rate = rp.per_user_rate + alt.per_user_rate
            rp = RatePoint(
                per_user_rate=sum_rate / 2.0,
                sum_rate=sum_rate,
                minima=rp.minima,
                regime=rp.regime,
                upper_bound_sum=rp.upper_bound_sum,
                gap=rp.upper_bound_sum - sum_rate,
            )
        per_slot.append(rp)
    n = float(plan.n)
    # Fixed plan order keeps the means bitwise deterministic.
    avg_sum = sum(rp.sum_rate for rp in per_slot) / n
    avg_ub = sum(rp.upper_bound_sum for rp in per_slot) / n
    return PrecodedRateResult(
        per_slot=tuple(per_slot),
        avg_sum_rate=avg_sum,
        avg_upper_bound_sum=avg_ub,
        gap=avg_ub - avg_sum,
    )


def precoded_upper_bound(point: ChannelPoint, plan: SlotPlan) -> float:
    """Arithmetic mean over slots of the sum bound at (SNR, slot INR)."""
    total = sum(
        sum_upper_bound(point.snr, slot_inr(point, gain.value)) for gain in plan.etas
    )
    return total / float(plan.n)


def adaptive_scheme(point: ChannelPoint, n_strong: int) -> PrecodedRateResult:
    """Slot-count policy: one slot below the strong regime, n_strong above."""
    if n_strong < 1:
        raise InvalidSlotCount(f"n_strong must be >= 1, got {n_strong}")
    regime = classify_regime(point.snr, point.inr)
    if regime in (Regime.WEAK, Regime.INTERMEDIATE):
        plan = default_slot_plan(1)
    else:
        plan = default_slot_plan(n_strong)
    return precoded_sum_rate(point, plan)
