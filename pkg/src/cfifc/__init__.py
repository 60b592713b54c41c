"""Compute-and-forward sum-rates and capacity bounds for the 2-user
Gaussian symmetric interference channel, with golden-ratio diversity
precoding."""

from .bounds import Regime, classify_regime, per_user_upper_bound, sum_upper_bound
from .diophantine import (
    ContinuedFraction,
    GoldenEquivalent,
    continued_fraction,
    convergents,
    golden_equivalent_value,
    hurwitz_scan,
    nearest_golden_equivalent,
    scaled_dist,
)
from .lattice import (
    Basis2,
    GramMatrix2,
    MinimaResult,
    UnimodularMap,
    brute_force_minima,
    cholesky_upper,
    gauss_reduce,
    quadratic_form_eval,
)
from .precoding import (
    PrecodedRateResult,
    SlotGain,
    SlotPlan,
    adaptive_scheme,
    default_slot_plan,
    precoded_sum_rate,
    precoded_upper_bound,
    slot_gram,
    slot_inr,
)
from .rates import (
    PHI,
    PHI_BAR,
    AsymptoticPrediction,
    ChannelPoint,
    RatePoint,
    achievable_sum_rate,
    asymptotic_golden_predictor,
    cf_gram,
    computation_rate,
    computation_rate_reference,
    rational_limit,
)
from .sweep import (
    SweepRow,
    SweepSpec,
    parse_config,
    parse_csv,
    run_sweep,
    serialize_csv,
)

__all__ = [
    "AsymptoticPrediction",
    "Basis2",
    "ChannelPoint",
    "ContinuedFraction",
    "GoldenEquivalent",
    "GramMatrix2",
    "MinimaResult",
    "PHI",
    "PHI_BAR",
    "PrecodedRateResult",
    "RatePoint",
    "Regime",
    "SlotGain",
    "SlotPlan",
    "SweepRow",
    "SweepSpec",
    "UnimodularMap",
    "achievable_sum_rate",
    "adaptive_scheme",
    "asymptotic_golden_predictor",
    "brute_force_minima",
    "cf_gram",
    "cholesky_upper",
    "classify_regime",
    "computation_rate",
    "computation_rate_reference",
    "continued_fraction",
    "convergents",
    "default_slot_plan",
    "gauss_reduce",
    "golden_equivalent_value",
    "hurwitz_scan",
    "nearest_golden_equivalent",
    "parse_config",
    "parse_csv",
    "per_user_upper_bound",
    "precoded_sum_rate",
    "precoded_upper_bound",
    "quadratic_form_eval",
    "rational_limit",
    "run_sweep",
    "scaled_dist",
    "serialize_csv",
    "slot_gram",
    "slot_inr",
    "sum_upper_bound",
]

__version__ = "0.1.0"
