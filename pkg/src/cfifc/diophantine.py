"""Continued fractions, the q*||q theta|| statistic, Hurwitz-constant scans,
and the GL2(Z) golden-ratio equivalence machinery.

A real number g is equivalent to the golden ratio when
g = (a phi + b) / (c phi + d) for integers with ad - bc = +-1.  Those g are
the hardest reals to approximate by rationals, which is exactly what keeps
the compute-and-forward form's second minimum small.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DegenerateMap, NotUnimodular
from .rates import PHI

#: Remainders closer than this to an integer terminate the expansion
#: (rational-input guard; doubles cannot distinguish finer).
RATIONAL_GUARD = 1e-12

#: Default search box for nearest_golden_equivalent.
DEFAULT_COEFF_BOUND = 20


@dataclass(frozen=True)
class ContinuedFraction:
    a0: int
    partial_quotients: tuple[int, ...]


@dataclass(frozen=True)
class GoldenEquivalent:
    """A number (a phi + b)/(c phi + d) with unimodular integer coefficients."""

    a: int
    b: int
    c: int
    d: int
    value: float

    def __post_init__(self):
        if self.c == 0 and self.d == 0:
            raise DegenerateMap("zero denominator row")
        det = self.a * self.d - self.b * self.c
        if abs(det) != 1:
            raise NotUnimodular(f"det = {det}")


def continued_fraction(theta: float, n_terms: int) -> ContinuedFraction:
    """Standard expansion theta = a0 + 1/(a1 + 1/(...)) with n_terms quotients.

    Stops early when a remainder lands within RATIONAL_GUARD of an integer.
    """
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    if not math.isfinite(theta):
        raise ValueError("theta must be finite")
    a0 = math.floor(theta)
    frac = theta - a0
    quotients: list[int] = []
    while len(quotients) < n_terms:
        if frac < RATIONAL_GUARD:
            break
        x = 1.0 / frac
        nearest = round(x)
        if abs(x - nearest) < RATIONAL_GUARD and nearest >= 1:
            quotients.append(int(nearest))
            break
        a = math.floor(x)
        quotients.append(int(a))
        frac = x - a
    return ContinuedFraction(a0=int(a0), partial_quotients=tuple(quotients))


def convergents(cf: ContinuedFraction) -> list[tuple[int, int]]:
    """Convergents p_k/q_k via the standard recurrence; each pair is coprime."""
    p_prev, q_prev = 1, 0
    p, q = cf.a0, 1
    out = [(p, q)]
    for a in cf.partial_quotients:
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        out.append((p, q))
    return out


def scaled_dist(theta: float, q: int) -> float:
    """q * ||q theta||, the scaled distance of q*theta to the integers."""
    if q < 1:
        raise ValueError("q must be >= 1")
    qt = q * theta
    return q * abs(qt - round(qt))


def hurwitz_scan(
    theta: float, q_max: int
) -> tuple[float, int, list[tuple[int, float]]]:
    """Scan q = 1..q_max and return (min value, argmin q, record trace).

    The trace holds every q that set a new record.  The liminf behaviour,
    not the plain minimum, is what the sharp 5^(-1/2) constant describes,
    so callers inspecting asymptotics want the full trace.
    """
    if q_max < 1:
        raise ValueError("q_max must be >= 1")
    best = math.inf
    best_q = 0
    trace: list[tuple[int, float]] = []
    for q in range(1, q_max + 1):
        v = scaled_dist(theta, q)
        if v < best:
            best = v
            best_q = q
            trace.append((q, v))
    return best, best_q, trace


def golden_equivalent_value(a: int, b: int, c: int, d: int) -> GoldenEquivalent:
    """Evaluate (a phi + b)/(c phi + d); the map must be unimodular."""
    if c == 0 and d == 0:
        raise DegenerateMap("zero denominator row")
    if abs(a * d - b * c) != 1:
        raise NotUnimodular(f"det = {a * d - b * c}")
    return GoldenEquivalent(a=a, b=b, c=c, d=d, value=(a * PHI + b) / (c * PHI + d))


@lru_cache(maxsize=8)
def _equivalence_table(bound: int) -> tuple[np.ndarray, np.ndarray]:
    """All unimodular (a, b, c, d) with |entries| <= bound, plus their values.

    (a, b, c, d) and (-a, -b, -c, -d) give the same value; only the
    canonical half (first nonzero of (c, d) positive) is kept.  Sorted by
    (max |entry|, a, b, c, d) so that a first-occurrence argmin on the
    error array realizes the documented tie-breaking.
    """
    rng = np.arange(-bound, bound + 1, dtype=np.int64)
    B, C, D = (m.ravel() for m in np.meshgrid(rng, rng, rng, indexing="ij"))
    canonical = (C > 0) | ((C == 0) & (D > 0))
    chunks = []
    for a in rng:
        mask = (np.abs(a * D - B * C) == 1) & canonical
        if mask.any():
            chunks.append(
                np.stack(
                    [np.full(int(mask.sum()), a), B[mask], C[mask], D[mask]], axis=1
                )
            )
    table = np.concatenate(chunks)
    values = (table[:, 0] * PHI + table[:, 1]) / (table[:, 2] * PHI + table[:, 3])
    maxabs = np.abs(table).max(axis=1)
    # One value has many representations (recompose with any matrix fixing
    # phi), so ties are common; prefer the simplest denominator, which makes
    # exact hits return the identity/translate tuple.
    A, B, C, D = (table[:, k] for k in range(4))
    order = np.lexsort(
        (B, A, D, C, np.abs(B), np.abs(A), np.abs(D), np.abs(C), maxabs)
    )
    return table[order], values[order]


def nearest_golden_equivalent(
    g: float, coeff_bound: int = DEFAULT_COEFF_BOUND
) -> GoldenEquivalent:
    """Exhaustive search for the golden-equivalent number closest to g.

    Ties on |g - value| go to the smallest max |entry|, then lexicographic
    (a, b, c, d); the search is deterministic.
    """
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be >= 1")
    if not math.isfinite(g):
        raise ValueError("g must be finite")
    table, values = _equivalence_table(coeff_bound)
    idx = int(np.argmin(np.abs(values - g)))
    a, b, c, d = (int(t) for t in table[idx])
    return GoldenEquivalent(a=a, b=b, c=c, d=d, value=float(values[idx]))
