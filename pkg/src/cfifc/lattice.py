"""2-D lattice machinery: Gram matrices, Cholesky factors, Lagrange-Gauss
reduction, successive minima and an exhaustive enumeration oracle.

Successive minima are stored as quadratic-form values (squared lengths).
Reduction operates on the Gram matrix directly; at high SNR the form values
sit many orders of magnitude below the matrix entries and a Cholesky detour
would waste half the mantissa.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    NotPositiveDefinite,
    NotUnimodular,
    NumericalInstability,
    RadiusExceeded,
)

MAX_REDUCTION_ITERS = 10**6
DEFAULT_RADIUS_CAP = 10**4


@dataclass(frozen=True)
class GramMatrix2:
    """Symmetric positive-definite form q(x, y) = g11 x^2 + 2 g12 xy + g22 y^2."""

    g11: float
    g12: float
    g22: float

    def __post_init__(self):
        if not (self.g11 > 0.0 and self.det > 0.0):
            raise NotPositiveDefinite(
                f"not positive definite: g11={self.g11}, det={self.det}"
            )

    @property
    def det(self) -> float:
        return self.g11 * self.g22 - self.g12 * self.g12


@dataclass(frozen=True)
class Basis2:
    """Upper-triangular generator matrix [[b11, b12], [0, b22]]."""

    b11: float
    b12: float
    b22: float


@dataclass(frozen=True)
class UnimodularMap:
    """Integer basis change with determinant exactly +-1."""

    u11: int
    u12: int
    u21: int
    u22: int

    def __post_init__(self):
        # Exact integer arithmetic; no tolerance involved.
        if abs(self.det) != 1:
            raise NotUnimodular(f"det = {self.det}")

    @property
    def det(self) -> int:
        return self.u11 * self.u22 - self.u12 * self.u21


@dataclass(frozen=True)
class MinimaResult:
    """Both successive minima with achieving vectors and the basis change."""

    lambda1: float
    lambda2: float
    v1: tuple[int, int]
    v2: tuple[int, int]
    map: UnimodularMap


def quadratic_form_eval(G: GramMatrix2, v: tuple[int, int]) -> float:
    """Evaluate q(v) = g11 x^2 + 2 g12 xy + g22 y^2, clamped at zero."""
    x, y = v
    val = G.g11 * x * x + 2.0 * G.g12 * x * y + G.g22 * y * y
    return max(val, 0.0)


def _form_exact(G: GramMatrix2, x: int, y: int) -> float:
    # Exact rational evaluation; the straightforward float expression loses
    # up to half the mantissa to cancellation when form values are ~1e-12.
    q = (
        Fraction(G.g11) * x * x
        + 2 * Fraction(G.g12) * x * y
        + Fraction(G.g22) * y * y
    )
    return float(q)


def _canonical(v: tuple[int, int]) -> tuple[int, int]:
    x, y = v
    if x < 0 or (x == 0 and y < 0):
        return (-x, -y)
    return (x, y)


def cholesky_upper(G: GramMatrix2) -> Basis2:
    """Upper-triangular B with positive diagonal and B^T B = G."""
    # GramMatrix2 construction already rejects non-PD input, but guard the
    # sqrt arguments anyway: det > 0 in floats does not preclude a tiny
    # negative pivot after division.
    b11 = math.sqrt(G.g11)
    b12 = G.g12 / b11
    pivot = G.g22 - b12 * b12
    if pivot <= 0.0:
        raise NotPositiveDefinite(f"trailing pivot {pivot} <= 0")
    return Basis2(b11=b11, b12=b12, b22=math.sqrt(pivot))


def gauss_reduce(G: GramMatrix2) -> MinimaResult:
    """Lagrange-Gauss reduction performed directly on the Gram matrix.

    Returns the two successive minima (the diagonal of the reduced Gram
    matrix) together with the achieving integer vectors, sign-canonicalized
    so the first nonzero coordinate is positive.
    """
    a, b, c = G.g11, G.g12, G.g22
    # U columns are the current basis vectors in original coordinates.
    u11, u21 = 1, 0
    u12, u22 = 0, 1

    for _ in range(MAX_REDUCTION_ITERS):
        if a > c:
            a, c = c, a
            u11, u12 = u12, u11
            u21, u22 = u22, u21
        m = round(b / a)
        if m:
            c = c - 2.0 * m * b + m * m * a
            b = b - m * a
            u12 -= m * u11
            u22 -= m * u21
        if c >= a:
            break
    else:
        raise NumericalInstability("reduction did not settle; degenerate input")

    v1 = _canonical((u11, u21))
    v2 = _canonical((u12, u22))
    lam1 = _form_exact(G, *v1)
    lam2 = _form_exact(G, *v2)
    if lam1 > lam2:
        # Float reduction can mis-order an exact near-tie; the exact form
        # values decide.
        v1, v2 = v2, v1
        lam1, lam2 = lam2, lam1
    return MinimaResult(
        lambda1=lam1,
        lambda2=lam2,
        v1=v1,
        v2=v2,
        map=UnimodularMap(u11=v1[0], u12=v2[0], u21=v1[1], u22=v2[1]),
    )


def brute_force_minima(
    G: GramMatrix2, radius_cap: int = DEFAULT_RADIUS_CAP
) -> MinimaResult:
    """Exhaustive verification oracle for :func:`gauss_reduce`.

    Enumerates every integer pair inside the ellipse q(x, y) <= v0, where v0
    is the reduction candidate for the second minimum, and picks the minima
    with deterministic tie-breaking: lexicographic on (|x|, |y|, x, y) after
    sign canonicalization.
    """
    if radius_cap < 1:
        raise ValueError("radius_cap must be >= 1")
    candidate = gauss_reduce(G)
    v0 = candidate.lambda2 * (1.0 + 1e-6)

    a, b, c = G.g11, G.g12, G.g22
    mu_min = 0.5 * (a + c - math.hypot(a - c, 2.0 * b))
    if mu_min <= 0.0:
        raise NotPositiveDefinite("eigenvalue underflow")
    halfwidth = math.sqrt(v0 / mu_min)
    if halfwidth > radius_cap:
        raise RadiusExceeded(
            f"enumeration needs half-width {halfwidth:.3g} > cap {radius_cap}"
        )

    # The raw det = g11*g22 - g12^2 cancels badly at high SNR; compute the
    # scalar exactly once and reuse it in the stable factored form below.
    det = float(
        Fraction(G.g11) * Fraction(G.g22) - Fraction(G.g12) * Fraction(G.g12)
    )

    # Only the canonical half plane: x > 0 with any y, plus x = 0 with y >= 1.
    # Intervals grow by one integer each side: over-enumeration is harmless
    # (the sort decides), missing a boundary achiever is not.
    x_max = int(math.floor(math.sqrt(v0 * c / det) * (1.0 + 1e-9))) + 1
    xs = np.arange(0, x_max + 1, dtype=np.int64)
    disc = np.maximum((b * xs) ** 2 - c * (a * xs * xs - v0), 0.0)
    yc = -(b / c) * xs
    w = np.sqrt(disc) / c
    ylo = np.ceil(yc - w).astype(np.int64) - 1
    yhi = np.floor(yc + w).astype(np.int64) + 1
    ylo[0] = max(ylo[0], 1)
    counts = np.maximum(yhi - ylo + 1, 0)

    flat_x = np.repeat(xs, counts)
    starts = np.repeat(ylo, counts)
    offsets = np.arange(counts.sum()) - np.repeat(np.cumsum(counts) - counts, counts)
    flat_y = starts + offsets

    # Sum-of-squares (Cholesky) evaluation: no cancellation, unlike the
    # direct g11 x^2 + 2 g12 xy + g22 y^2 expression.
    b11 = math.sqrt(a)
    s = b11 * flat_x + (b / b11) * flat_y
    q = s * s + (det / a) * flat_y * flat_y
    if flat_x.size == 0:  # pragma: no cover - v1 always lies inside
        raise NumericalInstability("empty enumeration ellipse")

    order = np.lexsort((flat_y, flat_x, np.abs(flat_y), np.abs(flat_x), q))
    flat_x, flat_y = flat_x[order], flat_y[order]

    x1, y1 = int(flat_x[0]), int(flat_y[0])
    v2 = None
    for j in range(1, flat_x.size):
        if x1 * int(flat_y[j]) - y1 * int(flat_x[j]) != 0:
            v2 = (int(flat_x[j]), int(flat_y[j]))
            break
    if v2 is None:  # pragma: no cover - second basis vector always enumerated
        raise NumericalInstability("no independent second vector inside ellipse")

    v1 = (x1, y1)
    return MinimaResult(
        lambda1=_form_exact(G, *v1),
        lambda2=_form_exact(G, *v2),
        v1=v1,
        v2=v2,
        map=UnimodularMap(u11=v1[0], u12=v2[0], u21=v1[1], u22=v2[1]),
    )
