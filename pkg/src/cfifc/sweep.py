"""Sweep engine and deterministic CSV / config I/O.

Every figure the CLI reproduces is a sweep over a uniform g-grid at fixed
SNR.  Grid points are independent, so the engine can fan out to worker
processes; rows are reassembled in grid order and the output is
byte-identical regardless of worker count.
"""

from __future__ import annotations

import math
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields, replace

import numpy as np

from .bounds import Regime, classify_regime
from .diophantine import nearest_golden_equivalent
from .errors import ConfigError, UnknownKey
from .precoding import adaptive_scheme, default_slot_plan, precoded_sum_rate
from .rates import ChannelPoint, achievable_sum_rate

CSV_HEADER = (
    "g,snr_db,regime,lambda1,lambda2,v1,v2,"
    "rate_per_user,sum_rate,upper_bound_sum,gap"
)

MODES = ("plain", "golden_sampled", "precoded", "adaptive")


@dataclass(frozen=True)
class SweepSpec:
    snr_db: float = 65.0
    g_min: float = 0.0
    g_max: float = 4.0
    steps: int = 4001
    mode: str = "plain"
    slots: int = 1
    coeff_bound: int = 20
    output_path: str = "-"

    def __post_init__(self):
        if self.steps < 2:
            raise ValueError("steps must be >= 2")
        if not self.g_min < self.g_max:
            raise ValueError("g_min must be < g_max")
        if self.slots < 1:
            raise ValueError("slots must be >= 1")
        if self.coeff_bound < 1:
            raise ValueError("coeff_bound must be >= 1")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")


@dataclass(frozen=True)
class SweepRow:
    g: float
    snr_db: float
    regime: str
    lambda1: float
    lambda2: float
    v1: tuple[int, int]
    v2: tuple[int, int]
    rate_per_user: float
    sum_rate: float
    upper_bound_sum: float
    gap: float


def _row_for_point(
    g: float, snr_db: float, mode: str, slots: int, coeff_bound: int
) -> SweepRow:
    snr = 10.0 ** (snr_db / 10.0)
    point = ChannelPoint(snr=snr, g=g)
    if mode == "plain":
        rp = achievable_sum_rate(point)
        minima, regime = rp.minima, rp.regime
        per_user, total = rp.per_user_rate, rp.sum_rate
        ub, gap = rp.upper_bound_sum, rp.gap
    elif mode == "golden_sampled":
        ge = nearest_golden_equivalent(g, coeff_bound)
        rp = achievable_sum_rate(ChannelPoint(snr=snr, g=ge.value))
        minima, regime = rp.minima, rp.regime
        per_user, total = rp.per_user_rate, rp.sum_rate
        ub, gap = rp.upper_bound_sum, rp.gap
    else:
        if mode == "precoded":
            pr = precoded_sum_rate(point, default_slot_plan(slots))
        else:  # adaptive
            pr = adaptive_scheme(point, slots)
        # Per-slot minima do not collapse to a single pair; report slot 1.
        minima = pr.per_slot[0].minima
        regime = classify_regime(snr, point.inr)
        total = pr.avg_sum_rate
        per_user = total / 2.0
        ub, gap = pr.avg_upper_bound_sum, pr.gap
    # Quantize to the 12-significant-digit wire format so that
    # parse_csv(serialize_csv(rows)) == rows holds exactly.
    q = lambda x: float(f"{x:.12g}")
    return SweepRow(
        g=q(g),
        snr_db=q(snr_db),
        regime=regime.value,
        lambda1=q(minima.lambda1),
        lambda2=q(minima.lambda2),
        v1=minima.v1,
        v2=minima.v2,
        rate_per_user=q(per_user),
        sum_rate=q(total),
        upper_bound_sum=q(ub),
        gap=q(gap),
    )


def _worker(args: tuple) -> SweepRow:
    return _row_for_point(*args)


def run_sweep(spec: SweepSpec, workers: int = 1) -> list[SweepRow]:
    """Evaluate the sweep grid; output order is ascending g regardless of
    how the work is partitioned."""
    grid = np.linspace(spec.g_min, spec.g_max, spec.steps)
    tasks = [
        (float(g), spec.snr_db, spec.mode, spec.slots, spec.coeff_bound)
        for g in grid
    ]
    if workers <= 1:
        return [_row_for_point(*t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunk = max(1, len(tasks) // (workers * 4))
        return list(pool.map(_worker, tasks, chunksize=chunk))


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def serialize_csv(rows: list[SweepRow]) -> str:
    """Render rows with 12-significant-digit floats and `x:y` vectors."""
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                [
                    _fmt(r.g),
                    _fmt(r.snr_db),
                    r.regime,
                    _fmt(r.lambda1),
                    _fmt(r.lambda2),
                    f"{r.v1[0]}:{r.v1[1]}",
                    f"{r.v2[0]}:{r.v2[1]}",
                    _fmt(r.rate_per_user),
                    _fmt(r.sum_rate),
                    _fmt(r.upper_bound_sum),
                    _fmt(r.gap),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def _parse_vec(text: str) -> tuple[int, int]:
    x, y = text.split(":")
    return int(x), int(y)


def parse_csv(text: str) -> list[SweepRow]:
    """Inverse of serialize_csv (floats up to 12-digit rendering)."""
    lines = text.splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError("unrecognized CSV header")
    rows = []
    for line in lines[1:]:
        f = line.split(",")
        rows.append(
            SweepRow(
                g=float(f[0]),
                snr_db=float(f[1]),
                regime=Regime(f[2]).value,
                lambda1=float(f[3]),
                lambda2=float(f[4]),
                v1=_parse_vec(f[5]),
                v2=_parse_vec(f[6]),
                rate_per_user=float(f[7]),
                sum_rate=float(f[8]),
                upper_bound_sum=float(f[9]),
                gap=float(f[10]),
            )
        )
    return rows


def write_text_atomic(path: str, text: str) -> None:
    """All-or-nothing file emission via temp-file rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".cfifc-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


_CONFIG_TYPES = {
    "snr_db": float,
    "g_min": float,
    "g_max": float,
    "steps": int,
    "mode": str,
    "slots": int,
    "coeff_bound": int,
    "output_path": str,
}


def parse_config(path: str) -> dict:
    """Read a flat key = value file whose keys mirror the sweep spec fields.

    Precedence is handled by the CLI: explicit flags beat config values,
    which beat built-in defaults.
    """
    overlay: dict = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if key not in _CONFIG_TYPES:
                raise UnknownKey(f"{path}:{lineno}: unknown key {key!r}")
            try:
                overlay[key] = _CONFIG_TYPES[key](value)
            except ValueError as exc:
                raise ConfigError(f"{path}:{lineno}: bad value for {key}: {exc}")
    return overlay


def spec_from_overlays(config: dict, cli: dict) -> SweepSpec:
    """Built-in defaults, overridden by config, overridden by explicit CLI."""
    merged = {}
    valid = {f.name for f in fields(SweepSpec)}
    for source in (config, cli):
        for key, value in source.items():
            if value is None:
                continue
            if key not in valid:
                raise UnknownKey(f"unknown sweep field {key!r}")
            merged[key] = value
    return replace(SweepSpec(), **merged) if merged else SweepSpec()
