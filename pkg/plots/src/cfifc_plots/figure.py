"""Render sum-rate/upper-bound curves from sweep CSV files.

The only coupling to the sweep tool is its CSV contract: the exact header
below, one row per grid point, ascending g.  Each input file contributes a
sum_rate curve; the upper_bound_sum curve of the first file is drawn on the
same axes for the gap to be read off visually.
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .errors import EmptyInput, HeaderMismatch

CSV_HEADER = (
    "g,snr_db,regime,lambda1,lambda2,v1,v2,"
    "rate_per_user,sum_rate,upper_bound_sum,gap"
)

# Pinned style: every run of the tool draws identical pixels from
# identical inputs.
_STYLE = {
    "figure.figsize": (8.0, 5.0),
    "figure.dpi": 100,
    "savefig.dpi": 100,
    "font.size": 10,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "lines.linewidth": 1.0,
    "svg.hashsalt": "cfifc-plots",
}


@dataclass(frozen=True)
class FigureSpec:
    input_csv: str
    output_image: str
    title: str = ""
    overlay_csvs: tuple[str, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class Curve:
    label: str
    g: tuple[float, ...]
    sum_rate: tuple[float, ...]
    upper_bound_sum: tuple[float, ...]


def read_curve(path: str) -> Curve:
    """Read (g, sum_rate, upper_bound_sum) columns; validate the contract."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise HeaderMismatch(f"{path}: empty file, expected sweep CSV")
        if ",".join(header) != CSV_HEADER:
            raise HeaderMismatch(
                f"{path}: header {','.join(header)!r} does not match the "
                "sweep-output contract"
            )
        g, rate, bound = [], [], []
        for row in reader:
            g.append(float(row[0]))
            rate.append(float(row[8]))
            bound.append(float(row[9]))
    if not g:
        raise EmptyInput(f"{path}: no data rows")
    label = os.path.splitext(os.path.basename(path))[0]
    return Curve(label=label, g=tuple(g), sum_rate=tuple(rate),
                 upper_bound_sum=tuple(bound))


def render_figure(spec: FigureSpec) -> None:
    """Write the figure for spec to spec.output_image (format by suffix)."""
    curves = [read_curve(spec.input_csv)]
    curves += [read_curve(p) for p in spec.overlay_csvs]

    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        for curve in curves:
            ax.plot(curve.g, curve.sum_rate, label=curve.label)
        first = curves[0]
        ax.plot(first.g, first.upper_bound_sum, linestyle="--", color="black",
                label="upper bound")
        ax.set_xlabel("g")
        ax.set_ylabel("bits per channel use")
        if spec.title:
            ax.set_title(spec.title)
        ax.legend()
        fig.tight_layout()
        # Strip the library-version text chunk so regeneration after an
        # environment upgrade stays byte-comparable; other writers (SVG,
        # PDF) reject the key.
        metadata = (
            {"Software": None}
            if spec.output_image.lower().endswith(".png")
            else None
        )
        fig.savefig(spec.output_image, metadata=metadata)
        plt.close(fig)
