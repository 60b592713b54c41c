"""Figure generation for sweep CSVs: sum-rate and upper-bound curves vs g."""

from .errors import EmptyInput, HeaderMismatch, PlotError
from .figure import CSV_HEADER, Curve, FigureSpec, read_curve, render_figure

__all__ = [
    "CSV_HEADER",
    "Curve",
    "EmptyInput",
    "FigureSpec",
    "HeaderMismatch",
    "PlotError",
    "read_curve",
    "render_figure",
]

__version__ = "0.1.0"
