"""Errors raised while reading sweep CSVs for plotting."""


class PlotError(Exception):
    """Base class for figure-generation failures."""


class HeaderMismatch(PlotError):
    """The CSV header does not match the sweep-output contract."""


class EmptyInput(PlotError):
    """The CSV contains a header but no data rows."""
