"""Command-line figure generation from sweep CSV files."""

from __future__ import annotations

import argparse
import sys

from .errors import PlotError
from .figure import FigureSpec, render_figure


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfifc-plot",
        description="Plot sum-rate and upper-bound curves from sweep CSVs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("plot", help="render one figure from one or more CSVs")
    p.add_argument(
        "--in", dest="inputs", action="append", required=True,
        metavar="CSV", help="input CSV; repeat to overlay curves",
    )
    p.add_argument("--out", required=True, help="output image path")
    p.add_argument("--title", default="", help="figure title")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    spec = FigureSpec(
        input_csv=args.inputs[0],
        output_image=args.out,
        title=args.title,
        overlay_csvs=tuple(args.inputs[1:]),
    )
    try:
        render_figure(spec)
    except (PlotError, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
