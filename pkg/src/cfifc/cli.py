"""Command-line front end.

Subcommands mirror the library surface: `rate`, `sweep`, `approx`,
`hurwitz`, `reduce`, `asymptotic`.  Single-point commands emit one JSON
object; `sweep` emits CSV.  Exit codes: 0 success, 2 argument/config
error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bounds import classify_regime
from .diophantine import hurwitz_scan, nearest_golden_equivalent
from .errors import CfifcError, ConfigError, UnknownKey
from .lattice import GramMatrix2, gauss_reduce
from .precoding import adaptive_scheme, default_slot_plan, precoded_sum_rate
from .rates import ChannelPoint, achievable_sum_rate, asymptotic_golden_predictor
from .sweep import (
    SweepSpec,
    parse_config,
    run_sweep,
    serialize_csv,
    spec_from_overlays,
    write_text_atomic,
)

CONFIG_ENV = "CFIFC_CONFIG"


def _round12(x: float) -> float:
    return float(f"{x:.12g}")


def _emit_json(obj: dict, out) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def _emit_text(text: str, path: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        write_text_atomic(path, text)


def _vec(v: tuple[int, int]) -> str:
    return f"{v[0]}:{v[1]}"


def _cmd_rate(args) -> None:
    snr = 10.0 ** (args.snr_db / 10.0)
    point = ChannelPoint(snr=snr, g=args.g)
    obj: dict = {"g": _round12(args.g), "snr_db": _round12(args.snr_db)}
    if args.adaptive or args.slots > 1:
        if args.adaptive:
            pr = adaptive_scheme(point, args.slots)
        else:
            pr = precoded_sum_rate(point, default_slot_plan(args.slots))
        obj.update(
            {
                "regime": classify_regime(snr, point.inr).value,
                "slots": len(pr.per_slot),
                "slot_sum_rates": [_round12(rp.sum_rate) for rp in pr.per_slot],
                "sum_rate": _round12(pr.avg_sum_rate),
                "rate_per_user": _round12(pr.avg_sum_rate / 2.0),
                "upper_bound_sum": _round12(pr.avg_upper_bound_sum),
                "gap": _round12(pr.gap),
            }
        )
    else:
        rp = achievable_sum_rate(point)
        obj.update(
            {
                "regime": rp.regime.value,
                "lambda1": _round12(rp.minima.lambda1),
                "lambda2": _round12(rp.minima.lambda2),
                "v1": _vec(rp.minima.v1),
                "v2": _vec(rp.minima.v2),
                "rate_per_user": _round12(rp.per_user_rate),
                "sum_rate": _round12(rp.sum_rate),
                "upper_bound_sum": _round12(rp.upper_bound_sum),
                "gap": _round12(rp.gap),
            }
        )
    _emit_json(obj, sys.stdout)


def _cmd_sweep(args) -> None:
    config = {}
    config_path = args.config or os.environ.get(CONFIG_ENV)
    if config_path:
        config = parse_config(config_path)
    cli = {
        "snr_db": args.snr_db,
        "g_min": args.g_min,
        "g_max": args.g_max,
        "steps": args.steps,
        "mode": args.mode,
        "slots": args.slots,
        "coeff_bound": args.coeff_bound,
        "output_path": args.out,
    }
    spec = spec_from_overlays(config, cli)
    rows = run_sweep(spec, workers=args.workers)
    _emit_text(serialize_csv(rows), spec.output_path)


def _cmd_approx(args) -> None:
    ge = nearest_golden_equivalent(args.g, args.coeff_bound)
    _emit_json(
        {
            "g": _round12(args.g),
            "coeff_bound": args.coeff_bound,
            "a": ge.a,
            "b": ge.b,
            "c": ge.c,
            "d": ge.d,
            "value": _round12(ge.value),
            "error": _round12(abs(args.g - ge.value)),
        },
        sys.stdout,
    )


def _cmd_hurwitz(args) -> None:
    min_value, argmin_q, trace = hurwitz_scan(args.theta, args.q_max)
    _emit_json(
        {
            "theta": _round12(args.theta),
            "q_max": args.q_max,
            "min_value": _round12(min_value),
            "argmin_q": argmin_q,
            "trace": [{"q": q, "value": _round12(v)} for q, v in trace],
        },
        sys.stdout,
    )


def _cmd_reduce(args) -> None:
    res = gauss_reduce(GramMatrix2(g11=args.g11, g12=args.g12, g22=args.g22))
    _emit_json(
        {
            "lambda1": _round12(res.lambda1),
            "lambda2": _round12(res.lambda2),
            "v1": _vec(res.v1),
            "v2": _vec(res.v2),
            "u": [res.map.u11, res.map.u12, res.map.u21, res.map.u22],
        },
        sys.stdout,
    )


def _cmd_asymptotic(args) -> None:
    snr = 10.0 ** (args.snr_db / 10.0)
    pred = asymptotic_golden_predictor(ChannelPoint(snr=snr, g=args.g))
    _emit_json(
        {
            "g": _round12(args.g),
            "snr_db": _round12(args.snr_db),
            "x_opt": _round12(pred.x_opt),
            "lambda1_pred": _round12(pred.lambda1_pred),
            "lambda2_pred": _round12(pred.lambda2_pred),
            "rate_per_user_pred": _round12(pred.per_user_rate_pred),
            "gap_pred": _round12(pred.gap_pred),
        },
        sys.stdout,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfifc",
        description="Compute-and-forward rates and bounds for the "
        "2-user Gaussian symmetric interference channel.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rate", help="rate at one channel point (JSON)")
    p.add_argument("--snr-db", type=float, required=True)
    p.add_argument("--g", type=float, required=True)
    p.add_argument("--slots", type=int, default=1)
    p.add_argument("--adaptive", action="store_true")
    p.set_defaults(func=_cmd_rate)

    p = sub.add_parser("sweep", help="g-grid sweep to CSV")
    p.add_argument("--snr-db", type=float, default=None)
    p.add_argument("--g-min", type=float, default=None)
    p.add_argument("--g-max", type=float, default=None)
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--mode", choices=("plain", "golden_sampled", "precoded", "adaptive"), default=None)
    p.add_argument("--slots", type=int, default=None)
    p.add_argument("--coeff-bound", type=int, default=None)
    p.add_argument("--out", default=None, help="output path, '-' for stdout")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--config", default=None, help="key = value overlay file")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("approx", help="nearest golden-equivalent number (JSON)")
    p.add_argument("--g", type=float, required=True)
    p.add_argument("--coeff-bound", type=int, default=20)
    p.set_defaults(func=_cmd_approx)

    p = sub.add_parser("hurwitz", help="scan q ||q theta|| records (JSON)")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--q-max", type=int, required=True)
    p.set_defaults(func=_cmd_hurwitz)

    p = sub.add_parser("reduce", help="Gauss-reduce a Gram matrix (JSON)")
    p.add_argument("--g11", type=float, required=True)
    p.add_argument("--g12", type=float, required=True)
    p.add_argument("--g22", type=float, required=True)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("asymptotic", help="golden-ratio high-SNR predictions (JSON)")
    p.add_argument("--snr-db", type=float, required=True)
    p.add_argument("--g", type=float, required=True)
    p.set_defaults(func=_cmd_asymptotic)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (ConfigError, UnknownKey, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CfifcError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
