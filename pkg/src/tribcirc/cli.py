"""Command-line verifier: sweep a parameter grid and write a JSON or CSV report.

Example:
  tribcirc-verify --n-max 12 --format json --out report.json
  tribcirc-verify --presets --n-max 15
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ConfigInvalid
from .verify import CHECKS, SweepConfig, render, run_sweep, summarize

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_CONFIG = 2


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tribcirc-verify",
        description="Check closed-form eigenvalues, norms and determinants of "
        "Tribonacci circulants against brute-force oracles.",
    )
    for axis in "pqr":
        ap.add_argument(f"--{axis}-min", type=int, default=-2)
        ap.add_argument(f"--{axis}-max", type=int, default=3)
    ap.add_argument("--n-max", type=int, default=12)
    ap.add_argument("--tol", type=float, default=1e-8, help="relative tolerance (eigenvalues, norms)")
    ap.add_argument("--det-tol", type=float, default=1e-6, help="relative tolerance for determinants")
    ap.add_argument("--checks", default=None, help=f"comma list from {','.join(CHECKS)}")
    ap.add_argument("--presets", action="store_true", help="run the named-sequence identities")
    ap.add_argument("--format", choices=("json", "csv"), default="json")
    ap.add_argument("--out", default=None, help="output path (default: stdout)")
    ap.add_argument("--include-repeated", action="store_true",
                    help="evaluate grid cells whose characteristic cubic has a repeated root")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--seed", type=int, default=None, help="reserved; no check is randomized")
    return ap


def config_from_args(args) -> SweepConfig:
    if args.checks is None:
        checks = {"presets"} if args.presets else set(CHECKS)
    else:
        checks = {c.strip() for c in args.checks.split(",") if c.strip()}
        if args.presets:
            checks.add("presets")
    cfg = SweepConfig(
        p_range=(args.p_min, args.p_max),
        q_range=(args.q_min, args.q_max),
        r_range=(args.r_min, args.r_max),
        n_max=args.n_max,
        tolerance_rel=args.tol,
        det_tolerance_rel=args.det_tol,
        checks=frozenset(checks),
        output_format=args.format,
        output_path=args.out,
        include_repeated=args.include_repeated,
        workers=args.workers,
        seed=args.seed,
    )
    cfg.validate()
    return cfg


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
    except ConfigInvalid as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    records = run_sweep(cfg)
    text = render(records, cfg)
    try:
        if cfg.output_path is None:
            sys.stdout.write(text)
        else:
            Path(cfg.output_path).write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        print(f"error: cannot write report: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    counts = summarize(records)
    print(
        f"{len(records)} records: {counts['pass']} pass, {counts['fail']} fail, "
        f"{counts['skipped']} skipped",
        file=sys.stderr,
    )
    return EXIT_FAILURES if counts["fail"] else EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
