"""Command line entry point.

`qpb verify <suite>` runs one named check suite (or `all`) and emits the
reports as a table or byte-stable JSON. Exit status: 0 when every check
passed, 1 when any check failed, 2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import sys

from .errors import ToolkitError
from .report import emit_report
from .suites import SUITE_NAMES, SuiteConfig, run_suite


def _parse_tolerance_overrides(pairs: list[str]) -> dict[str, float]:
    overrides: dict[str, float] = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise ToolkitError(f"--tolerance expects check_id=value, got {pair!r}")
        try:
            overrides[key] = float(value)
        except ValueError:
            raise ToolkitError(f"tolerance value for {key!r} is not a number: {value!r}")
    return overrides


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpb",
        description="Numerical checks for conjugate-representation operator identities.")
    sub = parser.add_subparsers(dest="command", required=True)
    verify = sub.add_parser("verify", help="run a check suite and report residuals")
    verify.add_argument("suite", choices=SUITE_NAMES)
    verify.add_argument("--n-points", type=int, default=None,
                        help="1D grid size for the selected suite (default per suite)")
    verify.add_argument("--half-extent", type=float, default=None,
                        help="1D half box size for the selected suite")
    verify.add_argument("--hbar", type=float, default=1.0)
    verify.add_argument("--n-trunc", type=int, default=64,
                        help="matrix truncation for ladder and symbolic oracles")
    verify.add_argument("--omega", type=float, default=1.0)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--tolerance", action="append", default=[], metavar="CHECK_ID=VALUE",
                        help="override one check tolerance; repeatable")
    verify.add_argument("--format", choices=("table", "json"), default="table")
    verify.add_argument("--out", default=None,
                        help="write the report to this file instead of stdout")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        config = SuiteConfig(
            suite=args.suite,
            n_points=args.n_points,
            half_extent=args.half_extent,
            hbar=args.hbar,
            n_trunc=args.n_trunc,
            omega=args.omega,
            seed=args.seed,
            tolerances=_parse_tolerance_overrides(args.tolerance),
        )
        reports = run_suite(config)
    except ToolkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = emit_report(reports, args.format)
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
