"""Command-line front end: ``qmask scan | find-masker | verify``.

Exit codes: 0 success, 1 usage error, 2 I/O error, 3 optimizer did not converge.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .optimizer import OptimizerConfig, find_masker, min_entanglement_masker
from .scan import CASES, scan_grid, to_csv, to_json
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_NOT_CONVERGED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _cmd_scan(args) -> int:
    if args.p_steps < 2:
        raise UsageError("--p-steps must be at least 2")
    if (args.theta is None) == (args.theta_steps is None):
        raise UsageError("give exactly one of --theta or --theta-steps")
    try:
        records = scan_grid(args.case, args.p_steps, theta=args.theta, theta_steps=args.theta_steps)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    meta = {
        "tool": f"qmask {__version__}",
        "case": args.case,
        "p_steps": args.p_steps,
        "theta": args.theta if args.theta is not None else "",
        "theta_steps": args.theta_steps if args.theta_steps is not None else "",
    }
    text = to_csv(records, meta) if args.format == "csv" else to_json(records, meta)
    _emit(text, args.out)
    return EXIT_OK


def _cmd_find_masker(args) -> int:
    try:
        config = OptimizerConfig(
            restarts=args.restarts,
            max_iterations=args.max_iterations,
            seed=args.seed,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.case == "commuting":
        inputs = (np.array([1.0, 0.0]), np.array([0.0, 1.0]))
        theta = None
    else:
        if args.theta is None or not 0.0 < args.theta <= np.pi:
            raise UsageError("noncommuting case needs --theta in (0, pi]")
        theta = args.theta
        inputs = (np.array([1.0, 0.0]), np.array([np.cos(theta / 2), np.sin(theta / 2)]))
    feasible = find_masker(*inputs, config=config, workers=args.workers)
    best = min_entanglement_masker(*inputs, config=config, workers=args.workers)
    payload = {
        "tool": f"qmask {__version__}",
        "case": args.case,
        "theta": theta,
        "inputs": [[complex(z).real for z in v] for v in inputs],
        "config": config.as_dict(),
        "find_masker": feasible.as_dict(),
        "min_entanglement_masker": best.as_dict(),
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return EXIT_OK if feasible.converged and best.converged else EXIT_NOT_CONVERGED


def _cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}")
    reports = run_suite(args.suite)
    for rep in reports:
        print(rep.format())
    ok = all(r.passed for r in reports)
    print(f"overall: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qmask", description="Masking of mixtures of two single-qubit states.")
    parser.add_argument("--version", action="version", version=f"qmask {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    scan = sub.add_parser("scan", help="grid scan of entropies and entanglement (CSV/JSON)")
    scan.add_argument("--case", choices=CASES, required=True)
    scan.add_argument("--p-steps", type=int, required=True)
    scan.add_argument("--theta", type=float, help="single theta in radians")
    scan.add_argument("--theta-steps", type=int, help="uniform theta grid over the case's range")
    scan.add_argument("--format", choices=("csv", "json"), default="csv")
    scan.add_argument("--out", default=None, help="output path (default stdout)")
    scan.set_defaults(func=_cmd_scan)

    fm = sub.add_parser("find-masker", help="multi-start search for a minimum-entanglement masker")
    fm.add_argument("--case", choices=CASES, required=True)
    fm.add_argument("--theta", type=float, default=None, help="input angle for the noncommuting case (radians)")
    fm.add_argument("--seed", type=int, default=0)
    fm.add_argument("--restarts", type=int, default=64)
    fm.add_argument("--max-iterations", type=int, default=2000)
    fm.add_argument("--workers", type=int, default=1)
    fm.add_argument("--out", default=None)
    fm.set_defaults(func=_cmd_find_masker)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("--suite", required=True, help=f"one of {', '.join([*SUITES, 'all'])}")
    ver.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"qmask: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"qmask: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
