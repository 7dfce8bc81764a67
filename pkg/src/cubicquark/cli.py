"""``verify``: run the verification suites and report.

Exit codes:
    0  every check passed
    1  at least one check failed
    2  usage error
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .suites import SUITE_NAMES, RunConfig, run_suites
from .report import reports_to_json


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="verify", description="Verify the identities of the cubic quark algebra.",
                                allow_abbrev=False)
    p.add_argument("suite", choices=SUITE_NAMES + ("all",), help="suite to run")
    p.add_argument("--backend", choices=("exact", "float"), default=None,
                   help="restrict to one arithmetic backend (default: both)")
    p.add_argument("--samples", type=_positive_int, default=100, help="random samples per check (default 100)")
    p.add_argument("--seed", type=_seed, default=42, help="64-bit seed (default 42)")
    p.add_argument("--tolerance", type=_positive_float, default=1e-9, help="float tolerance (default 1e-9)")
    p.add_argument("--json", dest="json_path", default=None, help="write the reports as a JSON array")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(args.suite, args.backend, args.samples, args.seed, args.tolerance, args.json_path)
    reports = run_suites(cfg)
    for r in reports:
        print(r.line())
    failed = [r for r in reports if not r.passed]
    print(f"{len(reports) - len(failed)}/{len(reports)} checks passed")
    if cfg.json_path:
        Path(cfg.json_path).write_text(reports_to_json(reports), encoding="utf-8")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
