"""Command-line front end.

Three subcommands share the report machinery:

  verify  -- one case at one prime (optionally one or more alpha values)
  scan    -- sweep a prime range over selected cases and the alpha set
  lemmas  -- run the harmonic/power-sum/Bernoulli verdict suites

Exit status is 0 when nothing failed, 1 when any congruence failed, and 2
for usage or I/O errors.  CONGRLAB_WORKERS in the environment overrides
the worker count, including an explicit --workers flag.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Mapping, Optional, Sequence

from .congruences import CATALOG
from .residues import is_prime, parse_rational
from .scanner import (
    DEFAULT_ALPHA_SWEEP,
    DEFAULT_PRIME_MAX,
    DEFAULT_PRIME_MIN,
    ScanConfig,
    UsageError,
    emit_report,
    run_scan,
)

__all__ = ["build_parser", "main", "parse_config"]

_LEMMA_DEFAULT_MAX = 199


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="congrlab",
        description="Exact verification of binomial/harmonic congruences "
        "modulo prime powers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p):
        p.add_argument(
            "--format",
            choices=("text", "json", "csv"),
            default="text",
            help="report format (default: text)",
        )
        p.add_argument("-o", "--output", help="write the report to this path")
        p.add_argument(
            "--workers",
            type=int,
            help="parallel worker processes (default: available parallelism)",
        )
        p.add_argument(
            "--tightness",
            action="store_true",
            help="compare at one power higher so the reported valuation can "
            "expose congruences holding beyond their stated modulus",
        )

    scan = sub.add_parser("scan", help="sweep a prime range")
    scan.add_argument(
        "--primes",
        default=f"{DEFAULT_PRIME_MIN}..{DEFAULT_PRIME_MAX}",
        help="inclusive prime range A..B (default: %(default)s)",
    )
    scan.add_argument(
        "--case",
        action="append",
        help="catalog case id, repeatable or comma-separated (default: all)",
    )
    scan.add_argument(
        "--alpha",
        action="append",
        help='rational alpha "a/b", repeatable or comma-separated '
        "(default: the standard sweep set)",
    )
    scan.add_argument(
        "--claimed-ranges",
        action="store_true",
        help="apply each case from its claimed prime range instead of its "
        "verified one (may produce genuine failures)",
    )
    add_output_flags(scan)

    verify = sub.add_parser("verify", help="check a single case at one prime")
    verify.add_argument("--case", required=True, help="catalog case id")
    verify.add_argument("--p", required=True, type=int, help="odd prime")
    verify.add_argument(
        "--alpha",
        action="append",
        help="alpha value(s) for parametric cases (default: the sweep set)",
    )
    verify.add_argument(
        "--claimed-ranges",
        action="store_true",
        help="apply the case from its claimed prime range",
    )
    add_output_flags(verify)

    lemmas = sub.add_parser(
        "lemmas", help="run the harmonic and Bernoulli verdict suites"
    )
    lemmas.add_argument(
        "--primes",
        default=f"{DEFAULT_PRIME_MIN}..{_LEMMA_DEFAULT_MAX}",
        help="inclusive prime range A..B (default: %(default)s)",
    )
    add_output_flags(lemmas)

    return parser


def _parse_prime_range(text: str):
    parts = text.split("..")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise UsageError(f"--primes expects A..B, got {text!r}") from None
    return lo, hi


def _split_repeatable(values) -> list:
    out = []
    for chunk in values or []:
        out.extend(part.strip() for part in chunk.split(",") if part.strip())
    return out


def _parse_alphas(values) -> tuple:
    names = _split_repeatable(values)
    if not names:
        return DEFAULT_ALPHA_SWEEP
    alphas = set()
    for name in names:
        try:
            alphas.add(parse_rational(name))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return tuple(sorted(alphas))


def _parse_cases(values) -> tuple:
    names = _split_repeatable(values)
    if not names or "all" in names:
        return ()
    for name in names:
        if name not in CATALOG:
            raise UsageError(f"unknown congruence case {name!r}")
    # preserve catalog order regardless of how the flags were spelled
    wanted = set(names)
    return tuple(cid for cid in CATALOG if cid in wanted)


def _resolve_workers(flag_value: Optional[int], env: Mapping[str, str]) -> int:
    raw = env.get("CONGRLAB_WORKERS")
    if raw is not None:
        try:
            workers = int(raw)
        except ValueError:
            raise UsageError(f"CONGRLAB_WORKERS must be an integer, got {raw!r}")
        return workers
    if flag_value is not None:
        return flag_value
    return os.cpu_count() or 1


def parse_config(argv: Sequence[str], env: Mapping[str, str]) -> ScanConfig:
    """Turn CLI arguments and the environment into a validated ScanConfig."""
    ns = build_parser().parse_args(list(argv))
    workers = _resolve_workers(ns.workers, env)

    if ns.command == "lemmas":
        lo, hi = _parse_prime_range(ns.primes)
        config = ScanConfig(
            command="lemmas",
            prime_min=lo,
            prime_max=hi,
            fmt=ns.format,
            output=ns.output,
            workers=workers,
            tightness=ns.tightness,
        )
    elif ns.command == "verify":
        if ns.p < 3 or ns.p % 2 == 0 or not is_prime(ns.p):
            raise UsageError(f"--p expects an odd prime, got {ns.p}")
        config = ScanConfig(
            command="verify",
            prime_min=ns.p,
            prime_max=ns.p,
            alphas=_parse_alphas(ns.alpha),
            cases=_parse_cases([ns.case]),
            fmt=ns.format,
            output=ns.output,
            workers=1,
            tightness=ns.tightness,
            claimed_ranges=ns.claimed_ranges,
        )
    else:
        lo, hi = _parse_prime_range(ns.primes)
        config = ScanConfig(
            command="scan",
            prime_min=lo,
            prime_max=hi,
            alphas=_parse_alphas(ns.alpha),
            cases=_parse_cases(ns.case),
            fmt=ns.format,
            output=ns.output,
            workers=workers,
            tightness=ns.tightness,
            claimed_ranges=ns.claimed_ranges,
        )
    return config.validate()


def main(argv: Optional[Sequence[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        config = parse_config(argv, os.environ)
        report = run_scan(config)
        data = emit_report(report, config.fmt)
    except UsageError as exc:
        print(f"congrlab: {exc}", file=sys.stderr)
        return 2
    try:
        if config.output:
            with open(config.output, "wb") as handle:
                handle.write(data)
        else:
            sys.stdout.buffer.write(data)
            sys.stdout.buffer.flush()
    except OSError as exc:
        print(f"congrlab: cannot write report: {exc}", file=sys.stderr)
        return 2
    return 1 if report.failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
