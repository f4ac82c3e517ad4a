"""Prime-range sweeps, parallel orchestration and report emission.

Work is fanned out one prime per unit: all cases and alpha values for a
prime share that prime's context (harmonic table, power sums, cached
binomials).  Workers only read immutable inputs; results are merged and
sorted by (case, p, alpha) before emission, so a report is byte-identical
no matter how many workers produced it.  Residues are serialized as
decimal strings because they routinely exceed 64 bits.
"""

from __future__ import annotations

import csv
import io
import json
import multiprocessing
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .bernoulli import warm_bernoulli_cache
from .congruences import CATALOG, PrimeContext, verify_case
from .harmonic import run_lemma_suites
from .residues import CongrlabError, Valuation
from .verdicts import FAIL, PASS, Verdict

__all__ = [
    "DEFAULT_ALPHA_SWEEP",
    "DEFAULT_PRIME_MAX",
    "DEFAULT_PRIME_MIN",
    "ScanConfig",
    "ScanReport",
    "UsageError",
    "emit_report",
    "odd_primes_between",
    "report_from_json",
    "run_scan",
    "sieve_primes",
]


class UsageError(CongrlabError):
    """Invalid configuration: bad flag values, unknown case ids, bad ranges."""


DEFAULT_PRIME_MIN = 3
DEFAULT_PRIME_MAX = 499

# Integer alphas -3..6 plus a spread of small rationals; covers the alpha = 2
# and alpha = 1/2 specializations and generic numerators/denominators.
DEFAULT_ALPHA_SWEEP = tuple(
    sorted(
        [Fraction(n) for n in range(-3, 7)]
        + [
            Fraction(1, 2),
            Fraction(-1, 2),
            Fraction(1, 3),
            Fraction(2, 3),
            Fraction(3, 2),
            Fraction(5, 2),
            Fraction(1, 4),
            Fraction(7, 3),
        ]
    )
)


def sieve_primes(limit: int) -> list:
    """All primes <= limit by a plain sieve of Eratosthenes."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for n in range(2, int(limit**0.5) + 1):
        if flags[n]:
            start = n * n
            flags[start :: n] = bytearray(len(range(start, limit + 1, n)))
    return [n for n, ok in enumerate(flags) if ok]


def odd_primes_between(lo: int, hi: int) -> list:
    return [p for p in sieve_primes(hi) if p >= max(lo, 3)]


@dataclass(frozen=True)
class ScanConfig:
    """A validated scan request.

    `workers` and `output` are execution details: they affect where and how
    fast the report is produced, never its contents, and are therefore not
    echoed into the report.
    """

    command: str = "scan"  # "scan", "verify" or "lemmas"
    prime_min: int = DEFAULT_PRIME_MIN
    prime_max: int = DEFAULT_PRIME_MAX
    alphas: tuple = DEFAULT_ALPHA_SWEEP
    cases: tuple = ()  # empty means the whole catalog
    fmt: str = "text"
    output: Optional[str] = None
    workers: int = 1
    tightness: bool = False
    claimed_ranges: bool = False

    def validate(self) -> "ScanConfig":
        if self.command not in ("scan", "verify", "lemmas"):
            raise UsageError(f"unknown command {self.command!r}")
        if self.prime_min < 3:
            raise UsageError("prime range must start at 3 or above")
        if self.prime_max < self.prime_min:
            raise UsageError("empty prime range")
        if self.fmt not in ("text", "json", "csv"):
            raise UsageError(f"unknown output format {self.fmt!r}")
        if self.workers < 1:
            raise UsageError("worker count must be >= 1")
        for cid in self.cases:
            if cid not in CATALOG:
                raise UsageError(f"unknown congruence case {cid!r}")
        if not self.alphas:
            raise UsageError("empty alpha set")
        return self

    def case_ids(self) -> tuple:
        return self.cases if self.cases else tuple(CATALOG)

    def echo(self) -> dict:
        return {
            "command": self.command,
            "prime_min": self.prime_min,
            "prime_max": self.prime_max,
            "alphas": [str(a) for a in self.alphas],
            "cases": list(self.case_ids()) if self.command != "lemmas" else [],
            "tightness": self.tightness,
            "claimed_ranges": self.claimed_ranges,
        }


@dataclass
class ScanReport:
    config: dict
    records: list = field(default_factory=list)
    summary: dict = field(default_factory=lambda: {"pass": 0, "fail": 0, "skip": 0})
    anomalies: list = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return self.summary["fail"] > 0


def _scan_one_prime(task) -> list:
    p, case_ids, alphas, tightness, claimed = task
    cases = [CATALOG[cid] for cid in case_ids]
    extra = 1 if tightness else 0
    needed = [
        case.modulus_exponent(p) + extra
        for case in cases
        if p >= (case.claimed_min_p if claimed else case.min_p)
    ]
    ctx = PrimeContext(p, max(needed, default=1))
    out = []
    for case in cases:
        if case.alpha_mode == "none":
            out.append(verify_case(case, p, None, tightness, ctx, claimed))
        else:
            for alpha in alphas:
                out.append(verify_case(case, p, alpha, tightness, ctx, claimed))
    return out


def _lemma_one_prime(task) -> list:
    (p,) = task
    return run_lemma_suites(p)


def _run_tasks(worker, tasks, workers: int) -> list:
    if workers <= 1 or len(tasks) <= 1:
        batches = [worker(task) for task in tasks]
    else:
        methods = multiprocessing.get_all_start_methods()
        ctx = multiprocessing.get_context("fork" if "fork" in methods else None)
        with ctx.Pool(min(workers, len(tasks))) as pool:
            batches = pool.map(worker, tasks)
    return [verdict for batch in batches for verdict in batch]


def _summarize(records) -> dict:
    counts = {"pass": 0, "fail": 0, "skip": 0}
    for record in records:
        counts[record.status] += 1
    return counts


def _find_anomalies(records, tightness: bool) -> list:
    """Failures, plus (under tightness) congruences holding one power higher."""
    out = []
    for record in records:
        if record.status == FAIL:
            out.append(record)
        elif (
            tightness
            and record.status == PASS
            and record.valuation is not None
            and record.valuation.value > record.m
        ):
            out.append(record)
    return out


def run_scan(config: ScanConfig) -> ScanReport:
    """Run the configured sweep and assemble the deterministic report."""
    config.validate()
    primes = odd_primes_between(config.prime_min, config.prime_max)

    if config.command == "lemmas":
        if primes and max(primes) >= 5:
            warm_bernoulli_cache(max(primes) - 3)
        tasks = [(p,) for p in primes]
        records = _run_tasks(_lemma_one_prime, tasks, config.workers)
    else:
        case_ids = config.case_ids()
        if primes and any(CATALOG[cid].needs_bernoulli for cid in case_ids):
            if max(primes) >= 5:
                warm_bernoulli_cache(max(primes) - 3)
        tasks = [
            (p, case_ids, config.alphas, config.tightness, config.claimed_ranges)
            for p in primes
        ]
        records = _run_tasks(_scan_one_prime, tasks, config.workers)

    records.sort(key=Verdict.sort_key)
    return ScanReport(
        config=config.echo(),
        records=records,
        summary=_summarize(records),
        anomalies=_find_anomalies(records, config.tightness),
    )


# ---------------------------------------------------------------------------
# emission
# ---------------------------------------------------------------------------


def _record_dict(v: Verdict) -> dict:
    return {
        "case": v.case,
        "p": v.p,
        "alpha": None if v.alpha is None else str(v.alpha),
        "m": v.m,
        "lhs": None if v.lhs is None else str(v.lhs),
        "rhs": None if v.rhs is None else str(v.rhs),
        "status": v.status,
        "valuation": None if v.valuation is None else str(v.valuation),
        "reason": v.reason or None,
    }


def _record_from_dict(d: dict) -> Verdict:
    return Verdict(
        case=d["case"],
        p=d["p"],
        alpha=None if d["alpha"] is None else Fraction(d["alpha"]),
        m=d["m"],
        lhs=None if d["lhs"] is None else int(d["lhs"]),
        rhs=None if d["rhs"] is None else int(d["rhs"]),
        status=d["status"],
        valuation=None if d["valuation"] is None else Valuation.parse(d["valuation"]),
        reason=d["reason"] or "",
    )


def emit_report(report: ScanReport, fmt: str) -> bytes:
    """Serialize a report as UTF-8 bytes with LF line endings."""
    if fmt == "json":
        payload = {
            "config": report.config,
            "records": [_record_dict(v) for v in report.records],
            "summary": report.summary,
            "anomalies": [_record_dict(v) for v in report.anomalies],
        }
        return (json.dumps(payload, indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["case", "p", "alpha", "m", "lhs", "rhs", "status", "valuation"])
        for v in report.records:
            writer.writerow(
                [
                    v.case,
                    v.p,
                    "" if v.alpha is None else str(v.alpha),
                    "" if v.m is None else v.m,
                    "" if v.lhs is None else v.lhs,
                    "" if v.rhs is None else v.rhs,
                    v.status,
                    "" if v.valuation is None else str(v.valuation),
                ]
            )
        return buf.getvalue().encode()
    if fmt == "text":
        return _emit_text(report)
    raise UsageError(f"unknown output format {fmt!r}")


def _emit_text(report: ScanReport) -> bytes:
    headers = ["case", "p", "alpha", "m", "lhs", "rhs", "status", "valuation", "reason"]
    rows = []
    for v in report.records:
        rows.append(
            [
                v.case,
                str(v.p),
                "" if v.alpha is None else str(v.alpha),
                "" if v.m is None else str(v.m),
                "" if v.lhs is None else str(v.lhs),
                "" if v.rhs is None else str(v.rhs),
                v.status,
                "" if v.valuation is None else str(v.valuation),
                v.reason,
            ]
        )
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    s = report.summary
    lines.append("")
    lines.append(f"summary: pass={s['pass']} fail={s['fail']} skip={s['skip']}")
    if report.anomalies:
        lines.append("anomalies:")
        for v in report.anomalies:
            alpha = "" if v.alpha is None else f" alpha={v.alpha}"
            lines.append(
                f"  {v.case} p={v.p}{alpha} status={v.status} "
                f"m={v.m} valuation={v.valuation}"
            )
    else:
        lines.append("anomalies: none")
    return ("\n".join(lines) + "\n").encode()


def report_from_json(data: bytes) -> ScanReport:
    """Re-parse an emitted JSON report; inverse of emit_report(..., "json")."""
    payload = json.loads(data.decode())
    return ScanReport(
        config=payload["config"],
        records=[_record_from_dict(d) for d in payload["records"]],
        summary=payload["summary"],
        anomalies=[_record_from_dict(d) for d in payload["anomalies"]],
    )
