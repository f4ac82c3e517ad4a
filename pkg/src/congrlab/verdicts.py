"""The verdict record shared by the congruence catalog and the lemma suites."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .residues import PrimePowerModulus, Residue, Valuation, valuation_of_difference

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


@dataclass(frozen=True)
class Verdict:
    """Outcome of checking one congruence instance.

    For pass/fail verdicts `lhs` and `rhs` are the canonical residues of the
    two sides modulo p^m and `valuation` measures p^v | (lhs - rhs) at the
    evaluation modulus (which is p^(m+1) when tightness reporting is on).
    Skip verdicts carry only the reason.
    """

    case: str
    p: int
    alpha: Optional[Fraction]
    m: Optional[int]
    lhs: Optional[int]
    rhs: Optional[int]
    status: str
    valuation: Optional[Valuation] = None
    reason: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    @property
    def skipped(self) -> bool:
        return self.status == SKIP

    def sort_key(self):
        if self.alpha is None:
            return (self.case, self.p, 0, Fraction(0))
        return (self.case, self.p, 1, self.alpha)


def skip(case: str, p: int, alpha: Optional[Fraction], reason: str) -> Verdict:
    return Verdict(case, p, alpha, None, None, None, SKIP, None, reason)


def judged(
    case: str,
    p: int,
    alpha: Optional[Fraction],
    m: int,
    lhs: int,
    rhs: int,
    valuation: Valuation,
    reason: str = "",
) -> Verdict:
    """Build a pass/fail verdict; pass means the sides agree modulo p^m."""
    ok = valuation.value >= m
    return Verdict(
        case, p, alpha, m, lhs, rhs, PASS if ok else FAIL, valuation, reason
    )


def judge(
    case: str,
    p: int,
    alpha: Optional[Fraction],
    m: int,
    lhs: int,
    rhs: int,
    eval_modulus: PrimePowerModulus,
    reason: str = "",
) -> Verdict:
    """Judge two working residues against the target modulus p^m.

    lhs and rhs live in `eval_modulus` (exponent >= m); the verdict records
    them reduced modulo p^m and the valuation of their difference as seen at
    the evaluation exponent.
    """
    val = valuation_of_difference(
        Residue(lhs, eval_modulus), Residue(rhs, eval_modulus)
    )
    pm = p**m
    return judged(case, p, alpha, m, lhs % pm, rhs % pm, val, reason)
