"""Empirical residue-period scans for congruential Euler number sequences.

For a prime p, a factor m with m | p-1 or m = 2, and 0 <= j < mp, the
sequence E_{mpn}^{(mp,j)} reduced mod p^r is expected to be eventually
periodic with period dividing q*p^r (q = lcm(2, p-1), period measured in
absolute subscript units).  The scanner computes exact values, checks
p-integrality, detects the minimal eventual period of the residue
sequence, and reproduces the published numerical tables.
"""

from __future__ import annotations

import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import lcm
from typing import Iterable, Optional

from .engine import SeqParams, compute_table
from .exact import is_prime

__all__ = [
    "PeriodDetection",
    "detect_eventual_period",
    "PeriodScanResult",
    "scan_conjecture",
    "emit_table",
    "ReferenceRow",
    "REFERENCE_ROWS",
    "run_reference_scan",
]


@dataclass(frozen=True)
class PeriodDetection:
    """Outcome of a period search: found / no_period / inconclusive."""

    status: str
    n0: Optional[int] = None
    period: Optional[int] = None


def detect_eventual_period(seq: list[int], max_period: int) -> PeriodDetection:
    """Least (period, n0), lexicographically, of an eventually periodic list.

    A candidate (n0, period) is accepted when seq[n] == seq[n + period]
    for every n0 <= n <= len(seq) - period - 1 with n0 minimal, and the
    tail seq[n0:] covers at least two full periods.  A window shorter
    than 3 * max_period is inconclusive, which is distinct from "no
    period up to max_period fits".
    """
    if max_period < 1:
        raise ValueError("detect_eventual_period: max_period must be positive")
    if len(seq) < 3 * max_period:
        return PeriodDetection("inconclusive")
    for period in range(1, max_period + 1):
        n0 = 0
        for n in range(len(seq) - period - 1, -1, -1):
            if seq[n] != seq[n + period]:
                n0 = n + 1
                break
        if len(seq) - n0 >= 2 * period:
            return PeriodDetection("found", n0, period)
    return PeriodDetection("no_period")


@dataclass
class PeriodScanResult:
    """One scanned parameter tuple (p, m, j, r) and its detected cycle.

    n0 is the preperiod in table-index units; period_index is the minimal
    observed period in absolute subscript units (a multiple of mp when a
    period is found); cycle lists the repeating residues starting at n0.
    """

    p: int
    m: int
    j: int
    r: int
    n_max: int
    status: str  # ok | integrality_failed | no_period | inconclusive
    n0: Optional[int] = None
    period_index: Optional[int] = None
    cycle: list[int] = field(default_factory=list)
    conjecture_period: int = 0
    divides_conjecture: Optional[bool] = None
    note: str = ""

    @property
    def mp(self) -> int:
        return self.m * self.p

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "j": self.j,
            "r": self.r,
            "n_max": self.n_max,
            "status": self.status,
            "n0": self.n0,
            "period_index": self.period_index,
            "cycle": self.cycle,
            "conjecture_period": self.conjecture_period,
            "divides_conjecture": self.divides_conjecture,
            "note": self.note,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def default_scan_window(p: int, m: int, r: int) -> int:
    """Table length guaranteeing the two-full-periods tail rule can fire."""
    q = lcm(2, p - 1)
    return max(3 * (q * p**r) // (m * p), 30)


def scan_conjecture(
    p: int, m: int, j: int, r: int, n_max: Optional[int] = None
) -> PeriodScanResult:
    """Scan residues of E_{mpn}^{(mp,j)} mod p^r for an eventual period.

    Values are computed exactly and their p-integrality is asserted first;
    a p in any denominator is itself reportable evidence and yields an
    ``integrality_failed`` result.  The detected period is converted to
    absolute subscript units and compared against the conjectured bound
    q*p^r.  Findings are empirical, never proofs.
    """
    if not is_prime(p):
        raise ValueError("scan_conjecture: p must be prime")
    if m < 1 or ((p - 1) % m != 0 and m != 2):
        raise ValueError("scan_conjecture: m must divide p-1 or equal 2")
    if p * m < 2:
        raise ValueError("scan_conjecture: need p*m >= 2")
    mp = m * p
    if not 0 <= j < mp:
        raise ValueError("scan_conjecture: need 0 <= j < m*p")
    if r < 1:
        raise ValueError("scan_conjecture: r must be positive")

    q = lcm(2, p - 1)
    conjecture_period = q * p**r
    max_period_table = conjecture_period // mp
    if n_max is None:
        n_max = default_scan_window(p, m, r)

    table = compute_table(SeqParams(mp, j), n_max)
    modulus = p**r
    residues: list[int] = []
    for n, value in enumerate(table.values):
        if value.denominator % p == 0:
            return PeriodScanResult(
                p, m, j, r, n_max, "integrality_failed",
                conjecture_period=conjecture_period,
                note=f"denominator of entry n={n} is divisible by {p}",
            )
        residues.append(
            (value.numerator % modulus)
            * pow(value.denominator % modulus, -1, modulus)
            % modulus
        )

    found = detect_eventual_period(residues, max_period_table)
    if found.status != "found":
        return PeriodScanResult(
            p, m, j, r, n_max, found.status, conjecture_period=conjecture_period
        )
    period_index = found.period * mp
    return PeriodScanResult(
        p, m, j, r, n_max, "ok",
        n0=found.n0,
        period_index=period_index,
        cycle=residues[found.n0 : found.n0 + found.period],
        conjecture_period=conjecture_period,
        divides_conjecture=conjecture_period % period_index == 0,
    )


def _sorted_results(results: Iterable[PeriodScanResult]) -> list[PeriodScanResult]:
    return sorted(results, key=lambda s: (s.p, s.mp, s.j, s.r))


def emit_table(results: Iterable[PeriodScanResult], format: str = "text") -> str:
    """Render scan results as text (published-table columns), TSV, or JSON lines."""
    rows = _sorted_results(results)
    if format == "json":
        return "\n".join(r.to_json() for r in rows)
    if format == "tsv":
        header = "p\tm\tj\tr\tn0\tperiod\tconjecture_period\tdivides_conjecture\tstatus\tcycle"
        lines = [header]
        for r in rows:
            cycle = ",".join(str(c) for c in r.cycle)
            lines.append(
                f"{r.p}\t{r.m}\t{r.j}\t{r.r}\t{_dash(r.n0)}\t{_dash(r.period_index)}\t"
                f"{r.conjecture_period}\t{_dash(r.divides_conjecture)}\t{r.status}\t{cycle}"
            )
        return "\n".join(lines)
    if format == "text":
        lines = ["Parameters\tp\tr\tn0\tperiod\tcycle"]
        for r in rows:
            cycle = "cycle=[" + ",".join(str(c) for c in r.cycle) + "]"
            line = (
                f"(mp,j)=({r.mp},{r.j})\t{r.p}\t{r.r}\t{_dash(r.n0)}\t"
                f"{_dash(r.period_index)}\t{cycle}"
            )
            if r.status != "ok":
                line += f"\t[{r.status}]"
            if r.note:
                line += f"\t# {r.note}"
            lines.append(line)
        return "\n".join(lines)
    raise ValueError(f"emit_table: unknown format {format!r}")


def _dash(value) -> str:
    return "-" if value is None else str(value)


@dataclass(frozen=True)
class ReferenceRow:
    """One row of the published residue-period table, for reproduction runs."""

    mp: int
    j: int
    p: int
    r: int
    published_n0: int
    published_period: int
    note: str = ""


# The published evidence table, in its printed order.  The final row was
# printed with r = 2 although 2058 = 6 * 7^3 is the conjectured period for
# r = 3; the preset scans both exponents and reports which one matches.
REFERENCE_ROWS: tuple[ReferenceRow, ...] = (
    ReferenceRow(6, 1, 3, 1, 1, 6),
    ReferenceRow(6, 1, 3, 2, 1, 18),
    ReferenceRow(6, 3, 3, 1, 1, 6),
    ReferenceRow(6, 3, 3, 2, 1, 18),
    ReferenceRow(6, 3, 3, 3, 2, 54),
    ReferenceRow(6, 3, 3, 4, 2, 162),
    ReferenceRow(6, 3, 3, 5, 3, 486),
    ReferenceRow(10, 4, 5, 1, 1, 20),
    ReferenceRow(10, 4, 5, 2, 1, 100),
    ReferenceRow(10, 7, 5, 3, 2, 500, note="printed among rows otherwise labeled (10,4)"),
    ReferenceRow(20, 13, 5, 1, 0, 20),
    ReferenceRow(20, 13, 5, 2, 1, 100),
    ReferenceRow(20, 13, 5, 3, 2, 500),
    ReferenceRow(21, 8, 7, 1, 1, 42),
    ReferenceRow(21, 8, 7, 2, 1, 294),
    ReferenceRow(21, 16, 7, 1, 0, 21),
    ReferenceRow(21, 16, 7, 2, 1, 294),
    ReferenceRow(42, 9, 7, 1, 1, 21),
    ReferenceRow(42, 9, 7, 2, 1, 294),
    ReferenceRow(42, 9, 7, 2, 1, 2058, note="printed r=2; 2058 = 6*7^3 suggests r=3"),
)


@dataclass
class ReferenceOutcome:
    """A published row next to what the scanner actually observes."""

    row: ReferenceRow
    result: PeriodScanResult
    matches: bool
    companions: list[PeriodScanResult] = field(default_factory=list)

    def annotation(self) -> str:
        parts = []
        if self.row.note:
            parts.append(self.row.note)
        if self.matches:
            parts.append("reproduced")
        else:
            parts.append(
                f"published (n0={self.row.published_n0}, period={self.row.published_period}) "
                f"vs computed (n0={self.result.n0}, period={self.result.period_index})"
            )
        for extra in self.companions:
            parts.append(
                f"companion scan (mp,j)=({extra.mp},{extra.j}) r={extra.r}: "
                f"n0={extra.n0} period={extra.period_index}"
            )
        return "; ".join(parts)


def _reference_outcome(row: ReferenceRow) -> ReferenceOutcome:
    m = row.mp // row.p
    companions: list[PeriodScanResult] = []
    if row.published_period == 2058:
        # printed r=2 is ambiguous: scan both exponents, keep the match
        result_r2 = scan_conjecture(row.p, m, row.j, 2)
        result_r3 = scan_conjecture(row.p, m, row.j, 3)
        if (result_r3.n0, result_r3.period_index) == (row.published_n0, row.published_period):
            result, other = result_r3, result_r2
        else:
            result, other = result_r2, result_r3
        companions.append(other)
        matches = (result.n0, result.period_index) == (row.published_n0, row.published_period)
        outcome = ReferenceOutcome(row, result, matches, companions)
        result.note = outcome.annotation() + f"; matched by r={result.r} scan"
        return outcome
    result = scan_conjecture(row.p, m, row.j, row.r)
    if (row.mp, row.j, row.r) == (10, 7, 3):
        companions.append(scan_conjecture(row.p, 2, 4, 3))
    matches = (result.n0, result.period_index) == (row.published_n0, row.published_period)
    outcome = ReferenceOutcome(row, result, matches, companions)
    result.note = outcome.annotation()
    return outcome


def run_reference_scan(jobs: int = 1, progress: bool = False) -> list[ReferenceOutcome]:
    """Scan every published row (plus the disambiguation companions).

    Returns outcomes in the printed row order regardless of the level of
    parallelism; progress goes to stderr only.
    """
    rows = REFERENCE_ROWS

    def work(row: ReferenceRow) -> ReferenceOutcome:
        if progress:
            print(
                f"scanning (mp,j)=({row.mp},{row.j}) p={row.p} r={row.r} ...",
                file=sys.stderr,
                flush=True,
            )
        return _reference_outcome(row)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(work, rows))
    return [work(row) for row in rows]
