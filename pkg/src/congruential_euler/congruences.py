"""Mechanical verification of the proved congruence families.

Each check sweeps a finite parameter window, compares exact values, and
returns a :class:`CongruenceReport` holding at most the first few failing
witnesses.  Subscripts in the statements below are absolute EGF indices;
they are converted to table indices by dividing by the sequence step, and
the divisibility of that conversion is what rules out off-by-step bugs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .engine import SeqParams, compute_table, euler_number
from .exact import (
    EgfSeries,
    exp_section,
    is_prime,
    residue_mod_prime_power,
    series_derivative,
    series_invert,
    series_multiply,
    vp,
)

__all__ = [
    "THEOREM_IDS",
    "DeltaExponent",
    "CongruenceReport",
    "check_main_theorem",
    "check_komatsu_liu",
    "check_gessel",
    "check_prime_power",
    "check_special_40",
    "check_special_60",
    "verify_lemma_Xm",
    "verify_lemma_series",
]

THEOREM_IDS = (
    "main_theorem",
    "komatsu_liu",
    "gessel",
    "prime_power",
    "special_40",
    "special_60",
    "lemma_Xm",
    "lemma_series",
)

MAX_WITNESSES = 5


@dataclass(frozen=True)
class DeltaExponent:
    """Extra congruence strength delta(j): 1 exactly when j = 0."""

    j: int

    @property
    def delta(self) -> int:
        return 1 if self.j == 0 else 0


@dataclass
class CongruenceReport:
    """Pass/fail record for one theorem instance sweep."""

    theorem_id: str
    param_summary: str
    instances_checked: int
    failures: list[dict] = field(default_factory=list)
    status: str = "pass"

    def __post_init__(self) -> None:
        if self.theorem_id not in THEOREM_IDS:
            raise ValueError(f"unknown theorem id {self.theorem_id!r}")
        if self.instances_checked < 1:
            raise ValueError("a report must cover at least one instance")
        if self.status == "pass" and self.failures:
            raise ValueError("passing report cannot carry failures")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "params": self.param_summary,
            "instances_checked": self.instances_checked,
            "status": self.status,
            "failures": self.failures,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def render_text(self) -> str:
        lines = [
            f"{self.theorem_id} [{self.param_summary}]: {self.status.upper()} "
            f"({self.instances_checked} instances)"
        ]
        for witness in self.failures:
            lines.append(f"  witness {witness}")
        return "\n".join(lines)


def _finish(
    theorem_id: str, summary: str, checked: int, failures: list[dict], status: Optional[str] = None
) -> CongruenceReport:
    if status is None:
        status = "pass" if not failures else "fail"
    return CongruenceReport(theorem_id, summary, checked, failures[:MAX_WITNESSES], status)


def check_main_theorem(p: int, j: int, r: int, n_range: Iterable[int]) -> CongruenceReport:
    """Check vp(E_{pn}^{(p,j)} + E_{pn+p^r}^{(p,j)}) >= r + delta(j).

    The congruential Euler numbers of a prime step p satisfy this sign
    anti-periodicity for every 0 <= j <= p-1; an exact zero sum counts as
    infinite valuation.
    """
    if not is_prime(p) or p == 2:
        raise ValueError("check_main_theorem: p must be an odd prime")
    if not 0 <= j <= p - 1:
        raise ValueError("check_main_theorem: need 0 <= j <= p-1")
    if r < 1:
        raise ValueError("check_main_theorem: r must be positive")
    params = SeqParams(p, j)
    required = r + DeltaExponent(j).delta
    shift = p ** (r - 1)  # subscript shift p^r is table shift p^(r-1)
    failures: list[dict] = []
    checked = 0
    for n in n_range:
        checked += 1
        total = euler_number(params, n) + euler_number(params, n + shift)
        if total == 0:
            continue
        seen = vp(total, p)
        if seen < required:
            failures.append(
                {"params": f"p={p} j={j} r={r} n={n}", "lhs": seen, "rhs": required}
            )
    return _finish("main_theorem", f"p={p} j={j} r={r}", checked, failures)


def check_komatsu_liu(k: int, n_pairs: Iterable[tuple[int, int]]) -> CongruenceReport:
    """Check W_{3n} == W_{3m} mod 3^{k+1} whenever 3n == 3m mod 2*3^k.

    {W_n} are the Lehmer numbers, i.e. the (3, 0) sequence.  A pair that
    violates the hypothesis is a usage error, not a congruence failure.
    """
    if k < 1:
        raise ValueError("check_komatsu_liu: k must be positive")
    params = SeqParams(3, 0)
    modulus = 3 ** (k + 1)
    hypothesis = 2 * 3**k
    failures: list[dict] = []
    checked = 0
    for n, m in n_pairs:
        if (3 * n - 3 * m) % hypothesis != 0:
            raise ValueError(
                f"check_komatsu_liu: hypothesis not satisfied: 3*{n} != 3*{m} mod {hypothesis}"
            )
        checked += 1
        lhs = int(euler_number(params, n)) % modulus
        rhs = int(euler_number(params, m)) % modulus
        if lhs != rhs:
            failures.append({"params": f"k={k} n={n} m={m}", "lhs": lhs, "rhs": rhs})
    if checked == 0:
        raise ValueError("check_komatsu_liu: no pairs supplied")
    return _finish("komatsu_liu", f"k={k}", checked, failures)


def check_gessel(p: int, m: int, k: int, n_range: Iterable[int]) -> CongruenceReport:
    """Check E_{p^k m n}^{(p^k m,0)} == E_{p^{k-1} m n}^{(p^{k-1} m,0)} mod p^{3k-eps}.

    eps is 1 for p in {2, 3} and 0 for larger primes; both sides are
    integers since j = 0.
    """
    if not is_prime(p):
        raise ValueError("check_gessel: p must be prime")
    if m < 1 or k < 1:
        raise ValueError("check_gessel: m and k must be positive")
    eps = 1 if p in (2, 3) else 0
    modulus = p ** (3 * k - eps)
    coarse = SeqParams(p**k * m, 0)
    fine = SeqParams(p ** (k - 1) * m, 0)
    failures: list[dict] = []
    checked = 0
    for n in n_range:
        checked += 1
        lhs = int(euler_number(coarse, n)) % modulus
        rhs = int(euler_number(fine, n)) % modulus
        if lhs != rhs:
            failures.append({"params": f"p={p} m={m} k={k} n={n}", "lhs": lhs, "rhs": rhs})
    return _finish("gessel", f"p={p} m={m} k={k}", checked, failures)


def check_prime_power(p: int, k: int, r: int, n_range: Iterable[int]) -> CongruenceReport:
    """Check vp(E_{p^k(n+p^{r-1})}^{(p^k,0)} + E_{p^k n}^{(p^k,0)}) >= r + 1.

    Valid for odd primes with 1 <= r <= 5 - eps (eps = 1 for p = 3); the
    range bound is where the underlying step-collapse congruence runs out.
    """
    if not is_prime(p) or p == 2:
        raise ValueError("check_prime_power: p must be an odd prime")
    if k < 1:
        raise ValueError("check_prime_power: k must be positive")
    eps = 1 if p == 3 else 0
    if not 1 <= r <= 5 - eps:
        raise ValueError(f"check_prime_power: need 1 <= r <= {5 - eps} for p={p}")
    params = SeqParams(p**k, 0)
    shift = p ** (r - 1)
    failures: list[dict] = []
    checked = 0
    for n in n_range:
        checked += 1
        total = euler_number(params, n + shift) + euler_number(params, n)
        if total == 0:
            continue
        seen = vp(total, p)
        if seen < r + 1:
            failures.append(
                {"params": f"p={p} k={k} r={r} n={n}", "lhs": seen, "rhs": r + 1}
            )
    return _finish("prime_power", f"p={p} k={k} r={r}", checked, failures)


def check_special_40(r: int, n_range: Iterable[int]) -> CongruenceReport:
    """Check E_{4n+2^{r+1}}^{(4,0)} == E_{4n}^{(4,0)} mod 2^r, valid from n = 0."""
    if r < 1:
        raise ValueError("check_special_40: r must be positive")
    params = SeqParams(4, 0)
    modulus = 2**r
    shift = 2 ** (r - 1)  # subscript shift 2^{r+1} over step 4
    failures: list[dict] = []
    checked = 0
    for n in n_range:
        checked += 1
        lhs = int(euler_number(params, n + shift)) % modulus
        rhs = int(euler_number(params, n)) % modulus
        if lhs != rhs:
            failures.append({"params": f"r={r} n={n}", "lhs": lhs, "rhs": rhs})
    return _finish("special_40", f"r={r}", checked, failures)


def check_special_60(r: int, n_max: int) -> tuple[Optional[int], CongruenceReport]:
    """Find the least n0 with E_{6n+2*3^r}^{(6,0)} == E_{6n}^{(6,0)} mod 3^r for n0 <= n <= n_max.

    The congruence only holds eventually; the scan reports the observed
    stabilization index.  If even the last window index fails the result
    is inconclusive rather than a failure.
    """
    if r < 1:
        raise ValueError("check_special_60: r must be positive")
    if n_max < 0:
        raise ValueError("check_special_60: n_max must be nonnegative")
    params = SeqParams(6, 0)
    modulus = 3**r
    shift = 3 ** (r - 1)  # subscript shift 2*3^r over step 6
    values = compute_table(params, n_max + shift).values
    n0 = 0
    for n in range(n_max, -1, -1):
        if (values[n + shift] - values[n]) % modulus != 0:
            n0 = n + 1
            break
    checked = n_max + 1
    if n0 > n_max:
        report = _finish(
            "special_60", f"r={r} n_max={n_max} (no stable tail)", checked, [], "inconclusive"
        )
        return None, report
    report = _finish("special_60", f"r={r} n_max={n_max} n0={n0}", checked, [])
    return n0, report


def _series_residue_failures(
    lhs: EgfSeries, rhs: EgfSeries, p: int, exponent: int, label: str, order: int
) -> tuple[int, list[dict]]:
    top = min(lhs.order, rhs.order, order)
    failures = []
    for n in range(top + 1):
        a = residue_mod_prime_power(lhs[n], p, exponent)
        b = residue_mod_prime_power(rhs[n], p, exponent)
        if a != b:
            failures.append({"params": f"{label} coeff n={n}", "lhs": a, "rhs": b})
    return top + 1, failures


def verify_lemma_Xm(p: int, m: int, order: int) -> CongruenceReport:
    """Coefficientwise congruences for X_m built from H = sum z^{2pn}/(2pn)!.

    With T = H^{(p)}/H and D_N defined by (1/H)^{(N)} = (-1)^N D_N / H:

    * p = 2: X_m = 1 - D_{2m} is congruent, mod 2^{v2(2m)}, to 1 + T for
      odd m and to 2^{v2(m)} (1 + T^2) for even m.
    * p = 3: X_m = (-1)^m (1 - D_{3m}) is congruent, mod 3^{v3(3m)}, to
      (1 - 3T)(T - 1)/(1 + 3T^2) for odd m and (1 + T)(T - 1)/(1 + 3T^2)
      for even m, the quotient expanded as a geometric series (T has no
      constant term, so 1 + 3T^2 is invertible with integer coefficients).

    D_N is obtained by N-fold differentiation of the inverted series, not
    from any closed determinant form.
    """
    if p not in (2, 3):
        raise ValueError("verify_lemma_Xm: p must be 2 or 3")
    if m < 1:
        raise ValueError("verify_lemma_Xm: m must be positive")
    if order < 10 * p:
        raise ValueError("verify_lemma_Xm: order too small to see 10 nonzero coefficients")
    step = 2 * p
    shift = p * m
    build_order = order + shift
    H = exp_section(step, 0, build_order)
    inv = series_invert(H)
    T = series_multiply(exp_section(step, p, build_order), inv)

    d_series = series_multiply(H, series_derivative(inv, shift))
    sign = (-1) ** shift
    if sign == -1:
        d_series = -d_series
    if p == 2:
        x_series = 1 - d_series
        if m % 2 == 1:
            rhs = 1 + T
        else:
            rhs = (2 ** _v_int(m, 2)) * (1 + series_multiply(T, T))
        exponent = 1 + _v_int(m, 2)
    else:
        x_series = 1 - d_series
        if m % 2 == 1:
            x_series = -x_series
        common = series_multiply(T - 1, series_invert(1 + 3 * series_multiply(T, T)))
        if m % 2 == 1:
            rhs = series_multiply(1 - 3 * T, common)
        else:
            rhs = series_multiply(1 + T, common)
        exponent = 1 + _v_int(m, 3)

    checked, failures = _series_residue_failures(
        x_series, rhs, p, exponent, f"p={p} m={m}", order
    )
    return _finish("lemma_Xm", f"p={p} m={m} order={order}", checked, failures)


def _v_int(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def verify_lemma_series(n_max: int) -> CongruenceReport:
    """Exact facts about H = sum z^{6n}/(6n)! and its cubic combination.

    (a) the coefficient of z^{6n}/(6n)! in (H''')^2 - H^2 is -1 at n = 0
        and -(-1)^n * 2 * 3^{3n-1} for n >= 1;
    (b) the coefficients c_n of H^3 + 3 H (H''')^2 (read off at indices 6n)
        satisfy c_0 = 1 and v3(c_n) = 3n - 1 for n >= 1;
    (c) the coefficients d_n of its inverse satisfy v3(d_n) >= 2n.
    """
    if n_max < 2:
        raise ValueError("verify_lemma_series: n_max must be at least 2")
    order = 6 * n_max
    H = exp_section(6, 0, order + 3)
    H3 = series_derivative(H, 3)
    diff = series_multiply(H3, H3) - series_multiply(H, H)

    failures: list[dict] = []
    checked = 0

    checked += 1
    if diff[0] != -1:
        failures.append({"params": "diff n=0", "lhs": str(diff[0]), "rhs": "-1"})
    for n in range(1, n_max + 1):
        checked += 1
        expected = -((-1) ** n) * 2 * 3 ** (3 * n - 1)
        if diff[6 * n] != expected:
            failures.append(
                {"params": f"diff n={n}", "lhs": str(diff[6 * n]), "rhs": str(expected)}
            )
    for i in range(diff.order + 1):
        if i % 6 != 0 and diff[i] != 0:
            failures.append({"params": f"diff support i={i}", "lhs": str(diff[i]), "rhs": "0"})

    cubic = series_multiply(series_multiply(H, H), H) + 3 * series_multiply(
        H, series_multiply(H3, H3)
    )
    checked += 1
    if cubic[0] != 1:
        failures.append({"params": "c n=0", "lhs": str(cubic[0]), "rhs": "1"})
    for n in range(1, n_max + 1):
        checked += 1
        c_n = cubic[6 * n]
        if c_n == 0 or vp(c_n, 3) != 3 * n - 1:
            seen = "inf" if c_n == 0 else vp(c_n, 3)
            failures.append({"params": f"v3(c_{n})", "lhs": str(seen), "rhs": str(3 * n - 1)})

    inverse = series_invert(cubic)
    for n in range(1, n_max + 1):
        checked += 1
        d_n = inverse[6 * n]
        if d_n != 0 and vp(d_n, 3) < 2 * n:
            failures.append(
                {"params": f"v3(d_{n})", "lhs": str(vp(d_n, 3)), "rhs": f">= {2 * n}"}
            )
    return _finish("lemma_series", f"n_max={n_max}", checked, failures)
