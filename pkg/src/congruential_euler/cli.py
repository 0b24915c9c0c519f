"""Command-line front end: compute tables, verify congruences, scan periods.

Exit codes: 0 when every requested check passes, 1 when a mathematical
check fails, 2 for usage or parameter errors.  Results go to stdout;
progress chatter goes to stderr only, so output can be piped.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import congruences
from .analytic import (
    BernoulliFormulaId,
    ZetaFormulaId,
    bernoulli,
    bernoulli_formula_value,
    check_special_values,
    eval_H,
    family_zeros,
    formula_reference,
    formula_value,
    locate_zero,
    ratio_radius,
)
from .engine import SeqParams, cache_load, cache_store, compute_table
from .scanner import emit_table, run_reference_scan, scan_conjecture

DEFAULT_CACHE_DIR = Path(os.environ.get("CEULER_CACHE_DIR", "~/.cache/congruential-euler"))

__all__ = ["main", "RunConfig"]


@dataclass
class RunConfig:
    cache_dir: Path
    output_format: str = "text"
    parallelism: int = 1
    default_n_max: int = 30

    def __post_init__(self) -> None:
        if self.parallelism < 1:
            raise ValueError("parallelism must be at least 1")
        self.cache_dir = Path(self.cache_dir).expanduser()

    @staticmethod
    def from_args(args: argparse.Namespace) -> "RunConfig":
        return RunConfig(
            cache_dir=Path(args.cache_dir),
            output_format=args.format,
            parallelism=args.jobs,
        )


def _parse_range(text: str) -> range:
    """Parse an inclusive 'a..b' range (a single integer means a..a)."""
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if hi < lo:
        raise ValueError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _parse_pairs(texts: list[str]) -> list[tuple[int, int]]:
    pairs = []
    for text in texts:
        a, b = text.split(",", 1)
        pairs.append((int(a), int(b)))
    return pairs


def _cache_path(config: RunConfig, params: SeqParams) -> Path:
    return config.cache_dir / f"euler_N{params.N}_j{params.j}.txt"


# --- compute -----------------------------------------------------------------


def _cmd_compute(args: argparse.Namespace, config: RunConfig) -> int:
    params = SeqParams(args.N, args.j)
    n_max = args.n_max if args.n_max is not None else config.default_n_max
    table = compute_table(params, n_max)
    if not args.no_cache:
        config.cache_dir.mkdir(parents=True, exist_ok=True)
        path = _cache_path(config, params)
        stored = table
        if path.exists():
            try:
                existing = cache_load(params, path)
                if existing.max_index > table.max_index:
                    stored = existing
            except ValueError:
                pass
        cache_store(stored, path)
    for n, value in enumerate(table.values):
        text = f"{value.numerator}/{value.denominator}"
        if config.output_format == "json":
            print(json.dumps({"n": n, "value": text}, sort_keys=True))
        elif config.output_format == "tsv":
            print(f"{n}\t{text}")
        else:
            print(f"{n} {text}")
    return 0


# --- verify --------------------------------------------------------------


def _emit_report(report: congruences.CongruenceReport, config: RunConfig) -> int:
    if config.output_format == "json":
        print(report.to_json())
    elif config.output_format == "tsv":
        print(
            f"{report.theorem_id}\t{report.param_summary}\t{report.instances_checked}\t"
            f"{report.status}\t{json.dumps(report.failures, sort_keys=True)}"
        )
    else:
        print(report.render_text())
    return 0 if report.passed else 1


def _cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    theorem = args.theorem
    if theorem == "main":
        report = congruences.check_main_theorem(args.p, args.j, args.r, _parse_range(args.n))
    elif theorem == "komatsu-liu":
        report = congruences.check_komatsu_liu(args.k, _parse_pairs(args.pairs))
    elif theorem == "gessel":
        report = congruences.check_gessel(args.p, args.m, args.k, _parse_range(args.n))
    elif theorem == "prime-power":
        report = congruences.check_prime_power(args.p, args.k, args.r, _parse_range(args.n))
    elif theorem == "special-40":
        report = congruences.check_special_40(args.r, _parse_range(args.n))
    elif theorem == "special-60":
        _, report = congruences.check_special_60(args.r, args.n_max)
    elif theorem == "lemma-xm":
        report = congruences.verify_lemma_Xm(args.p, args.m, args.order)
    else:  # lemma-series
        report = congruences.verify_lemma_series(args.n_max)
    return _emit_report(report, config)


# --- scan ----------------------------------------------------------------


def _cmd_scan(args: argparse.Namespace, config: RunConfig) -> int:
    if args.appendix_b:
        outcomes = run_reference_scan(jobs=config.parallelism, progress=True)
        results = [outcome.result for outcome in outcomes]
        print(emit_table(results, config.output_format))
        return 0 if all(o.matches for o in outcomes) else 1
    if args.grid is not None:
        spec = json.loads(Path(args.grid).read_text())
        tuples = [(row["p"], row["m"], row["j"], row["r"], row.get("n_max")) for row in spec]
        if config.parallelism > 1:
            with ThreadPoolExecutor(max_workers=config.parallelism) as pool:
                results = list(pool.map(lambda t: scan_conjecture(*t), tuples))
        else:
            results = [scan_conjecture(*t) for t in tuples]
        print(emit_table(results, config.output_format))
        return 0 if all(r.status == "ok" for r in results) else 1
    if args.p is None or args.m is None or args.j is None or args.r is None:
        raise ValueError("scan: provide --p --m --j --r, or --appendix-b, or --grid")
    result = scan_conjecture(args.p, args.m, args.j, args.r, args.n_max)
    print(emit_table([result], config.output_format))
    return 0 if result.status == "ok" else 1


# --- identities ------------------------------------------------------------


def _print_record(record: dict, config: RunConfig, text: str) -> None:
    if config.output_format == "json":
        print(json.dumps(record, sort_keys=True))
    elif config.output_format == "tsv":
        print("\t".join(str(record[key]) for key in sorted(record)))
    else:
        print(text)


def _cmd_identities(args: argparse.Namespace, config: RunConfig) -> int:
    target = args.target
    ok = True
    if target == "zeta":
        for formula in ZetaFormulaId:
            for n in range(1, args.n_max + 1):
                lhs = formula_reference(formula, n)
                rhs = formula_value(formula, n)
                equal = lhs == rhs
                ok &= equal
                record = {
                    "formula_id": formula.value,
                    "n": n,
                    "degree": lhs.degree,
                    "lhs_coefficient": str(lhs.coefficient),
                    "rhs_coefficient": str(rhs.coefficient),
                    "equal": equal,
                }
                _print_record(
                    record, config,
                    f"{formula.value} n={n}: pi^{lhs.degree} * {lhs.coefficient} "
                    f"{'==' if equal else '!='} {rhs.coefficient}",
                )
    elif target == "bernoulli":
        for formula in BernoulliFormulaId:
            min_n = 0 if formula.value in ("b4n_via_42", "b6n_via_63") else 1
            for n in range(min_n, args.n_max + 1):
                lhs = bernoulli(_bernoulli_index(formula, n))
                rhs = bernoulli_formula_value(formula, n)
                equal = lhs == rhs
                ok &= equal
                record = {
                    "formula_id": formula.value,
                    "n": n,
                    "lhs": str(lhs),
                    "rhs": str(rhs),
                    "equal": equal,
                }
                _print_record(
                    record, config,
                    f"{formula.value} n={n}: {lhs} {'==' if equal else '!='} {rhs}",
                )
    elif target == "zeros":
        N, j = args.family
        for k, l, predicted in family_zeros((N, j), args.count):
            located = locate_zero(N, j, predicted)
            residual = abs(eval_H(N, j, located))
            distance = abs(located - predicted)
            good = residual < 1e-10 and distance < 1e-9
            ok &= good
            record = {
                "family": f"{N},{j}",
                "k": k,
                "l": l,
                "zero": [located.real, located.imag],
                "residual": residual,
                "distance_to_closed_form": distance,
                "ok": good,
            }
            _print_record(
                record, config,
                f"H_({N},{j}) zero k={k} l={l}: {located:.12g} residual={residual:.2e} "
                f"off-lattice={distance:.2e}",
            )
    elif target == "special-values":
        for k in range(1, args.k_max + 1):
            for l in range(6):
                good = check_special_values(k, l)
                ok &= good
                record = {"k": k, "l": l, "ok": good}
                _print_record(record, config, f"special values k={k} l={l}: {good}")
    else:  # radius
        estimate = ratio_radius(SeqParams(args.N, args.j), args.n_max)
        record = {"N": args.N, "j": args.j, "n_max": args.n_max, "radius_over_pi": estimate}
        _print_record(record, config, f"radius/pi estimate for ({args.N},{args.j}): {estimate:.9f}")
    return 0 if ok else 1


def _bernoulli_index(formula: BernoulliFormulaId, n: int) -> int:
    return {
        BernoulliFormulaId.b4n_via_40: 4 * n,
        BernoulliFormulaId.b4n2_via_40: 4 * n - 2,
        BernoulliFormulaId.b4n_via_42: 4 * n,
        BernoulliFormulaId.b4n2_via_42: 4 * n - 2,
        BernoulliFormulaId.b6n_via_63: 6 * n,
        BernoulliFormulaId.b6n4_via_63: 6 * n - 4,
    }[formula]


# --- cache -----------------------------------------------------------------


def _cmd_cache(args: argparse.Namespace, config: RunConfig) -> int:
    config.cache_dir.mkdir(parents=True, exist_ok=True)
    files = sorted(config.cache_dir.glob("euler_N*_j*.txt"))
    if args.action == "inspect":
        for path in files:
            header = path.read_text().splitlines()[0] if path.stat().st_size else "(empty)"
            entries = max(0, len(path.read_text().splitlines()) - 1)
            record = {"file": path.name, "header": header, "entries": entries}
            if config.output_format == "json":
                print(json.dumps(record, sort_keys=True))
            else:
                print(f"{path.name}: {header} ({entries} entries)")
        return 0
    for path in files:  # clear
        path.unlink()
    print(f"removed {len(files)} cache file(s)", file=sys.stderr)
    return 0


# --- parser ------------------------------------------------------------------


def _family(text: str) -> tuple[int, int]:
    N, j = text.split(",", 1)
    return int(N), int(j)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ceuler",
        description="Exact congruential Euler number toolkit: tables, congruence "
        "verification, residue-period scans, and zeta identity checks.",
    )
    parser.add_argument("--format", choices=("text", "tsv", "json"), default="text")
    parser.add_argument("--cache-dir", default=str(DEFAULT_CACHE_DIR))
    parser.add_argument("--jobs", type=int, default=1, help="parallel parameter tuples")
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="print a table of E_{Nn}^{(N,j)}")
    p_compute.add_argument("--N", type=int, required=True)
    p_compute.add_argument("--j", type=int, required=True)
    p_compute.add_argument("--n-max", type=int, default=None)
    p_compute.add_argument("--no-cache", action="store_true")
    p_compute.set_defaults(handler=_cmd_compute)

    p_verify = sub.add_parser("verify", help="check one congruence family over a range")
    v_sub = p_verify.add_subparsers(dest="theorem", required=True)
    v_main = v_sub.add_parser("main")
    v_main.add_argument("--p", type=int, required=True)
    v_main.add_argument("--j", type=int, required=True)
    v_main.add_argument("--r", type=int, required=True)
    v_main.add_argument("--n", default="0..20")
    v_kl = v_sub.add_parser("komatsu-liu")
    v_kl.add_argument("--k", type=int, required=True)
    v_kl.add_argument("--pairs", nargs="+", required=True, metavar="N,M")
    v_gessel = v_sub.add_parser("gessel")
    v_gessel.add_argument("--p", type=int, required=True)
    v_gessel.add_argument("--m", type=int, required=True)
    v_gessel.add_argument("--k", type=int, required=True)
    v_gessel.add_argument("--n", default="0..10")
    v_pp = v_sub.add_parser("prime-power")
    v_pp.add_argument("--p", type=int, required=True)
    v_pp.add_argument("--k", type=int, required=True)
    v_pp.add_argument("--r", type=int, required=True)
    v_pp.add_argument("--n", default="0..10")
    v_s40 = v_sub.add_parser("special-40")
    v_s40.add_argument("--r", type=int, required=True)
    v_s40.add_argument("--n", default="0..10")
    v_s60 = v_sub.add_parser("special-60")
    v_s60.add_argument("--r", type=int, required=True)
    v_s60.add_argument("--n-max", type=int, default=30)
    v_xm = v_sub.add_parser("lemma-xm")
    v_xm.add_argument("--p", type=int, required=True)
    v_xm.add_argument("--m", type=int, required=True)
    v_xm.add_argument("--order", type=int, default=60)
    v_ls = v_sub.add_parser("lemma-series")
    v_ls.add_argument("--n-max", type=int, default=10)
    for v_parser in (v_main, v_kl, v_gessel, v_pp, v_s40, v_s60, v_xm, v_ls):
        v_parser.set_defaults(handler=_cmd_verify)

    p_scan = sub.add_parser("scan", help="empirical residue-period scan")
    p_scan.add_argument("--p", type=int)
    p_scan.add_argument("--m", type=int)
    p_scan.add_argument("--j", type=int)
    p_scan.add_argument("--r", type=int)
    p_scan.add_argument("--n-max", type=int, default=None)
    p_scan.add_argument(
        "--appendix-b", action="store_true",
        help="run the bundled preset reproducing the published period tables",
    )
    p_scan.add_argument("--grid", default=None, help="JSON file with a list of scans")
    p_scan.set_defaults(handler=_cmd_scan)

    p_ident = sub.add_parser("identities", help="zeta/Bernoulli identities and zero geometry")
    i_sub = p_ident.add_subparsers(dest="target", required=True)
    i_zeta = i_sub.add_parser("zeta")
    i_zeta.add_argument("--n-max", type=int, default=6)
    i_bern = i_sub.add_parser("bernoulli")
    i_bern.add_argument("--n-max", type=int, default=6)
    i_zeros = i_sub.add_parser("zeros")
    i_zeros.add_argument("--family", type=_family, required=True, metavar="N,J")
    i_zeros.add_argument("--count", type=int, default=3)
    i_special = i_sub.add_parser("special-values")
    i_special.add_argument("--k-max", type=int, default=2)
    i_radius = i_sub.add_parser("radius")
    i_radius.add_argument("--N", type=int, required=True)
    i_radius.add_argument("--j", type=int, required=True)
    i_radius.add_argument("--n-max", type=int, default=40)
    for i_parser in (i_zeta, i_bern, i_zeros, i_special, i_radius):
        i_parser.set_defaults(handler=_cmd_identities)

    p_cache = sub.add_parser("cache", help="inspect or clear the disk cache")
    p_cache.add_argument("action", choices=("inspect", "clear"))
    p_cache.set_defaults(handler=_cmd_cache)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig.from_args(args)
        return args.handler(args, config)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
