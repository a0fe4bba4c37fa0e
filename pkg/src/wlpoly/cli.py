"""Command line: ``wlpoly compute | verify | table | bench``.

Exit codes: 0 success, 2 bad input, 3 internal consistency failure,
4 a verification report failed.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .identities import IDENTITIES, run_identity
from .partitions import (
    MalformedPartition,
    Partition,
    degree_vector,
    f_count,
    parse_partition,
    partitions_of,
    partitions_up_to,
)
from .polyalg import InexactDivision, MPoly, serialize, to_json_obj
from .recurrence import thm1_table, whp_recurrence, wlp_alt, wlp_thm1
from .sequences import SingularParameter
from .wronskian import (
    HERMITE,
    LAGUERRE,
    DegenerateLeadingCoefficient,
    NonMonicResult,
    WronskianRequest,
    jacobi,
    wronskian_classical_monic,
    wronskian_poly,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTERNAL = 3
EXIT_VERIFY = 4

FAMILIES = ("laguerre", "hermite", "classical-laguerre", "jacobi")
METHODS = ("recurrence", "recurrence-alt", "wronskian")


class UsageError(Exception):
    pass


def _rational(text: str | None, name: str) -> Fraction | None:
    if text is None or text == "symbolic":
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--{name} must be 'symbolic' or a rational number, got {text!r}") from None


def _thread_count(args) -> int:
    env = os.environ.get("WLPOLY_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"WLPOLY_THREADS must be an integer, got {env!r}") from None
    return max(1, args.threads or 1)


def make_evaluator(family: str, method: str, alpha: Fraction | None, beta: Fraction | None):
    """Return ``partition -> MPoly`` for a validated family/method/parameter choice."""
    if family == "laguerre":
        fn = {
            "recurrence": wlp_thm1,
            "recurrence-alt": wlp_alt,
            "wronskian": lambda lam: wronskian_poly(WronskianRequest(LAGUERRE, lam)),
        }[method]
        if alpha is None:
            return fn
        return lambda lam: fn(lam).substitute("alpha", alpha)
    if method == "recurrence-alt":
        raise UsageError("--method recurrence-alt is only available for the laguerre family")
    if family == "hermite":
        if method == "recurrence":
            return whp_recurrence
        return lambda lam: wronskian_poly(WronskianRequest(HERMITE, lam))
    if family == "classical-laguerre":
        if method != "wronskian":
            raise UsageError("classical-laguerre only supports --method wronskian")
        return lambda lam: wronskian_classical_monic(lam, alpha)
    if family == "jacobi":
        if alpha is None or beta is None:
            raise UsageError("jacobi needs rational --alpha and --beta")
        if method != "wronskian":
            raise UsageError("jacobi only supports --method wronskian")
        fam = jacobi(alpha, beta)
        return lambda lam: wronskian_poly(WronskianRequest(fam, lam))
    raise UsageError(f"unknown family {family!r}")


def _evaluator_from(args):
    method = args.method
    if method is None:
        method = "wronskian" if args.family in ("classical-laguerre", "jacobi") else "recurrence"
    return make_evaluator(
        args.family, method, _rational(args.alpha, "alpha"), _rational(getattr(args, "beta", None), "beta")
    )


def cmd_compute(args, out) -> int:
    lam = parse_partition(args.partition)
    evaluate = _evaluator_from(args)
    out.write(serialize(evaluate(lam), args.format) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.identity not in IDENTITIES:
        raise UsageError(f"unknown identity {args.identity!r}; choose from {', '.join(IDENTITIES)}")
    reports = run_identity(args.identity, args.max_size, threads=_thread_count(args))
    first_failure = None
    for rep in reports:
        out.write(rep.to_json() + "\n")
        if rep.failed and first_failure is None:
            first_failure = rep
    if first_failure is not None:
        sys.stderr.write(f"verification failed: {json.dumps(first_failure.witness)}\n")
        return EXIT_VERIFY
    return EXIT_OK


def _table_rows(args):
    evaluate = _evaluator_from(args)
    parts = partitions_up_to(args.max_size)
    with ThreadPoolExecutor(max_workers=_thread_count(args)) as pool:
        polys = list(pool.map(evaluate, parts))
    return [(lam, f_count(lam), degree_vector(lam), p) for lam, p in zip(parts, polys)]


def _latex_partition(lam: Partition) -> str:
    return "(" + ",".join(map(str, lam.parts)) + ")" if lam else r"\emptyset"


def cmd_table(args, out) -> int:
    rows = _table_rows(args)
    fmt = args.format
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["partition", "F", "degree_vector", "polynomial"])
        for lam, F, dv, p in rows:
            writer.writerow([lam.to_text(), F, ",".join(map(str, dv)), serialize(p, "human")])
        out.write(buf.getvalue())
    elif fmt == "json":
        payload = [
            {"partition": list(lam.parts), "F": F, "degree_vector": list(dv), "polynomial": to_json_obj(p)}
            for lam, F, dv, p in rows
        ]
        out.write(json.dumps(payload) + "\n")
    elif fmt == "latex":
        out.write("\\begin{tabular}{llll}\n\\hline\n")
        out.write("$\\lambda$ & $F_\\lambda$ & $n_\\lambda$ & polynomial \\\\\n\\hline\n")
        for lam, F, dv, p in rows:
            dv_text = "(" + ",".join(map(str, dv)) + ")"
            out.write(f"${_latex_partition(lam)}$ & {F} & ${dv_text}$ & ${serialize(p, 'latex')}$ \\\\\n")
        out.write("\\hline\n\\end{tabular}\n")
    else:
        for lam, F, dv, p in rows:
            out.write(f"{str(lam):<16} F={F:<6} n={str(tuple(dv)):<18} {serialize(p, 'human')}\n")
    return EXIT_OK


def _timed(fn, parts, threads):
    start = time.perf_counter()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            polys = list(pool.map(fn, parts))
    else:
        polys = [fn(p) for p in parts]
    ms = (time.perf_counter() - start) * 1000
    digest = hashlib.sha256("\n".join(serialize(p, "json") for p in polys).encode()).hexdigest()
    return ms, digest


def cmd_bench(args, out) -> int:
    from .wronskian import _wronskian_poly

    threads = _thread_count(args)
    methods = ["recurrence", "wronskian"] if args.method == "both" else [args.method]
    thm1_table.clear()
    _wronskian_poly.cache_clear()
    oracle = lambda lam: wronskian_poly(WronskianRequest(LAGUERRE, lam))  # noqa: E731
    for n in range(args.max_size + 1):
        parts = partitions_of(n)
        row = {"size": n, "partitions": len(parts), "threads": threads}
        for method in methods:
            fn = wlp_thm1 if method == "recurrence" else oracle
            ms, digest = _timed(fn, parts, threads)
            row[f"{method}_ms"] = round(ms, 3)
            row[f"{method}_digest"] = digest
        out.write(json.dumps(row) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wlpoly", description="Wronskian Laguerre/Hermite polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    def family_flags(p):
        p.add_argument("--family", choices=FAMILIES, default="laguerre")
        p.add_argument("--method", choices=METHODS, default=None)
        p.add_argument("--alpha", default="symbolic", help="'symbolic' or a rational such as 1/2")
        p.add_argument("--beta", default=None, help="rational beta, jacobi only")

    p = sub.add_parser("compute", help="print one Wronskian polynomial")
    p.add_argument("--partition", default="", help='comma-separated parts, e.g. "3,1"')
    family_flags(p)
    p.add_argument("--format", choices=("human", "json", "latex"), default="human")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run an identity check, JSON lines out")
    p.add_argument("--identity", required=True, help=", ".join(IDENTITIES))
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="one row per partition up to a size")
    p.add_argument("--max-size", type=int, default=4)
    family_flags(p)
    p.add_argument("--format", choices=("csv", "json", "latex", "human"), default="csv")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("bench", help="time recurrence against determinant evaluation")
    p.add_argument("--max-size", type=int, default=8)
    p.add_argument("--method", choices=("both", "recurrence", "wronskian"), default="both")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "max_size", 0) is not None and getattr(args, "max_size", 0) < 0:
        sys.stderr.write("--max-size must be non-negative\n")
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, MalformedPartition, SingularParameter) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (InexactDivision, NonMonicResult, DegenerateLeadingCoefficient) as exc:
        sys.stderr.write(f"internal consistency failure: {exc}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
