"""Command-line front end: ``invseq count|classify|verify|series|oeis-check|bijection``.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 resource guard.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from datetime import datetime, timezone
from fractions import Fraction

from . import __version__
from . import bijections as bij
from . import kernels, limits
from .core import RelationPattern, TriplePattern, format_sequence, parse_sequence
from .enumeration import (
    LEVELS,
    classify,
    count_avoiders_triple_upto,
    count_avoiders_upto,
    theorem_partition,
)
from .errors import PreconditionError, ResourceLimitError
from .references import REFERENCES, reference
from .series import CATALOG, BivariateSeries, DEFAULT_ORDER, gf_catalog

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

EPILOG = (
    f"environment: {limits.ENV_OVERRIDE}=N overrides every resource guard. UNSAFE: "
    "exhaustive routines grow like n!, so raising it can exhaust time and memory. "
    "INVSEQ_PURE_PYTHON=1 forces the pure-Python kernels."
)


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ helpers


def parse_range(text: str) -> range:
    """``"1..9"`` or ``"5"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; use N or A..B") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"bad range {text!r}")
    return range(lo, hi + 1)


def parse_pattern(text: str):
    """A pair of relations is a consecutive pattern; a triple is a classical one."""
    tokens = [t for t in text.replace("(", "").replace(")", "").split(",") if t.strip()]
    try:
        if len(tokens) == 2:
            return RelationPattern.parse(text.strip("() "))
        if len(tokens) == 3:
            return TriplePattern.parse(text.strip("() "))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"expected 2 or 3 comma-separated relations, got {text!r}")


def _stamp(payload: dict, args) -> dict:
    out = {"tool": "invseq", "version": __version__, "backend": kernels.BACKEND}
    if not args.reproducible:
        out["generated_at"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    out.update(payload)
    return out


def _emit_json(payload: dict, args) -> None:
    print(json.dumps(_stamp(payload, args), indent=2, sort_keys=False))


def _markdown(header: list[str], rows: list[list]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return "\n".join(lines)


def _counts_upto(p, n: int):
    if isinstance(p, TriplePattern):
        return count_avoiders_triple_upto(p, n)
    return count_avoiders_upto(p, n)


# ----------------------------------------------------------------- commands


def cmd_count(args) -> int:
    p = parse_pattern(args.pattern)
    ns = parse_range(args.n)
    rows = _counts_upto(p, ns[-1])
    rows = [rows[n] for n in ns]
    if args.format == "json":
        _emit_json({"command": "count", "pattern": str(p), "rows": [r.to_json() for r in rows]}, args)
        return EXIT_OK
    header = ["n", "count"]
    if args.by:
        header.append(f"by_{args.by}")
    table = []
    for r in rows:
        line = [r.n, r.total]
        if args.by:
            m = r.by_last_entry if args.by == "last" else r.by_dist
            line.append(" ".join(f"{k}:{v}" for k, v in sorted(m.items())))
        table.append(line)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(table)
        sys.stdout.write(buf.getvalue())
    elif args.format == "list":
        print(",".join(str(r.total) for r in rows))
    else:
        print(f"avoiders of ({p})")
        print(_markdown(header, table))
    return EXIT_OK


def cmd_classify(args) -> int:
    levels = LEVELS if args.level == "all" else (args.level,)
    results = []
    status = EXIT_OK
    for level in levels:
        report = classify(level, args.nmax)
        expected = theorem_partition(level)
        got = report.as_sets()
        equal = got == expected
        # less data can merge classes but never separate patterns the theorem groups together
        consistent = all(any(c <= g for g in got) for c in expected)
        ok = equal if args.nmax >= 10 else consistent
        if not ok:
            status = EXIT_MISMATCH
        results.append((report, equal, consistent, ok))
    if args.format == "json":
        payload = {
            "command": "classify",
            "nmax": args.nmax,
            "results": [
                {**rep.to_json(), "matches_theorem": eq, "consistent_with_theorem": cons, "passed": ok}
                for rep, eq, cons, ok in results
            ],
        }
        _emit_json(payload, args)
    else:
        for rep, eq, cons, ok in results:
            print(f"{rep.level}: {len(rep.classes)} classes at n_max={rep.n_max}")
            for c in rep.classes:
                if len(c) > 1 or args.verbose:
                    print("  " + "  ~  ".join(f"({p})" for p in c))
            verdict = "matches the theorem" if eq else ("consistent with the theorem" if cons else "DEVIATES from the theorem")
            print(f"  {'PASS' if ok else 'FAIL'}: {verdict}")
    return status


def cmd_verify(args) -> int:
    from .verify import run_suite

    try:
        reports = run_suite(args.suite)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    ok = all(r.passed for r in reports)
    if args.format == "json":
        _emit_json(
            {
                "command": "verify",
                "suite": args.suite,
                "passed": ok,
                "suites": [r.to_json(timings=not args.reproducible) for r in reports],
            },
            args,
        )
    else:
        for r in reports:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.suite}: {len(r.checks) - len(r.failures())}/{len(r.checks)} checks")
            for c in r.checks:
                if args.verbose or not c.passed:
                    print(f"  {'ok  ' if c.passed else 'FAIL'} {c.name}")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_series(args) -> int:
    if args.name not in CATALOG:
        raise UsageError(f"unknown series {args.name!r}; known: {', '.join(CATALOG)}")
    s = gf_catalog(args.name, args.order)
    if args.t is not None:
        if not isinstance(s, BivariateSeries):
            raise UsageError(f"{args.name} has no variable t")
        try:
            t = Fraction(args.t)
        except ValueError:
            raise UsageError(f"bad rational {args.t!r}") from None
        s = s.at(t)
    if args.format == "json":
        _emit_json(
            {
                "command": "series",
                "name": args.name,
                "kind": CATALOG[args.name][0],
                "order": args.order,
                "t": args.t,
                "coefficients": s.to_json(),
            },
            args,
        )
    else:
        print(s)
    return EXIT_OK


def cmd_oeis_check(args) -> int:
    if args.all or not args.id:
        refs = [REFERENCES[k] for k in sorted(REFERENCES)]
    else:
        try:
            refs = [reference(i) for i in args.id]
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    results = []
    for ref in refs:
        p = parse_pattern(ref.link)
        ns = ref.n_range
        rows = _counts_upto(p, ns[-1])
        computed = [rows[n].total for n in ns]
        results.append((ref, computed, computed == list(ref.terms)))
    ok = all(m for _, _, m in results)
    if args.format == "json":
        _emit_json(
            {
                "command": "oeis-check",
                "passed": ok,
                "results": [
                    {
                        "oeis_id": ref.oeis_id,
                        "pattern": ref.link,
                        "offset": ref.offset,
                        "expected": [str(v) for v in ref.terms],
                        "computed": [str(v) for v in comp],
                        "match": m,
                    }
                    for ref, comp, m in results
                ],
            },
            args,
        )
    else:
        for ref, comp, m in results:
            state = "match" if m else "MISMATCH"
            print(f"{ref.oeis_id} ({ref.link}): {state} for {len(ref.terms)} terms")
            if not m:
                print(f"  expected {list(ref.terms)}")
                print(f"  computed {comp}")
    return EXIT_OK if ok else EXIT_MISMATCH


# --------------------------------------------------------------- bijections


def _fmt_set(A) -> str:
    return "{" + ",".join(str(a) for a in sorted(A, reverse=True)) + "}"


def _fmt_tuple(x) -> str:
    return "(" + ",".join(str(a) for a in x) + ")"


def _parse_set(text: str) -> frozenset[int]:
    text = text.strip().strip("{}")
    return frozenset(int(v) for v in text.replace(",", " ").split())


def _parse_tuple(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()")
    return tuple(int(v) for v in text.replace(",", " ").split())


seq = (parse_sequence, format_sequence)
perm = (bij.Permutation.parse, str)

# name -> (forward, inverse, (input parser, output formatter) for forward direction)
BIJECTIONS = {
    "theta": (bij.theta, bij.theta_inverse, perm, seq),
    "phi_last_preserving": (bij.phi_last_preserving, bij.phi_last_preserving_inverse, seq, seq),
    "upsilon": (bij.upsilon, bij.upsilon_inverse, seq, perm),
    "gamma": (bij.gamma, bij.gamma_inverse, seq, (_parse_set, _fmt_set)),
    "to_composition": (bij.to_composition, bij.from_composition, seq, (_parse_tuple, _fmt_tuple)),
    "to_dyck_path": (bij.to_dyck_path, bij.from_dyck_path, seq, (str, str)),
    "varphi": (bij.varphi, bij.varphi_inverse, seq, (str, str)),
    "varphi_prime": (bij.varphi_prime, bij.varphi_prime_inverse, seq, (str, str)),
    "varphi_multi": (bij.varphi_multi, bij.varphi_multi_inverse, seq, (str, str)),
    "varphi_multi_prime": (bij.varphi_multi_prime, bij.varphi_multi_prime_inverse, seq, (str, str)),
    "swap_occurrences": (bij.swap_occurrences, bij.swap_occurrences_inverse, seq, seq),
    "path_dist": (bij.path_dist, None, (str, str), (int, str)),
}


def _composite():
    from .permutations import composite_1243_to_4213, composite_1243_to_4213_inverse

    return (composite_1243_to_4213, composite_1243_to_4213_inverse, perm, perm)


def cmd_bijection(args) -> int:
    if args.name == "composite_1243_to_4213":
        forward, inverse, src, dst = _composite()
    elif args.name in BIJECTIONS:
        forward, inverse, src, dst = BIJECTIONS[args.name]
    else:
        raise UsageError(f"unknown map {args.name!r}")
    fn = forward
    parse_in, fmt_out = src[0], dst[1]
    if args.inverse:
        if inverse is None:
            raise UsageError(f"{args.name} has no inverse")
        fn, parse_in, fmt_out = inverse, dst[0], src[1]
    extra = {}
    if args.name == "swap_occurrences":
        if args.variant is None or args.set is None:
            raise UsageError("swap_occurrences needs --variant and --set")
        extra = {"S": _parse_set(args.set), "variant": args.variant}
    if args.name == "gamma" and args.inverse:
        if args.length is None:
            raise UsageError("the inverse of gamma needs --length")
        extra = {"n": args.length}
    pairs = []
    for text in args.inputs:
        try:
            x = parse_in(text)
        except ValueError as exc:
            raise UsageError(f"cannot parse {text!r}: {exc}") from None
        pairs.append({"input": text, "output": fmt_out(fn(x, **extra))})
    _emit_json({"command": "bijection", "map": args.name, "inverse": args.inverse, "pairs": pairs}, args)
    return EXIT_OK


# ------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--reproducible", action="store_true",
        help="omit the timestamp (and timings) so identical runs give identical JSON",
    )
    common.add_argument("-v", "--verbose", action="store_true", help="print every check or class")

    parser = argparse.ArgumentParser(
        prog="invseq",
        description="Pattern avoidance in inversion sequences: counts, classification, bijections, series.",
        epilog=EPILOG,
    )
    parser.add_argument("--version", action="version", version=f"invseq {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("count", parents=[common], epilog=EPILOG, help="count avoiders of a pattern")
    p.add_argument("pattern", help="'R1,R2' (consecutive) or 'R1,R2,R3' (classical); relations <= >= < > = != -")
    p.add_argument("--n", default="1..9", help="length or range A..B (default 1..9)")
    p.add_argument("--by", choices=["last", "dist"], help="also show the refinement by last entry or dist")
    p.add_argument("--format", choices=["table", "csv", "json", "list"], default="table")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("classify", parents=[common], epilog=EPILOG, help="partition the 36 patterns")
    p.add_argument("--level", choices=list(LEVELS) + ["all"], default="all")
    p.add_argument("--nmax", type=int, default=10, help="largest length compared (default 10)")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[common], epilog=EPILOG, help="run a verification suite")
    p.add_argument(
        "suite",
        choices=["bijections", "series", "recurrences", "dictionary", "dist-symmetry", "table1", "table2", "all"],
    )
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", parents=[common], epilog=EPILOG, help="expand a catalog generating function")
    p.add_argument("name", help=", ".join(CATALOG))
    p.add_argument("--order", type=int, default=DEFAULT_ORDER, help=f"truncation order (default {DEFAULT_ORDER})")
    p.add_argument("--t", help="specialize t to a rational value, e.g. 1 or 1/2")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("oeis-check", parents=[common], epilog=EPILOG, help="compare with embedded OEIS terms")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--id", action="append", help="OEIS id such as A071356 (repeatable)")
    g.add_argument("--all", action="store_true", help="check every embedded sequence (default)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_oeis_check)

    p = sub.add_parser("bijection", parents=[common], epilog=EPILOG, help="apply a bijection, print JSON pairs")
    p.add_argument("name", choices=sorted(list(BIJECTIONS) + ["composite_1243_to_4213"]))
    p.add_argument("inputs", nargs="+", help="sequences like 0110, permutations like 42513, paths like ENEN*EN")
    p.add_argument("--inverse", action="store_true", help="apply the inverse map")
    p.add_argument("--variant", choices=sorted(bij.SWAP_VARIANTS), help="swap_occurrences variant")
    p.add_argument("--set", help="position set for swap_occurrences, e.g. '{2,3}'")
    p.add_argument("--length", type=int, help="sequence length for the inverse of gamma")
    p.set_defaults(func=cmd_bijection)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"invseq: resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (UsageError, PreconditionError, ValueError, KeyError) as exc:
        msg = exc.args[0] if exc.args else exc
        print(f"invseq: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
