"""Verification suites that cross-check independent computations.

Each suite returns a :class:`SuiteReport` made of named :class:`Check`
results.  Nothing here raises on a mismatch; failures are reported.
"""
from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import bijections as bij
from . import kernels, recurrences as rec
from . import series as ser
from .core import (
    RelationPattern,
    TriplePattern,
    all_relation_patterns,
    dist,
    occurrence_set,
)
from .enumeration import (
    count_avoiders_triple_upto,
    count_avoiders_upto,
    enumerate_all,
    iter_avoiders,
    iter_avoiders_triple,
)
from .paths import marked_dyck_paths, slanted_paths, unmarked_tail_paths
from .permutations import (
    composite_1243_to_4213,
    composite_1243_to_4213_inverse,
    count_avoiders_classical,
    count_vincular_avoiders,
    involutions,
    permutations,
    vincular_avoiders,
)
from .references import TABLE1, TABLE2

__all__ = ["Check", "SuiteReport", "SUITES", "run_suite"]


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class SuiteReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, passed: bool, **detail) -> bool:
        self.checks.append(Check(name, bool(passed), {k: _jsonable(v) for k, v in detail.items()}))
        return bool(passed)

    def to_json(self, timings: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "passed": self.passed,
            "num_checks": len(self.checks),
            "num_failed": len(self.failures()),
            "checks": [c.to_json() for c in self.checks],
        }
        if timings:
            out["seconds"] = round(self.seconds, 3)
        return out


def _jsonable(v):
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, (int, Fraction)):
        return str(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


# ----------------------------------------------------------------- helpers


def _joint_from_kernel(t: TriplePattern, n: int) -> list[list[int]]:
    """``result[L][d]`` = number of avoiders of length ``L`` with ``d`` distinct entries."""
    rows = kernels.triple_counts(t.r1.mask, t.r2.mask, t.r3.mask, n)
    return [[row[2][d] if d < len(row[2]) else 0 for d in range(L + 1)] for L, row in enumerate(rows)]


def _compositions_12(n: int) -> set[tuple[int, ...]]:
    out = set()
    for k in range(n + 1):
        for parts in itertools.product((1, 2), repeat=k):
            if sum(parts) == n:
                out.add(parts)
    return out


def _dyck_paths(n: int) -> set[tuple[int, ...]]:
    return {p for p in marked_dyck_paths(n, max_arity=None) if all(s <= 1 for s in p)}


def _check_bijection(report, name, domain, forward, inverse, target, extra=None):
    """Round trip, injectivity and image equality on an explicit domain."""
    images = []
    round_trip = True
    extra_ok = True
    for x in domain:
        y = forward(x)
        images.append(y)
        if inverse(y) != x:
            round_trip = False
        if extra is not None and not extra(x, y):
            extra_ok = False
    image = set(images)
    ok = round_trip and extra_ok and len(image) == len(images) and image == set(target)
    return report.add(
        name,
        ok,
        domain=len(images),
        image=len(image),
        target=len(set(target)),
        round_trip=round_trip,
        extra=extra_ok,
    )


# ------------------------------------------------------------------ suites


def suite_table1(n_max: int = 9) -> SuiteReport:
    r = SuiteReport("table1")
    for row in TABLE1:
        expected = list(row.terms[:n_max])
        for text in (row.pattern,) + row.equivalent:
            p = RelationPattern.parse(text)
            got = [c.total for c in count_avoiders_upto(p, n_max)][1:]
            r.add(f"count ({text}) = {row.oeis_id}", got == expected, got=got, expected=expected)
        cf = [rec.closed_form(row.closed_form, n) for n in range(1, n_max + 1)]
        r.add(f"closed form {row.closed_form} = {row.oeis_id}", cf == expected, got=cf, expected=expected)
    return r


def suite_table2(n_max: int = 9, n_series: int = 12) -> SuiteReport:
    r = SuiteReport("table2")
    for row in TABLE2:
        t = TriplePattern.parse(row.triple)
        s = ser.gf_catalog(row.series, n_series)
        at1 = s.at(1).integers()[1:]
        cf = [rec.closed_form(row.closed_form, n) for n in range(1, n_series + 1)]
        r.add(f"{row.series} at t=1 = {row.counted_by}", at1 == cf, series=at1, closed_form=cf)
        joint = _joint_from_kernel(t, n_max)
        series_joint = ser.gf_catalog(row.series, n_max).joint()
        r.add(
            f"{row.series} joint (n, dist) = pruned search on ({row.triple})",
            joint == series_joint,
            n_max=n_max,
        )
    # the radical forms displayed for the two path families
    z = ser.TruncatedSeries.z(n_series + 1)
    radical = ((1 + z - (1 - 6 * z + 5 * z * z).sqrt()).div_z() / (2 * (2 - z))).truncate(n_series)
    got = ser.gf_catalog("I_gt_lt", n_series).at(1)
    r.add("I_gt_lt at t=1 = (1+z-sqrt(1-6z+5z^2))/(2z(2-z))", got == radical)
    return r


def suite_series(n_max: int = 10, n_thm: int = 11, n_perm: int = 8, order: int = 12) -> SuiteReport:
    r = SuiteReport("series")
    # OGFs against pruned search
    for name, text in ser.CATALOG_TRIPLES.items():
        t = TriplePattern.parse(text)
        if name == "thm_1_3":
            got = ser.gf_catalog(name, n_thm).integers()
            bf = [row[0] for row in kernels.triple_counts(t.r1.mask, t.r2.mask, t.r3.mask, n_thm)]
            r.add(f"{name} = |I_n({text})| for n <= {n_thm}", got == bf, series=got, search=bf)
        else:
            got = ser.gf_catalog(name, n_max).joint()
            bf = _joint_from_kernel(t, n_max)
            r.add(f"{name} joint (n, dist) = pruned search for n <= {n_max}", got == bf)
    cat = ser.gf_catalog("catalan", n_max).integers()
    bf = [1] + [c.total for c in count_avoiders_upto(RelationPattern.parse("<=,>"), n_max)][1:]
    r.add("catalan = |I_n(<=,>)|", cat == bf, series=cat, search=bf)
    for name, texts in (("egf_ne_ne", ("!=,!=",)), ("egf_lt_lt", ("<,<", ">=,>="))):
        got = ser.egf_to_counts(ser.gf_catalog(name, n_max))
        for text in texts:
            bf = [c.total for c in count_avoiders_upto(RelationPattern.parse(text), n_max)]
            r.add(f"{name} = |I_n({text})|", got == bf, series=got, search=bf)
    perms = [count_vincular_avoiders("(321)", n) for n in range(n_perm + 1)]
    got = ser.egf_to_counts(ser.gf_catalog("egf_lt_lt", n_perm))
    r.add("egf_lt_lt = |S_n((321))|", got == perms, series=got, permutations=perms)
    # the reciprocal series agrees numerically with the cosine closed form
    s = ser.gf_catalog("egf_lt_lt", 40)
    x = 0.3
    value = sum(float(c) * x**n for n, c in enumerate(s))
    r.add("egf_lt_lt matches the cosine closed form at z=0.3", abs(value - ser.egf_lt_lt_cos(x)) < 1e-12)

    # bivariate identities
    N = order
    B = ser.BivariateSeries
    z, tt = B.z(N), B.t(N)
    P = ser.P_zt(N)
    R = ser.gf_catalog("R_zt", N)
    inner = z * tt + z * z * tt + (z + z * z * tt) * (P - 1)
    r.add("P(z,t) solves its fixed-point equation", P == 1 / (1 - inner))
    r.add("R(z,t) = (1 - z(1-t)P)/(1 - zP) equals the radical form", ser.R_from_P(P) == R)
    r.add("R = 1 + ztP + zP(R-1)", R == 1 + z * tt * P + z * P * (R - 1))
    Pt = ser.P_tilde_zt(N)
    step = z + z * z * tt / (1 - z)
    r.add("P~(z,t) solves its fixed-point equation", Pt == 1 / (1 - (z * (tt - 1) + step * Pt)))
    r.add("R~(z,t) from P~ equals the I_gt_lt closed form", ser.R_tilde_zt(N) == ser.gf_catalog("I_gt_lt", N))

    # univariate cross-checks
    S = ser.TruncatedSeries
    zs = S.z(N)
    C = ser.gf_catalog("catalan", N)
    P1 = C.compose(zs + zs * zs)
    r.add("P(z,1) = C(z + z^2)", P.at(1) == P1)
    r.add("thm_1_3 = 1/(1 - z C(z + z^2))", ser.gf_catalog("thm_1_3", N) == 1 / (1 - zs * P1))
    thm = ser.gf_catalog("thm_1_3", 9).integers()
    slanted = [sum(1 for _ in slanted_paths(n - 1)) for n in range(1, 10)]
    r.add("thm_1_3 coefficient n = number of slanted paths to x = n-1", thm[1:] == slanted)
    gtlt = ser.gf_catalog("I_gt_lt", n_perm).at(1).integers()
    perms = [count_avoiders_classical(["2143", "3142", "4132"], n) for n in range(n_perm + 1)]
    r.add("I_gt_lt at t=1 = |S_n(2143, 3142, 4132)|", gtlt == perms, series=gtlt, permutations=perms)
    return r


def suite_dist_symmetry(n_series: int = 11, n_search: int = 10) -> SuiteReport:
    r = SuiteReport("dist-symmetry")
    R = ser.gf_catalog("R_zt", n_series)
    for n in range(1, n_series + 1):
        r.add(f"u_(d,{n}) = u_({n}+1-d,{n})", R[n].is_palindromic(1, n), coefficient=str(R[n]))
    joint = _joint_from_kernel(TriplePattern.parse(">,<=,-"), n_search)
    ok = all(joint[n][d] == joint[n][n + 1 - d] for n in range(1, n_search + 1) for d in range(1, n + 1))
    r.add(f"pruned-search dist distribution is palindromic for n <= {n_search}", ok)
    return r


def suite_recurrences(n_max: int = 9, n_cross: int = 10) -> SuiteReport:
    r = SuiteReport("recurrences")
    table = rec.rec_ne_ne(n_max + 1)
    bf = [c.total for c in count_avoiders_upto(RelationPattern.parse("!=,!="), n_max + 1)]
    r.add("rec_ne_ne = |I_n(!=,!=)|", list(table.terms) == bf, recurrence=table.terms, search=bf)
    inv = [sum(1 for _ in involutions(n)) for n in range(min(n_max, 9) + 1)]
    r.add("rec_ne_ne = number of involutions", list(table.terms[: len(inv)]) == inv)
    table = rec.rec_eq_eq(n_max)
    bf = [c.total for c in count_avoiders_upto(RelationPattern.parse("=,="), n_max)][1:]
    cf = [rec.closed_form("eq_eq", n) for n in range(1, n_max + 1)]
    r.add("rec_eq_eq = |I_n(=,=)| = ((n+1)! - d_{n+1})/n", list(table.terms) == bf == cf)
    divisible = all((math.factorial(n + 1) - rec.derangements(n + 1)) % n == 0 for n in range(1, 21))
    r.add("n divides (n+1)! - d_{n+1} for n <= 20", divisible)

    gt_ge = RelationPattern.parse(">,>=")
    ge_gt = RelationPattern.parse(">=,>")
    special = rec.rec_refined_gt_ge(n_cross)
    search = count_avoiders_upto(gt_ge, n_max)
    ok = all(
        list(special.by_last[n]) == [search[n].by_last_entry.get(k, 0) for k in range(n)]
        and list(special.by_last_r1[n]) == [search[n].by_last_entry_r1.get(k, 0) for k in range(n)]
        for n in range(1, n_max + 1)
    )
    r.add("rec_refined_gt_ge = pruned search by last entry", ok, totals=special.totals())
    r.add(
        "|I_{n,n-1}(>,>=)| = |I_{n-1}(>,>=)| and |I^>_{n,n-1}| = 0",
        all(
            special.entry(n, n - 1) == special.total(n - 1) and special.entry(n, n - 1, True) == 0
            for n in range(1, n_cross + 1)
        ),
    )
    other = rec.rec_refined_generic(ge_gt, n_cross)
    r.add(
        f"|I^>_(n,k)(>,>=)| = |I^>=_(n,k+1)(>=,>)| for n <= {n_cross}",
        all(
            special.entry(n, k, True) == other.entry(n, k + 1, True)
            for n in range(1, n_cross + 1)
            for k in range(n)
        ),
    )
    for p in all_relation_patterns():
        generic = rec.rec_refined_generic(p, n_max)
        search = count_avoiders_upto(p, n_max)
        ok = all(
            list(generic.by_last[n]) == [search[n].by_last_entry.get(k, 0) for k in range(n)]
            and list(generic.by_last_r1[n]) == [search[n].by_last_entry_r1.get(k, 0) for k in range(n)]
            for n in range(1, n_max + 1)
        )
        r.add(f"rec_refined_generic ({p}) = pruned search", ok)
    for row in TABLE1:
        bf = [c.total for c in count_avoiders_upto(RelationPattern.parse(row.pattern), n_max)][1:]
        cf = [rec.closed_form(row.closed_form, n) for n in range(1, n_max + 1)]
        r.add(f"closed form {row.closed_form} = pruned search", bf == cf)
    return r


def _block_occurrences(pi, outside_rank: int) -> frozenset[int]:
    """Positions ``i`` with ``pi_i < pi_{i+1} < pi_{i+2}`` and some earlier ``pi_j`` placed by ``outside_rank``.

    ``outside_rank = 1`` asks for ``pi_i < pi_j < pi_{i+1}`` (pattern 2(134)),
    ``outside_rank = 2`` for ``pi_{i+1} < pi_j < pi_{i+2}`` (pattern 3(124)).
    """
    out = set()
    for i in range(len(pi) - 2):
        a, b, c = pi[i], pi[i + 1], pi[i + 2]
        if not a < b < c:
            continue
        lo, hi = (a, b) if outside_rank == 1 else (b, c)
        if any(lo < pi[j] < hi for j in range(i)):
            out.add(i + 1)
    return frozenset(out)


def suite_dictionary(n_max: int = 8, n_count: int = 9) -> SuiteReport:
    r = SuiteReport("dictionary")
    gt_ge = RelationPattern.parse(">,>=")
    ge_gt = RelationPattern.parse(">=,>")
    for n in range(1, n_max + 1):
        weak = strict = occ = True
        for pi in permutations(n):
            e = bij.theta(pi)
            for i in range(n - 1):
                if (e[i] >= e[i + 1]) != (pi[i] < pi[i + 1]):
                    weak = False
                between = any(pi[i] < pi[j] < pi[i + 1] for j in range(i))
                if (e[i] > e[i + 1]) != between:
                    strict = False
            if occurrence_set(e, gt_ge) != _block_occurrences(pi, 1):
                occ = False
            if occurrence_set(e, ge_gt) != _block_occurrences(pi, 2):
                occ = False
        r.add(f"e_i >= e_(i+1) iff pi_i < pi_(i+1), n={n}", weak)
        r.add(f"e_i > e_(i+1) iff some earlier pi_j lies between, n={n}", strict)
        r.add(f"(>,>=) and (>=,>) occurrences match 2(134) and 3(124), n={n}", occ)
    expected = [c.total for c in count_avoiders_upto(gt_ge, n_count)][1:]
    expected2 = [c.total for c in count_avoiders_upto(ge_gt, n_count)][1:]
    r.add("|I_n(>,>=)| = |I_n(>=,>)|", expected == expected2, counts=expected)
    for v in ("(124)3", "2(134)", "(421)3", "3(124)"):
        got = [count_vincular_avoiders(v, n) for n in range(1, n_count + 1)]
        r.add(f"|S_n({v})| = |I_n(>,>=)|", got == expected, got=got)
    got = [count_vincular_avoiders("(321)", n) for n in range(1, n_count + 1)]
    bf = [c.total for c in count_avoiders_upto(RelationPattern.parse("<,<"), n_count)][1:]
    r.add("|S_n((321))| = |I_n(<,<)|", got == bf, got=got, search=bf)
    return r


def suite_bijections(n_max: int = 9, n_swap: int = 6, n_composite: int = 8) -> SuiteReport:
    r = SuiteReport("bijections")
    P = RelationPattern.parse
    T = TriplePattern.parse
    for n in range(n_max + 1):
        _check_bijection(
            r, f"theta n={n}", list(permutations(n)), bij.theta, bij.theta_inverse, enumerate_all(n)
        )
        dom = list(iter_avoiders(P(">=,>"), n))
        target = list(iter_avoiders(P(">,>="), n))
        _check_bijection(
            r, f"phi_last_preserving n={n}", dom, bij.phi_last_preserving,
            bij.phi_last_preserving_inverse, target, extra=lambda x, y: x[-1:] == y[-1:],
        )
        per_k = all(
            sum(1 for e in dom if e[-1] == k) == sum(1 for e in target if e[-1] == k) for k in range(n)
        )
        r.add(f"phi_last_preserving keeps each last-entry class, n={n}", per_k)
        _check_bijection(
            r, f"upsilon n={n}", list(iter_avoiders(P("!=,!="), n)), bij.upsilon,
            bij.upsilon_inverse, involutions(n),
        )
        subsets = {frozenset(c) for k in range(3) for c in itertools.combinations(range(max(n - 1, 0)), k)}
        _check_bijection(
            r, f"gamma n={n}", list(iter_avoiders(P(">=,!="), n)), bij.gamma,
            lambda A, n=n: bij.gamma_inverse(A, n), subsets,
        )
        _check_bijection(
            r, f"to_composition n={n}", list(iter_avoiders(P(">=,<="), n)), bij.to_composition,
            bij.from_composition, _compositions_12(n),
        )
        _check_bijection(
            r, f"to_dyck_path n={n}", list(iter_avoiders(P("<=,>"), n)), bij.to_dyck_path,
            bij.from_dyck_path, _dyck_paths(n),
        )
        dom = list(iter_avoiders_triple(T(">,<=,-"), n))
        _check_bijection(
            r, f"varphi n={n}", dom, bij.varphi, bij.varphi_inverse, unmarked_tail_paths(n, 2),
            extra=lambda e, p: dist(e) == bij.path_dist(p),
        )
        if n >= 1:
            _check_bijection(
                r, f"varphi_prime n={n}", dom, bij.varphi_prime, bij.varphi_prime_inverse,
                slanted_paths(n - 1, 2),
            )
        dom = list(iter_avoiders_triple(T(">,<,-"), n))
        _check_bijection(
            r, f"varphi_multi n={n}", dom, bij.varphi_multi, bij.varphi_multi_inverse,
            unmarked_tail_paths(n, None), extra=lambda e, p: dist(e) == bij.path_dist(p),
        )
        if n >= 1:
            _check_bijection(
                r, f"varphi_multi_prime n={n}", dom, bij.varphi_multi_prime,
                bij.varphi_multi_prime_inverse, slanted_paths(n - 1, None),
            )
    for n in range(min(n_swap, n_max) + 1):
        seqs = list(enumerate_all(n))
        for variant, (src, tgt) in bij.SWAP_VARIANTS.items():
            ok = True
            for k in range(max(n - 1, 0)):
                for S in itertools.combinations(range(1, n - 1), k):
                    S = frozenset(S)
                    dom = [e for e in seqs if S <= occurrence_set(e, src)]
                    target = {e for e in seqs if S <= occurrence_set(e, tgt)}
                    img = [bij.swap_occurrences(e, S, variant) for e in dom]
                    if set(img) != target or len(set(img)) != len(dom):
                        ok = False
                    elif any(bij.swap_occurrences_inverse(f, S, variant) != e for e, f in zip(dom, img)):
                        ok = False
            r.add(f"swap_occurrences {variant} n={n}", ok)
    for n in range(1, min(n_composite, n_max) + 1):
        _check_bijection(
            r, f"composite (124)3 -> (421)3 n={n}", list(vincular_avoiders("(124)3", n)),
            composite_1243_to_4213, composite_1243_to_4213_inverse, vincular_avoiders("(421)3", n),
        )
    return r


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "bijections": suite_bijections,
    "series": suite_series,
    "recurrences": suite_recurrences,
    "dictionary": suite_dictionary,
    "dist-symmetry": suite_dist_symmetry,
    "table1": suite_table1,
    "table2": suite_table2,
}


def run_suite(name: str) -> list[SuiteReport]:
    """Run one suite, or every suite for ``"all"``."""
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}")
    reports = []
    for n in names:
        start = time.perf_counter()
        report = SUITES[n]()
        report.seconds = time.perf_counter() - start
        reports.append(report)
    return reports
