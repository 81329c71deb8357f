"""Closed forms and recurrences for the avoider counts, computed without enumeration."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Callable

from .core import RelationPattern, RelationSymbol as R
from .errors import VerificationError

__all__ = [
    "SequenceTable",
    "RefinedTable",
    "CLOSED_FORMS",
    "closed_form",
    "fibonacci",
    "catalan_number",
    "derangements",
    "left_factorial",
    "rec_ne_ne",
    "rec_eq_eq",
    "rec_refined_gt_ge",
    "rec_refined_generic",
]


@dataclass(frozen=True)
class SequenceTable:
    """Terms ``a_offset, a_offset+1, ...`` of a named sequence."""

    name: str
    terms: tuple[int, ...]
    provenance: str
    offset: int = 0

    def __getitem__(self, n: int) -> int:
        if not self.offset <= n < self.offset + len(self.terms):
            raise IndexError(f"{self.name} has terms for n = {self.offset}..{self.offset + len(self.terms) - 1}")
        return self.terms[n - self.offset]

    def range(self, lo: int, hi: int) -> list[int]:
        return [self[n] for n in range(lo, hi + 1)]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "provenance": self.provenance,
            "offset": self.offset,
            "terms": [str(v) for v in self.terms],
        }


@dataclass(frozen=True)
class RefinedTable:
    """Avoider counts refined by last entry.

    ``by_last[n][k]`` counts avoiders of length ``n`` ending in ``k``;
    ``by_last_r1[n][k]`` counts those whose last two entries satisfy the first
    relation of the pattern.  Row ``0`` is empty.
    """

    pattern: RelationPattern
    by_last: tuple[tuple[int, ...], ...]
    by_last_r1: tuple[tuple[int, ...], ...]

    @property
    def N(self) -> int:
        return len(self.by_last) - 1

    def total(self, n: int) -> int:
        return 1 if n == 0 else sum(self.by_last[n])

    def totals(self) -> list[int]:
        return [self.total(n) for n in range(1, self.N + 1)]

    def entry(self, n: int, k: int, refined: bool = False) -> int:
        rows = self.by_last_r1 if refined else self.by_last
        return rows[n][k] if 0 <= k < n <= self.N else 0

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "k", "value", "value_r1"])
        for n in range(1, self.N + 1):
            for k in range(n):
                w.writerow([n, k, self.by_last[n][k], self.by_last_r1[n][k]])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "pattern": str(self.pattern),
            "N": self.N,
            "by_last": [[str(v) for v in row] for row in self.by_last],
            "by_last_r1": [[str(v) for v in row] for row in self.by_last_r1],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


# -------------------------------------------------------------- number lists


@lru_cache(maxsize=None)
def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def catalan_number(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def derangements(n: int) -> int:
    """``d_n = (n-1)(d_{n-1} + d_{n-2})`` with ``d_0 = 1``, ``d_1 = 0``."""
    if n == 0:
        return 1
    if n == 1:
        return 0
    return (n - 1) * (derangements(n - 1) + derangements(n - 2))


def left_factorial(n: int) -> int:
    """``0! + 1! + ... + (n-1)!``."""
    return sum(factorial(i) for i in range(n))


def _exact_div(a: int, b: int, what: str) -> int:
    q, r = divmod(a, b)
    if r:
        raise VerificationError(f"{what}: {a} is not divisible by {b}")
    return q


def _involutions(n: int) -> int:
    return sum(factorial(n) // (factorial(k) * factorial(n - 2 * k) * 2**k) for k in range(n // 2 + 1))


def _eq_eq(n: int) -> int:
    return _exact_div(factorial(n + 1) - derangements(n + 1), n, "eq_eq")


def _series_term(name: str, n: int) -> int:
    from .series import BivariateSeries, gf_catalog

    s = gf_catalog(name, n)
    if isinstance(s, BivariateSeries):
        s = s.at(1)
    return s.integers()[n]


def _egf_term(name: str, n: int) -> int:
    from .series import egf_to_counts, gf_catalog

    return egf_to_counts(gf_catalog(name, n))[n]


# name -> (description, function of n >= 1)
CLOSED_FORMS: dict[str, tuple[str, Callable[[int], int]]] = {
    # consecutive patterns of relations
    "le_ne": ("2 for n > 1", lambda n: 1 if n == 1 else 2),
    "le_ge": ("n", lambda n: n),
    "ge_ne": ("C(n,2) + 1", lambda n: comb(n, 2) + 1),
    "ge_le": ("F_{n+1}", lambda n: fibonacci(n + 1)),
    "ne_le": ("F_{n+2} - 1", lambda n: fibonacci(n + 2) - 1),
    "ge_lt": ("2^{n-1}", lambda n: 2 ** (n - 1)),
    "ne_ne": ("involutions of [n]", _involutions),
    "le_gt": ("Catalan C_n", catalan_number),
    "gt_le": ("coefficient of the radical OGF", lambda n: _series_term("thm_1_3", n)),
    "eq_ne": ("left factorial 0! + ... + (n-1)!", left_factorial),
    "ge_ge": ("n! times EGF coefficient", lambda n: _egf_term("egf_lt_lt", n)),
    "ne_eq": ("sum_{i<n} (n-1)!/i!", lambda n: sum(factorial(n - 1) // factorial(i) for i in range(n))),
    "ge_gt": ("refined recurrence", lambda n: rec_refined_gt_ge(n).total(n)),
    "eq_eq": ("((n+1)! - d_{n+1}) / n", _eq_eq),
    # classical triples of relations
    "lt_dash_lt": ("1 + C(n,2)", lambda n: 1 + comb(n, 2)),
    "ne_lt_dash": ("2^n - n", lambda n: 2**n - n),
    "ne_le_dash": ("F_{n+2} - 1", lambda n: fibonacci(n + 2) - 1),
    "gt_lt_dash": ("coefficient of the radical OGF", lambda n: _series_term("I_gt_lt", n)),
    "gt_le_dash": ("coefficient of the radical OGF", lambda n: _series_term("thm_1_3", n)),
    "gt_ne_dash": ("1 + sum_{i=1}^{n-1} C(2i,i-1)", lambda n: 1 + sum(comb(2 * i, i - 1) for i in range(1, n))),
    "ge_ne_dash": ("1 + C(n,2)", lambda n: 1 + comb(n, 2)),
    "eq_lt_dash": ("2^{n-1}", lambda n: 2 ** (n - 1)),
    "eq_le_dash": ("F_{n+1}", lambda n: fibonacci(n + 1)),
    "ge_le_ne": ("F_{n+2} - 1", lambda n: fibonacci(n + 2) - 1),
    # plain number sequences
    "fibonacci": ("F_n", fibonacci),
    "catalan": ("C_n", catalan_number),
    "derangements": ("d_n", derangements),
    "left_factorial": ("0! + ... + (n-1)!", left_factorial),
}


def closed_form(name: str, n: int) -> int:
    if name not in CLOSED_FORMS:
        raise KeyError(f"unknown closed form {name!r}; known: {', '.join(CLOSED_FORMS)}")
    if n < 1:
        raise ValueError(f"closed forms are indexed from n = 1, got {n}")
    return CLOSED_FORMS[name][1](n)


# --------------------------------------------------------------- recurrences


def rec_ne_ne(N: int) -> SequenceTable:
    """``a_n = a_{n-1} + (n-1) a_{n-2}`` with ``a_0 = a_1 = 1``."""
    a = [1, 1]
    for n in range(2, N + 1):
        a.append(a[n - 1] + (n - 1) * a[n - 2])
    return SequenceTable("ne_ne", tuple(a[: N + 1]), "recurrence")


def rec_eq_eq(N: int) -> SequenceTable:
    """``a_n = (n-1) a_{n-1} + (n-2) a_{n-2}`` with ``a_1 = 1``, ``a_2 = 2``; terms from ``n = 1``."""
    a = {1: 1, 2: 2}
    for n in range(3, N + 1):
        a[n] = (n - 1) * a[n - 1] + (n - 2) * a[n - 2]
    return SequenceTable("eq_eq", tuple(a[n] for n in range(1, N + 1)), "recurrence", offset=1)


def rec_refined_gt_ge(N: int) -> RefinedTable:
    """Last-entry refinement for ``(>,>=)`` by its difference recurrences.

    Within a row, entry ``k`` is filled from entry ``k+1`` and from row ``n-1``.
    """
    I = [[] for _ in range(N + 1)]
    Igt = [[] for _ in range(N + 1)]
    if N >= 1:
        I[1], Igt[1] = [1], [0]
    for n in range(2, N + 1):
        prev_total = sum(I[n - 1])
        row = [0] * n
        row_gt = [0] * n
        row[n - 1] = prev_total
        row_gt[n - 1] = 0
        # entries outside 0 <= k < n - 1 of row n - 1 are zero
        def prev(rows, k):
            return rows[n - 1][k] if k < n - 1 else 0

        for k in range(n - 2, -1, -1):
            row[k] = row[k + 1] - prev(Igt, k)
            row_gt[k] = row_gt[k + 1] - prev(Igt, k + 1) + prev(I, k + 1)
        I[n], Igt[n] = row, row_gt
    return RefinedTable(RelationPattern(R.GT, R.GE), tuple(map(tuple, I)), tuple(map(tuple, Igt)))


def rec_refined_generic(p: RelationPattern, N: int) -> RefinedTable:
    """Last-entry refinement for any pattern from the unsimplified double sums.

    An avoider of length ``n`` ending in ``k`` is an avoider of length ``n-1``
    followed by ``k``, minus those whose new last three entries form an
    occurrence; those are counted by the ``r1``-refined row of length ``n-1``.
    """
    if N > 14:
        raise ValueError("rec_refined_generic supports N <= 14")
    r1, r2 = p
    I = [[] for _ in range(N + 1)]
    I1 = [[] for _ in range(N + 1)]
    if N >= 1:
        I[1], I1[1] = [1], [0]
    for n in range(2, N + 1):
        prev, prev1 = I[n - 1], I1[n - 1]
        total = sum(prev)
        row, row1 = [], []
        for k in range(n):
            row.append(total - sum(prev1[j] for j in range(n - 1) if r2.holds(j, k)))
            row1.append(
                sum(prev[j] for j in range(n - 1) if r1.holds(j, k))
                - sum(prev1[j] for j in range(n - 1) if r1.holds(j, k) and r2.holds(j, k))
            )
        I[n], I1[n] = row, row1
    return RefinedTable(p, tuple(map(tuple, I)), tuple(map(tuple, I1)))
