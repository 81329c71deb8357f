"""Embedded reference data: OEIS terms and the two summary tables.

Everything here is offline.  Terms marked ``provenance="table"`` are the
published values; ``"derived"`` terms were computed by this package's
independent oracles (pruned search and series expansion) and frozen.
"""
from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "ReferenceSequence",
    "Table1Row",
    "Table2Row",
    "TABLE1",
    "TABLE2",
    "REFERENCES",
    "reference",
]


@dataclass(frozen=True)
class ReferenceSequence:
    oeis_id: str
    terms: tuple[int, ...]
    offset: int
    link: str
    kind: str  # "pattern" (consecutive pair) or "triple"
    description: str
    provenance: str = "table"

    def term(self, n: int) -> int:
        return self.terms[n - self.offset]

    @property
    def n_range(self) -> range:
        return range(self.offset, self.offset + len(self.terms))

    def to_json(self) -> dict:
        return {
            "oeis_id": self.oeis_id,
            "offset": self.offset,
            "terms": [str(v) for v in self.terms],
            "link": self.link,
            "kind": self.kind,
            "description": self.description,
            "provenance": self.provenance,
        }


@dataclass(frozen=True)
class Table1Row:
    """One consecutive-pattern row: the pattern, its equivalent patterns and terms for n = 1..9."""

    pattern: str
    equivalent: tuple[str, ...]
    oeis_id: str
    description: str
    closed_form: str
    terms: tuple[int, ...]


@dataclass(frozen=True)
class Table2Row:
    """One unimodal triple: catalog entry, closed-form name and the t = 1 description."""

    triple: str
    series: str
    closed_form: str
    condition: str
    counted_by: str


# least avoided to most avoided at length 10
TABLE1: tuple[Table1Row, ...] = (
    Table1Row("<=,!=", (), "A040000", "2 (for n > 1)", "le_ne", (1, 2, 2, 2, 2, 2, 2, 2, 2)),
    Table1Row("<=,>=", (), "A000027", "n", "le_ge", (1, 2, 3, 4, 5, 6, 7, 8, 9)),
    Table1Row(">=,!=", (), "A000124", "C(n,2) + 1", "ge_ne", (1, 2, 4, 7, 11, 16, 22, 29, 37)),
    Table1Row(">=,<=", (), "A000045", "F_{n+1}", "ge_le", (1, 2, 3, 5, 8, 13, 21, 34, 55)),
    Table1Row("!=,<=", (), "A000071", "F_{n+2} - 1", "ne_le", (1, 2, 4, 7, 12, 20, 33, 54, 88)),
    Table1Row(">=,<", ("<,>=", "!=,>="), "A000079", "2^{n-1}", "ge_lt", (1, 2, 4, 8, 16, 32, 64, 128, 256)),
    Table1Row("!=,!=", (), "A000085", "involutions of [n]", "ne_ne", (1, 2, 4, 10, 26, 76, 232, 764, 2620)),
    Table1Row("<=,>", (), "A000108", "Catalan numbers", "le_gt", (1, 2, 5, 14, 42, 132, 429, 1430, 4862)),
    Table1Row(
        ">,<=", (), "A071356",
        "underdiagonal paths to x = n with steps (0,1), (1,0), (1,2)",
        "gt_le", (1, 2, 6, 20, 72, 272, 1064, 4272, 17504),
    ),
    Table1Row("=,!=", (), "A003422", "left factorial 0! + ... + (n-1)!", "eq_ne", (1, 2, 4, 10, 34, 154, 874, 5914, 46234)),
    Table1Row(">=,>=", ("<,<",), "A049774", "permutations avoiding consecutive 321", "ge_ge", (1, 2, 5, 17, 70, 349, 2017, 13358, 99377)),
    Table1Row("!=,=", (), "A000522", "sum_{i<n} (n-1)!/i!", "ne_eq", (1, 2, 5, 16, 65, 326, 1957, 13700, 109601)),
    Table1Row(">=,>", (">,>=",), "A200403", "permutations avoiding (124)3", "ge_gt", (1, 2, 6, 23, 107, 584, 3660, 25910, 204564)),
    Table1Row("=,=", (), "A052169", "((n+1)! - d_{n+1}) / n", "eq_eq", (1, 2, 5, 19, 91, 531, 3641, 28673, 254871)),
)

TABLE2: tuple[Table2Row, ...] = (
    Table2Row("<,-,<", "I_lt_dash_lt", "lt_dash_lt", "e_1 = ... = e_j <= e_{j+1} >= 0 = ... = 0", "1 + C(n,2)"),
    Table2Row("!=,<,-", "I_ne_lt", "ne_lt_dash", "e_1 = ... = e_j <= e_{j+1} >= e_{j+2} >= ... >= e_n", "2^n - n"),
    Table2Row("!=,<=,-", "I_ne_le", "ne_le_dash", "e_1 = ... = e_j < e_{j+1} > e_{j+2} > ... > e_n", "F_{n+2} - 1"),
    Table2Row(">,<,-", "I_gt_lt", "gt_lt_dash", "e_1 <= ... <= e_j > e_{j+1} >= ... >= e_n", "(1+z-sqrt(1-6z+5z^2))/(2z(2-z))"),
    Table2Row(">,<=,-", "I_gt_le", "gt_le_dash", "e_1 <= ... <= e_j > e_{j+1} > ... > e_n", "(1+2z-sqrt(1-4z-4z^2))/(4z)"),
    Table2Row(">,!=,-", "I_gt_ne", "gt_ne_dash", "e_1 <= ... <= e_j >= e_{j+1} = ... = e_n", "1 + sum_{i=1}^{n-1} C(2i,i-1)"),
    Table2Row(">=,!=,-", "I_ge_ne", "ge_ne_dash", "e_1 < ... < e_j >= e_{j+1} = ... = e_n", "1 + C(n,2)"),
    Table2Row("=,<,-", "I_eq_lt", "eq_lt_dash", "e_1 < ... < e_j >= e_{j+1} >= ... >= e_n", "2^{n-1}"),
    Table2Row("=,<=,-", "I_eq_le", "eq_le_dash", "e_1 < ... < e_j >= e_{j+1} > ... > e_n", "F_{n+1}"),
    Table2Row(">=,<=,!=", "I_ge_le_ne", "ge_le_ne", "e_1 < ... < e_j = ... = e_i > ... > e_n", "F_{n+2} - 1"),
)


def _from_table1() -> dict[str, ReferenceSequence]:
    return {
        row.oeis_id: ReferenceSequence(row.oeis_id, row.terms, 1, row.pattern, "pattern", row.description)
        for row in TABLE1
    }


REFERENCES: dict[str, ReferenceSequence] = {
    **_from_table1(),
    # |I_n(>,<,-)|, n = 1..10; expanded from the radical OGF and checked by pruned search
    "A033321": ReferenceSequence(
        "A033321",
        (1, 2, 6, 21, 79, 311, 1265, 5275, 22431, 96900),
        1,
        ">,<,-",
        "triple",
        "inversion sequences avoiding (>,<,-)",
        provenance="derived",
    ),
}


def reference(oeis_id: str) -> ReferenceSequence:
    key = oeis_id.upper()
    if key not in REFERENCES:
        raise KeyError(f"no embedded reference for {oeis_id}; known: {', '.join(sorted(REFERENCES))}")
    return REFERENCES[key]
