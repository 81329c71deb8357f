import math

import pytest

from invseq.core import RelationPattern, all_relation_patterns
from invseq.enumeration import count_avoiders_upto
from invseq.permutations import involutions
from invseq.recurrences import (
    CLOSED_FORMS,
    closed_form,
    derangements,
    fibonacci,
    rec_eq_eq,
    rec_ne_ne,
    rec_refined_generic,
    rec_refined_gt_ge,
)
from invseq.references import TABLE1

P = RelationPattern.parse


def test_closed_form_examples():
    assert closed_form("ge_ne", 9) == 37
    assert closed_form("eq_eq", 9) == 254871
    assert closed_form("ne_eq", 1) == 1
    with pytest.raises(KeyError):
        closed_form("nope", 3)
    with pytest.raises(ValueError):
        closed_form("ge_ne", 0)


@pytest.mark.parametrize("row", TABLE1, ids=lambda r: r.pattern)
def test_table1_closed_forms(row):
    assert [closed_form(row.closed_form, n) for n in range(1, 10)] == list(row.terms)
    brute = [c.total for c in count_avoiders_upto(P(row.pattern), 9)]
    assert brute[1:] == list(row.terms)


def test_every_closed_form_evaluates():
    for name in CLOSED_FORMS:
        assert closed_form(name, 3) > 0


def test_number_helpers():
    assert [fibonacci(n) for n in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13]
    assert [derangements(n) for n in range(6)] == [1, 0, 1, 2, 9, 44]
    for n in range(1, 21):
        assert (math.factorial(n + 1) - derangements(n + 1)) % n == 0


def test_rec_ne_ne():
    t = rec_ne_ne(10)
    assert t[4] == 10 and t[1] == 1 and t[8] == 764
    assert t.range(1, 10) == [sum(1 for _ in involutions(n)) for n in range(1, 11)]
    with pytest.raises(IndexError):
        t[11]


def test_rec_eq_eq():
    t = rec_eq_eq(9)
    assert t[3] == 5 and t[2] == 2 and t[7] == 3641
    assert t.range(1, 9) == [closed_form("eq_eq", n) for n in range(1, 10)]
    assert t.to_json()["terms"][0] == "1"
    with pytest.raises(IndexError):
        t[0]


def test_rec_refined_gt_ge():
    t = rec_refined_gt_ge(10)
    assert t.totals()[:9] == [1, 2, 6, 23, 107, 584, 3660, 25910, 204564]
    for n in range(1, 11):
        assert t.entry(n, n - 1, refined=True) == 0
        assert t.entry(n, n - 1) == t.total(n - 1)
    assert all(t.entry(1, k, refined=True) == 0 for k in range(1))


def test_cross_refinement_identity():
    gt_ge = rec_refined_gt_ge(10)
    ge_gt = rec_refined_generic(P(">=,>"), 10)
    for n in range(1, 11):
        for k in range(n):
            assert gt_ge.entry(n, k, refined=True) == ge_gt.entry(n, k + 1, refined=True)


def test_refined_rows_match_brute_force():
    for p in all_relation_patterns():
        table = rec_refined_generic(p, 9)
        counts = count_avoiders_upto(p, 9)
        for n in range(1, 10):
            assert list(table.by_last[n]) == [counts[n].by_last_entry.get(k, 0) for k in range(n)], (p, n)
    assert rec_refined_generic(P(">,>="), 10).by_last == rec_refined_gt_ge(10).by_last


def test_refined_generic_guard():
    with pytest.raises(ValueError):
        rec_refined_generic(P("<,<"), 15)


def test_refined_exports():
    t = rec_refined_gt_ge(3)
    assert t.to_csv().splitlines()[:3] == ["n,k,value,value_r1", "1,0,1,0", "2,0,1,0"]
    j = t.to_json()
    assert j["pattern"] == ">,>=" and j["N"] == 3
    assert '"by_last"' in t.dumps()
