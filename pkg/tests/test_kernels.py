"""The compiled and pure-Python kernels must agree with each other and with brute force."""
import itertools

import pytest

from invseq import kernels
from invseq.core import (
    RelationPattern,
    TriplePattern,
    all_relation_patterns,
    avoids,
    avoids_triple,
    occurrence_mask,
)
from invseq.enumeration import enumerate_all

BACKENDS = kernels.available()
pure = kernels.load("pure")


def test_backend_selection():
    assert kernels.BACKEND in ("compiled", "pure")
    assert "pure" in BACKENDS
    with pytest.raises(ValueError):
        kernels.load("gpu")


@pytest.mark.parametrize("backend", BACKENDS)
def test_relation_counts_match_brute_force(backend):
    k = kernels.load(backend)
    for p in all_relation_patterns():
        rows = k.relation_counts(p.table, p.r1.mask, 6)
        for n in range(7):
            avoiders = [e for e in enumerate_all(n) if avoids(e, p)]
            total, last, last_r1, dist = rows[n]
            assert total == len(avoiders)
            assert sum(last) == (total if n else 0)
            for kk in range(n):
                assert last[kk] == sum(1 for e in avoiders if e[-1] == kk)
                assert last_r1[kk] == sum(
                    1 for e in avoiders if e[-1] == kk and n >= 2 and p.r1.holds(e[-2], e[-1])
                )
            for d in range(len(dist)):
                assert dist[d] == sum(1 for e in avoiders if len(set(e)) == d)


@pytest.mark.parametrize("backend", BACKENDS)
def test_triple_counts_match_brute_force(backend):
    k = kernels.load(backend)
    for text in (">,<=,-", ">,<,-", "!=,<,-", "<,-,<", ">=,<=,!=", "-,-,-", "=,=,="):
        t = TriplePattern.parse(text)
        rows = k.triple_counts(t.r1.mask, t.r2.mask, t.r3.mask, 6)
        for n in range(7):
            avoiders = [e for e in enumerate_all(n) if avoids_triple(e, t)]
            total, last, dist = rows[n]
            assert total == len(avoiders), (text, n)
            for d in range(len(dist)):
                assert dist[d] == sum(1 for e in avoiders if len(set(e)) == d)


@pytest.mark.parametrize("backend", BACKENDS)
def test_profile_counts_match_brute_force(backend):
    k = kernels.load(backend)
    patterns = all_relation_patterns()
    raw = k.profile_counts([p.table for p in patterns], 6)
    for n in range(7):
        for i, p in enumerate(patterns):
            expected = {}
            for e in enumerate_all(n):
                m = occurrence_mask(e, p)
                expected[m] = expected.get(m, 0) + 1
            got = {m: c for m, c in enumerate(raw[n][i]) if c}
            assert got == expected


def test_backends_agree_at_larger_n():
    if "compiled" not in BACKENDS:
        pytest.skip("compiled kernels not built")
    fast = kernels.load("compiled")
    for p in all_relation_patterns():
        assert fast.relation_counts(p.table, p.r1.mask, 9) == pure.relation_counts(p.table, p.r1.mask, 9)
    t = TriplePattern.parse(">,<,-")
    assert fast.triple_counts(1, 2, 0b111, 8) == pure.triple_counts(1, 2, 0b111, 8)
    assert fast.triple_counts(t.r1.mask, t.r2.mask, t.r3.mask, 9) == pure.triple_counts(
        t.r1.mask, t.r2.mask, t.r3.mask, 9
    )
    tables = [p.table for p in all_relation_patterns()]
    assert [list(map(list, row)) for row in fast.profile_counts(tables, 7)] == [
        list(map(list, row)) for row in pure.profile_counts(tables, 7)
    ]
    pats = [((1, 2, 4, 3), 0b011), ((2, 1, 3, 4), 0b110)]
    for n in range(1, 8):
        assert fast.vincular_count(n, pats) == pure.vincular_count(n, pats)


def _contains_brute(perm, letters, adjacency):
    r = len(letters)
    for idx in itertools.combinations(range(len(perm)), r):
        if any(adjacency >> (k - 1) & 1 and idx[k] != idx[k - 1] + 1 for k in range(1, r)):
            continue
        vals = [perm[i] for i in idx]
        if sorted(range(r), key=lambda q: vals[q]) == sorted(range(r), key=lambda q: letters[q]):
            return True
    return False


@pytest.mark.parametrize("backend", BACKENDS)
def test_vincular_contains_matches_brute_force(backend):
    k = kernels.load(backend)
    pats = [((1, 2, 4, 3), 0b011), ((2, 1, 3, 4), 0b110), ((3, 2, 1), 0b11), ((2, 1, 4, 3), 0), ((1, 3, 2), 0b01)]
    for n in range(0, 7):
        for perm in itertools.permutations(range(1, n + 1)):
            for letters, adj in pats:
                assert bool(k.vincular_contains(perm, letters, adj)) == _contains_brute(perm, letters, adj)
