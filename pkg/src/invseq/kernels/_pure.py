"""Pure-Python kernels.

Same signatures and results as the compiled ``_fast`` module.  Relation
tables and masks use the encoding of :mod:`invseq.core`: a comparison outcome
is 0 (<), 1 (=) or 2 (>); a relation mask has bit ``c`` set when the relation
holds for outcome ``c``; a pattern table has bit ``3*c1 + c2`` set when the
pair of outcomes is an occurrence.
"""
from __future__ import annotations

import itertools
import sys

BACKEND = "pure"


def _cmp(a, b):
    return (a > b) - (a < b) + 1


def relation_counts(table, r1mask, n):
    """Pruned DFS over avoiders of one consecutive pattern of relations.

    Returns, for every length ``L`` in ``0..n``, a tuple
    ``(total, by_last[L], by_last_r1[L], by_dist[L+1])`` where ``by_last_r1``
    only counts avoiders whose last two entries satisfy the first relation.
    """
    total = [0] * (n + 1)
    last = [[0] * L for L in range(n + 1)]
    last_r1 = [[0] * L for L in range(n + 1)]
    dist = [[0] * (L + 1) for L in range(n + 1)]
    e = [0] * max(n, 1)
    seen = [0] * max(n, 1)
    total[0] = 1
    dist[0][0] = 1
    if n == 0:
        return [(1, [], [], [1])]

    sys.setrecursionlimit(max(1000, 4 * n + 100))

    def visit(L, distinct):
        # e[0..L-1] is an avoider of length L
        total[L] += 1
        b = e[L - 1]
        last[L][b] += 1
        dist[L][distinct] += 1
        if L >= 2:
            c1 = _cmp(e[L - 2], b)
            if r1mask >> c1 & 1:
                last_r1[L][b] += 1
            if L == n:
                return
            row = table >> (3 * c1)
            for c in range(L + 1):
                if row >> _cmp(b, c) & 1:
                    continue
                e[L] = c
                fresh = seen[c] == 0
                seen[c] += 1
                visit(L + 1, distinct + fresh)
                seen[c] -= 1
        elif L < n:
            for c in range(L + 1):
                e[L] = c
                fresh = seen[c] == 0
                seen[c] += 1
                visit(L + 1, distinct + fresh)
                seen[c] -= 1

    e[0] = 0
    seen[0] = 1
    visit(1, 1)
    return [(total[L], last[L], last_r1[L], dist[L]) for L in range(n + 1)]


def triple_counts(m1, m2, m3, n):
    """Pruned DFS over avoiders of a classical triple of relations.

    Returns ``(total, by_last[L], by_dist[L+1])`` for every ``L`` in ``0..n``.
    """
    total = [0] * (n + 1)
    last = [[0] * L for L in range(n + 1)]
    dist = [[0] * (L + 1) for L in range(n + 1)]
    total[0] = 1
    dist[0][0] = 1
    if n == 0:
        return [(1, [], [1])]
    e = [0] * n
    seen = [0] * n

    def creates(L, c):
        for j in range(1, L):
            ej = e[j]
            if not m2 >> _cmp(ej, c) & 1:
                continue
            for i in range(j):
                if m1 >> _cmp(e[i], ej) & 1 and m3 >> _cmp(e[i], c) & 1:
                    return True
        return False

    def visit(L, distinct):
        total[L] += 1
        last[L][e[L - 1]] += 1
        dist[L][distinct] += 1
        if L == n:
            return
        for c in range(L + 1):
            if L >= 2 and creates(L, c):
                continue
            e[L] = c
            fresh = seen[c] == 0
            seen[c] += 1
            visit(L + 1, distinct + fresh)
            seen[c] -= 1

    seen[0] = 1
    visit(1, 1)
    return [(total[L], last[L], dist[L]) for L in range(n + 1)]


def profile_counts(tables, n):
    """Occurrence-set distribution for several patterns at every length ``<= n``.

    ``result[L][p][mask]`` is the number of inversion sequences of length ``L``
    whose occurrence set for pattern ``p`` is ``mask`` (bit ``i-1`` for
    position ``i``).  Computed by a transfer over states
    ``(last entry, last comparison, mask)``; this is exact and much faster in
    pure Python than visiting all n! sequences.
    """
    width = 1 << max(n - 2, 0)
    out = [[[0] * width for _ in tables] for _ in range(n + 1)]
    for p, table in enumerate(tables):
        out[0][p][0] = 1
        if n == 0:
            continue
        out[1][p][0] = 1
        if n == 1:
            continue
        # length 2: e = 0b with b in {0, 1}
        states = {}
        for b in (0, 1):
            key = (b, _cmp(0, b), 0)
            states[key] = states.get(key, 0) + 1
        out[2][p][0] = 2
        for L in range(2, n):
            bit = 1 << (L - 2)
            nxt = {}
            for (b, c1, mask), count in states.items():
                row = table >> (3 * c1)
                for c in range(L + 1):
                    c2 = _cmp(b, c)
                    m = mask | bit if row >> c2 & 1 else mask
                    key = (c, c2, m)
                    nxt[key] = nxt.get(key, 0) + count
            states = nxt
            acc = out[L + 1][p]
            for (_, _, m), count in states.items():
                acc[m] += count
    return out


def _contains(perm, letters, adjacency):
    r = len(letters)
    n = len(perm)
    pos = [0] * r

    def place(k, start):
        if k == r:
            return True
        if k > 0 and adjacency >> (k - 1) & 1:
            candidates = (pos[k - 1] + 1,) if pos[k - 1] + 1 < n else ()
        else:
            candidates = range(start, n - (r - k) + 1)
        for q in candidates:
            v = perm[q]
            ok = True
            for m in range(k):
                if (perm[pos[m]] < v) != (letters[m] < letters[k]):
                    ok = False
                    break
            if ok:
                pos[k] = q
                if place(k + 1, q + 1):
                    return True
        return False

    return place(0, 0)


def vincular_count(n, patterns):
    """Number of permutations of ``1..n`` avoiding every ``(letters, adjacency)``.

    ``adjacency`` has bit ``k-1`` set when pattern positions ``k`` and ``k+1``
    must be adjacent in an occurrence.
    """
    count = 0
    for perm in itertools.permutations(range(1, n + 1)):
        if not any(_contains(perm, letters, adj) for letters, adj in patterns):
            count += 1
    return count


def vincular_contains(perm, letters, adjacency):
    return _contains(tuple(perm), tuple(letters), adjacency)
