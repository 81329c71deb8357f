# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; drop-in replacement for ``invseq.kernels._pure``.

Unlike the pure fallback, ``profile_counts`` here visits every inversion
sequence explicitly (depth-first, masks updated incrementally).
"""
from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memset

BACKEND = "compiled"

DEF MAXN = 24

ctypedef long long i64


cdef inline int cmp3(int a, int b) nogil:
    return (a > b) - (a < b) + 1


# ---------------------------------------------------------------- relations

cdef struct RelCtx:
    int n
    int table
    int r1mask
    int e[MAXN]
    int seen[MAXN]
    i64 total[MAXN + 1]
    i64 last[MAXN + 1][MAXN]
    i64 last_r1[MAXN + 1][MAXN]
    i64 dist[MAXN + 1][MAXN + 1]


cdef void rel_visit(RelCtx* ctx, int L, int distinct) nogil:
    cdef int b = ctx.e[L - 1]
    cdef int c, c1, row
    ctx.total[L] += 1
    ctx.last[L][b] += 1
    ctx.dist[L][distinct] += 1
    if L >= 2:
        c1 = cmp3(ctx.e[L - 2], b)
        if (ctx.r1mask >> c1) & 1:
            ctx.last_r1[L][b] += 1
        if L == ctx.n:
            return
        row = ctx.table >> (3 * c1)
        for c in range(L + 1):
            if (row >> cmp3(b, c)) & 1:
                continue
            ctx.e[L] = c
            ctx.seen[c] += 1
            rel_visit(ctx, L + 1, distinct + (ctx.seen[c] == 1))
            ctx.seen[c] -= 1
    elif L < ctx.n:
        for c in range(L + 1):
            ctx.e[L] = c
            ctx.seen[c] += 1
            rel_visit(ctx, L + 1, distinct + (ctx.seen[c] == 1))
            ctx.seen[c] -= 1


def relation_counts(int table, int r1mask, int n):
    if n < 0 or n >= MAXN:
        raise ValueError(f"n must be in 0..{MAXN - 1}")
    if n == 0:
        return [(1, [], [], [1])]
    cdef RelCtx* ctx = <RelCtx*> calloc(1, sizeof(RelCtx))
    if ctx == NULL:
        raise MemoryError()
    cdef int L
    try:
        ctx.n = n
        ctx.table = table
        ctx.r1mask = r1mask
        ctx.e[0] = 0
        ctx.seen[0] = 1
        with nogil:
            rel_visit(ctx, 1, 1)
        out = [(1, [], [], [1])]
        for L in range(1, n + 1):
            out.append((
                ctx.total[L],
                [ctx.last[L][k] for k in range(L)],
                [ctx.last_r1[L][k] for k in range(L)],
                [ctx.dist[L][d] for d in range(L + 1)],
            ))
        return out
    finally:
        free(ctx)


# ------------------------------------------------------------------ triples

cdef struct TriCtx:
    int n
    int m1
    int m2
    int m3
    int e[MAXN]
    int seen[MAXN]
    i64 total[MAXN + 1]
    i64 last[MAXN + 1][MAXN]
    i64 dist[MAXN + 1][MAXN + 1]


cdef inline bint tri_creates(TriCtx* ctx, int L, int c) nogil:
    cdef int i, j, ej
    for j in range(1, L):
        ej = ctx.e[j]
        if not ((ctx.m2 >> cmp3(ej, c)) & 1):
            continue
        for i in range(j):
            if ((ctx.m1 >> cmp3(ctx.e[i], ej)) & 1) and ((ctx.m3 >> cmp3(ctx.e[i], c)) & 1):
                return True
    return False


cdef void tri_visit(TriCtx* ctx, int L, int distinct) nogil:
    cdef int c
    ctx.total[L] += 1
    ctx.last[L][ctx.e[L - 1]] += 1
    ctx.dist[L][distinct] += 1
    if L == ctx.n:
        return
    for c in range(L + 1):
        if L >= 2 and tri_creates(ctx, L, c):
            continue
        ctx.e[L] = c
        ctx.seen[c] += 1
        tri_visit(ctx, L + 1, distinct + (ctx.seen[c] == 1))
        ctx.seen[c] -= 1


def triple_counts(int m1, int m2, int m3, int n):
    if n < 0 or n >= MAXN:
        raise ValueError(f"n must be in 0..{MAXN - 1}")
    if n == 0:
        return [(1, [], [1])]
    cdef TriCtx* ctx = <TriCtx*> calloc(1, sizeof(TriCtx))
    if ctx == NULL:
        raise MemoryError()
    cdef int L
    try:
        ctx.n = n
        ctx.m1 = m1
        ctx.m2 = m2
        ctx.m3 = m3
        ctx.e[0] = 0
        ctx.seen[0] = 1
        with nogil:
            tri_visit(ctx, 1, 1)
        out = [(1, [], [1])]
        for L in range(1, n + 1):
            out.append((
                ctx.total[L],
                [ctx.last[L][k] for k in range(L)],
                [ctx.dist[L][d] for d in range(L + 1)],
            ))
        return out
    finally:
        free(ctx)


# ----------------------------------------------------------------- profiles

DEF MAXP = 64

cdef struct ProfCtx:
    int n
    int npat
    int width
    int tables[MAXP]
    int e[MAXN]
    int masks[MAXN + 1][MAXP]
    i64* counts


cdef void prof_visit(ProfCtx* ctx, int L) nogil:
    cdef int p, c, code, c1
    cdef i64* row = ctx.counts + (<i64> L) * ctx.npat * ctx.width
    for p in range(ctx.npat):
        row[p * ctx.width + ctx.masks[L][p]] += 1
    if L == ctx.n:
        return
    for c in range(L + 1):
        ctx.e[L] = c
        if L >= 2:
            code = 3 * cmp3(ctx.e[L - 2], ctx.e[L - 1]) + cmp3(ctx.e[L - 1], c)
            for p in range(ctx.npat):
                ctx.masks[L + 1][p] = ctx.masks[L][p] | (((ctx.tables[p] >> code) & 1) << (L - 2))
        else:
            for p in range(ctx.npat):
                ctx.masks[L + 1][p] = 0
        prof_visit(ctx, L + 1)


def profile_counts(tables, int n):
    cdef int npat = len(tables)
    if npat > MAXP:
        raise ValueError(f"at most {MAXP} patterns per call")
    if n < 0 or n > 20:
        raise ValueError("n must be in 0..20")
    cdef int width = 1 << (n - 2 if n > 2 else 0)
    cdef ProfCtx* ctx = <ProfCtx*> calloc(1, sizeof(ProfCtx))
    if ctx == NULL:
        raise MemoryError()
    cdef i64 size = (<i64> (n + 1)) * npat * width
    cdef int p, L, m
    ctx.counts = <i64*> calloc(size, sizeof(i64))
    if ctx.counts == NULL:
        free(ctx)
        raise MemoryError()
    try:
        ctx.n = n
        ctx.npat = npat
        ctx.width = width
        for p in range(npat):
            ctx.tables[p] = tables[p]
        with nogil:
            prof_visit(ctx, 0)
        out = []
        for L in range(n + 1):
            out.append([
                [ctx.counts[(L * npat + p) * width + m] for m in range(width)]
                for p in range(npat)
            ])
        return out
    finally:
        free(ctx.counts)
        free(ctx)


# ---------------------------------------------------------------- vincular

DEF MAXR = 12

cdef struct VinCtx:
    int n
    int r
    int adjacency
    int letters[MAXR]
    int pos[MAXR]
    int perm[MAXN]


cdef bint vin_place(VinCtx* ctx, int k, int start) nogil:
    cdef int q, m, v, lo, hi
    cdef bint ok
    if k == ctx.r:
        return True
    if k > 0 and ((ctx.adjacency >> (k - 1)) & 1):
        lo = ctx.pos[k - 1] + 1
        hi = lo + 1
        if lo >= ctx.n:
            return False
    else:
        lo = start
        hi = ctx.n - (ctx.r - k) + 1
    for q in range(lo, hi):
        v = ctx.perm[q]
        ok = True
        for m in range(k):
            if (ctx.perm[ctx.pos[m]] < v) != (ctx.letters[m] < ctx.letters[k]):
                ok = False
                break
        if ok:
            ctx.pos[k] = q
            if vin_place(ctx, k + 1, q + 1):
                return True
    return False


cdef bint next_permutation(int* a, int n) nogil:
    cdef int i = n - 2
    cdef int j, tmp
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    tmp = a[i]; a[i] = a[j]; a[j] = tmp
    i += 1
    j = n - 1
    while i < j:
        tmp = a[i]; a[i] = a[j]; a[j] = tmp
        i += 1
        j -= 1
    return True


def vincular_count(int n, patterns):
    if n < 0 or n >= MAXN:
        raise ValueError(f"n must be in 0..{MAXN - 1}")
    cdef int npat = len(patterns)
    cdef VinCtx* ctxs = <VinCtx*> calloc(max(npat, 1), sizeof(VinCtx))
    if ctxs == NULL:
        raise MemoryError()
    cdef int perm[MAXN]
    cdef int i, p, k
    cdef i64 count = 0
    cdef bint hit
    try:
        for p in range(npat):
            letters, adjacency = patterns[p]
            if len(letters) > MAXR:
                raise ValueError(f"pattern longer than {MAXR}")
            ctxs[p].n = n
            ctxs[p].r = len(letters)
            ctxs[p].adjacency = adjacency
            for k in range(len(letters)):
                ctxs[p].letters[k] = letters[k]
        for i in range(n):
            perm[i] = i + 1
        with nogil:
            while True:
                hit = False
                for p in range(npat):
                    for i in range(n):
                        ctxs[p].perm[i] = perm[i]
                    if vin_place(&ctxs[p], 0, 0):
                        hit = True
                        break
                if not hit:
                    count += 1
                if n == 0 or not next_permutation(perm, n):
                    break
        return count
    finally:
        free(ctxs)


def vincular_contains(perm, letters, int adjacency):
    cdef VinCtx ctx
    cdef int i
    if len(perm) >= MAXN or len(letters) > MAXR:
        raise ValueError("input too long")
    memset(&ctx, 0, sizeof(VinCtx))
    ctx.n = len(perm)
    ctx.r = len(letters)
    ctx.adjacency = adjacency
    for i in range(ctx.n):
        ctx.perm[i] = perm[i]
    for i in range(ctx.r):
        ctx.letters[i] = letters[i]
    return bool(vin_place(&ctx, 0, 0))
