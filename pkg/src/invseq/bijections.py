"""Explicit bijections between inversion sequences and other objects.

Every forward map checks its domain first and raises
:class:`~invseq.errors.PreconditionError` on bad input.  Positions in
occurrence sets are 1-based, entries of inversion sequences are 0-based.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .core import (
    RelationPattern,
    RelationSymbol as R,
    TriplePattern,
    avoids,
    avoids_triple,
    format_sequence,
    is_inversion_sequence,
    occurrence_set,
    parse_sequence,
    reduction,
)
from .errors import PreconditionError
from .paths import (
    E,
    N,
    MarkedDyckPath,
    MultiMarkedDyckPath,
    PlainSlantedPath,
    SlantedPath,
)

__all__ = [
    "Permutation",
    "theta",
    "theta_inverse",
    "SWAP_VARIANTS",
    "swap_occurrences",
    "swap_occurrences_inverse",
    "phi_last_preserving",
    "phi_last_preserving_inverse",
    "upsilon",
    "upsilon_inverse",
    "gamma",
    "gamma_inverse",
    "to_composition",
    "from_composition",
    "to_dyck_path",
    "from_dyck_path",
    "varphi",
    "varphi_inverse",
    "varphi_prime",
    "varphi_prime_inverse",
    "varphi_multi",
    "varphi_multi_inverse",
    "varphi_multi_prime",
    "varphi_multi_prime_inverse",
    "path_dist",
]

GE_GT = RelationPattern(R.GE, R.GT)
GT_GE = RelationPattern(R.GT, R.GE)
NE_NE = RelationPattern(R.NE, R.NE)
GE_NE = RelationPattern(R.GE, R.NE)
GE_LE = RelationPattern(R.GE, R.LE)
LE_GT = RelationPattern(R.LE, R.GT)
GT_LE_DASH = TriplePattern(R.GT, R.LE, R.DASH)
GT_LT_DASH = TriplePattern(R.GT, R.LT, R.DASH)


class Permutation(tuple):
    """A permutation of ``1..n`` in one-line notation."""

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()):
        values = tuple(map(int, values))
        if set(values) != set(range(1, len(values) + 1)):
            raise ValueError(f"{values} is not a permutation of 1..{len(values)}")
        return super().__new__(cls, values)

    @classmethod
    def _trusted(cls, values) -> "Permutation":
        """Wrap values already known to form a permutation."""
        return tuple.__new__(cls, values)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        return cls(parse_sequence(text))

    def __str__(self) -> str:
        return format_sequence(self)

    def __repr__(self) -> str:
        return f"Permutation('{self}')"


def _require_inversion_sequence(e: Sequence[int]) -> tuple[int, ...]:
    e = tuple(e)
    if not is_inversion_sequence(e):
        raise PreconditionError(f"{format_sequence(e)} is not an inversion sequence")
    return e


def _require_avoids(e, p: RelationPattern, what: str) -> tuple[int, ...]:
    e = _require_inversion_sequence(e)
    if not avoids(e, p):
        raise PreconditionError(f"{what} needs an avoider of ({p}); got {format_sequence(e)}")
    return e


def _require_avoids_triple(e, t: TriplePattern, what: str) -> tuple[int, ...]:
    e = _require_inversion_sequence(e)
    if not avoids_triple(e, t):
        raise PreconditionError(f"{what} needs an avoider of ({t}); got {format_sequence(e)}")
    return e


# ------------------------------------------------------------------ theta


def theta(pi: Sequence[int]) -> tuple[int, ...]:
    """Inversion sequence of ``pi``: ``e_i`` counts earlier entries larger than ``pi_i``."""
    pi = pi if isinstance(pi, Permutation) else Permutation(pi)
    return tuple(sum(map(x.__lt__, pi[:i])) for i, x in enumerate(pi))


def theta_inverse(e: Sequence[int]) -> Permutation:
    e = _require_inversion_sequence(e)
    remaining = list(range(1, len(e) + 1))
    out = [0] * len(e)
    # right to left: pi_i is the (e_i + 1)-th largest value still unused
    for i in range(len(e) - 1, -1, -1):
        out[i] = remaining.pop(len(remaining) - 1 - e[i])
    return Permutation._trusted(out)


# ------------------------------------------------- swapping occurrence sets

# variant -> (source pattern, target pattern)
SWAP_VARIANTS = {
    "EQGT_to_GTEQ": (RelationPattern(R.EQ, R.GT), RelationPattern(R.GT, R.EQ)),
    "EQGE_to_GEEQ": (RelationPattern(R.EQ, R.GE), RelationPattern(R.GE, R.EQ)),
    "GEGT_to_GTGE": (RelationPattern(R.GE, R.GT), RelationPattern(R.GT, R.GE)),
}


def _blocks(S: Iterable[int]) -> list[tuple[int, int]]:
    """Maximal runs of consecutive positions as ``(first, last)`` pairs."""
    out: list[list[int]] = []
    for i in sorted(S):
        if out and i == out[-1][1] + 1:
            out[-1][1] = i
        else:
            out.append([i, i])
    return [(a, b) for a, b in out]


def _check_swap_args(e, S, variant, side):
    if variant not in SWAP_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {sorted(SWAP_VARIANTS)}")
    e = _require_inversion_sequence(e)
    S = frozenset(S)
    p = SWAP_VARIANTS[variant][side]
    if not S <= occurrence_set(e, p):
        raise PreconditionError(
            f"positions {sorted(S)} are not all occurrences of ({p}) in {format_sequence(e)}"
        )
    return e, S


def swap_occurrences(e: Sequence[int], S: Iterable[int], variant: str) -> tuple[int, ...]:
    """Turn the source-pattern occurrences at positions ``S`` into target-pattern occurrences.

    The map is a bijection between sequences whose source occurrence set
    contains ``S`` and sequences whose target occurrence set contains ``S``.
    """
    e, S = _check_swap_args(e, S, variant, 0)
    # 1-based access
    v = (None,) + e
    out = list(v)
    if variant == "EQGT_to_GTEQ":
        for j in range(1, len(e) + 1):
            if j - 1 in S:
                out[j] = v[j + 1]
    elif variant == "EQGE_to_GEEQ":
        for first, last in _blocks(S):
            if v[last + 1] > v[last + 2]:
                for i in range(first + 1, last + 2):
                    out[i] = v[last + 2]
    else:
        for first, last in _blocks(S):
            if v[first] == v[first + 1]:
                for i in range(first + 1, last + 2):
                    out[i] = v[i + 1]
    return tuple(out[1:])


def swap_occurrences_inverse(e: Sequence[int], S: Iterable[int], variant: str) -> tuple[int, ...]:
    """Inverse of :func:`swap_occurrences` for the same ``S`` and ``variant``."""
    e, S = _check_swap_args(e, S, variant, 1)
    v = (None,) + e
    out = list(v)
    if variant == "EQGT_to_GTEQ":
        for j in range(1, len(e) + 1):
            if j - 1 in S:
                out[j] = v[j - 1]
    elif variant == "EQGE_to_GEEQ":
        for first, last in _blocks(S):
            if v[first] > v[first + 1]:
                for i in range(first + 1, last + 2):
                    out[i] = v[first]
    else:
        for first, last in _blocks(S):
            if v[last + 1] == v[last + 2]:
                for i in range(first + 1, last + 2):
                    out[i] = v[i - 1]
    return tuple(out[1:])


# ------------------------------------------------ last-entry preserving map


def phi_last_preserving(e: Sequence[int]) -> tuple[int, ...]:
    """Bijection from ``(>=,>)``-avoiders to ``(>,>=)``-avoiders keeping the last entry.

    Each maximal factor ``a b^r`` with ``a > b`` and ``r >= 2`` becomes ``a^r b``.
    """
    e = list(_require_avoids(e, GE_GT, "phi_last_preserving"))
    n = len(e)
    out = e[:]
    i = 1
    while i < n:
        if e[i - 1] > e[i]:
            k = i
            while k + 1 < n and e[k + 1] == e[i]:
                k += 1
            if k - i + 1 >= 2:
                for q in range(i, k):
                    out[q] = e[i - 1]
            i = k + 1
        else:
            i += 1
    return tuple(out)


def phi_last_preserving_inverse(e: Sequence[int]) -> tuple[int, ...]:
    """Replace each maximal factor ``a^r b`` with ``a > b`` and ``r >= 2`` by ``a b^r``."""
    e = list(_require_avoids(e, GT_GE, "phi_last_preserving_inverse"))
    n = len(e)
    out = e[:]
    i = 0
    while i < n:
        k = i
        while k + 1 < n and e[k + 1] == e[i]:
            k += 1
        # run e[i..k]
        if k - i + 1 >= 2 and k + 1 < n and e[k] > e[k + 1]:
            for q in range(i + 1, k + 1):
                out[q] = e[k + 1]
        i = k + 1
    return tuple(out)


# ----------------------------------------------------------------- upsilon


def upsilon(e: Sequence[int]) -> Permutation:
    """Bijection from ``(!=,!=)``-avoiders onto involutions."""
    e = _require_avoids(e, NE_NE, "upsilon")
    return Permutation(_upsilon(e))


def _upsilon(e: tuple[int, ...]) -> list[int]:
    n = len(e)
    if n <= 1:
        return [1] * n
    i = (e[-1] - e[-2]) % n or n
    if i == n:
        return _upsilon(e[:-1]) + [n]
    sigma = _upsilon(e[:-2])
    labels = [v for v in range(1, n) if v != i]
    sigma = [labels[v - 1] for v in sigma]
    return sigma[: i - 1] + [n] + sigma[i - 1:] + [i]


def upsilon_inverse(pi: Sequence[int]) -> tuple[int, ...]:
    pi = Permutation(pi)
    if any(pi[pi[k] - 1] != k + 1 for k in range(len(pi))):
        raise PreconditionError(f"{pi} is not an involution")
    return tuple(_upsilon_inverse(list(pi)))


def _upsilon_inverse(pi: list[int]) -> list[int]:
    n = len(pi)
    if n <= 1:
        return [0] * n
    i = pi[-1]
    if i == n:
        e = _upsilon_inverse(pi[:-1])
        return e + [e[-1]]
    rest = [v for q, v in enumerate(pi[:-1]) if q != i - 1]
    e = _upsilon_inverse([v + 1 for v in reduction(rest)])
    prev = e[-1] if e else 0
    return e + [prev, (prev + i) % n]


# ------------------------------------------------------------------- gamma


def gamma(e: Sequence[int]) -> frozenset[int]:
    """Bijection from ``(>=,!=)``-avoiders onto subsets of ``{0..n-2}`` of size at most 2."""
    e = _require_avoids(e, GE_NE, "gamma")
    n = len(e)
    if n == 0 or e[-1] == n - 1:
        return frozenset()
    return frozenset({max(e), e[-1]})


def gamma_inverse(A: Iterable[int], n: int) -> tuple[int, ...]:
    A = sorted(set(A), reverse=True)
    if len(A) > 2 or any(not 0 <= a <= n - 2 for a in A):
        raise PreconditionError(f"{A} is not a subset of {{0..{n - 2}}} with at most 2 elements")
    if not A:
        return tuple(range(n))
    a = A[0]
    b = A[-1]
    return tuple(range(a + 1)) + (b,) * (n - a - 1)


# ------------------------------------------------------------ compositions


def to_composition(e: Sequence[int]) -> tuple[int, ...]:
    """Bijection from ``(>=,<=)``-avoiders onto compositions of ``n`` into parts 1 and 2."""
    e = _require_avoids(e, GE_LE, "to_composition")
    if not e:
        return ()
    return tuple(e.count(v) for v in range(max(e) + 1))


def from_composition(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(parts)
    if any(a not in (1, 2) for a in parts):
        raise PreconditionError(f"{parts} has a part outside {{1, 2}}")
    n = sum(parts)
    j = len(parts)
    e: list[int | None] = list(range(j)) + [None] * (n - j)
    right = n - 1
    for i, a in enumerate(parts):
        if a == 2:
            e[right] = i
            right -= 1
    return tuple(e)  # type: ignore[arg-type]


# --------------------------------------------------------------- Dyck paths


def to_dyck_path(e: Sequence[int]) -> MarkedDyckPath:
    """Bijection from weakly increasing inversion sequences onto Dyck paths.

    The path has an east step at height ``e_i`` for each entry, then enough
    north steps to end on the diagonal.
    """
    e = _require_avoids(e, LE_GT, "to_dyck_path")
    steps: list[int] = []
    h = 0
    for x in e:
        steps += [N] * (x - h) + [E]
        h = x
    steps += [N] * (len(e) - h)
    return MarkedDyckPath(steps)


def from_dyck_path(path) -> tuple[int, ...]:
    if isinstance(path, str):
        path = MarkedDyckPath.parse(path)
    path = MarkedDyckPath(path)
    if path.marks():
        raise PreconditionError("a Dyck path has no marked steps")
    e = []
    h = 0
    for s in path:
        if s == E:
            e.append(h)
        else:
            h += 1
    return tuple(e)


# ------------------------------------------------------- marked Dyck paths


def _unimodal_split(e: tuple[int, ...]) -> int:
    """Length ``j`` of the weakly increasing prefix (``j = n`` if all of ``e``)."""
    j = 1
    while j < len(e) and e[j - 1] <= e[j]:
        j += 1
    return j


def _to_marked(e: tuple[int, ...]) -> list[int]:
    n = len(e)
    if n == 0:
        return []
    j = _unimodal_split(e)
    steps: list[int] = []
    up_index: dict[int, int] = {}  # height h -> index of the N step from h to h+1
    h = 0
    for x in e[:j]:
        while h < x:
            up_index[h] = len(steps)
            steps.append(N)
            h += 1
        steps.append(E)
    # each maximal run of equal entries in the descending part marks one N step
    i = j
    while i < n:
        k = i
        while k + 1 < n and e[k + 1] == e[i]:
            k += 1
        steps[up_index[e[i]]] = k - i + 2
        i = k + 1
    steps += [N] * (j - e[j - 1])
    return steps


def _from_marked(steps: Sequence[int]) -> tuple[int, ...]:
    ascending = []
    marked = []
    h = 0
    for s in steps:
        if s == E:
            ascending.append(h)
        else:
            if s >= 2:
                marked.append((h, s - 1))
            h += 1
    descending = []
    for h, run in sorted(marked, reverse=True):
        descending += [h] * run
    return tuple(ascending + descending)


def varphi(e: Sequence[int]) -> MarkedDyckPath:
    """Bijection from ``(>,<=,-)``-avoiders onto marked Dyck paths with an unmarked tail."""
    e = _require_avoids_triple(e, GT_LE_DASH, "varphi")
    return MarkedDyckPath(_to_marked(e))


def varphi_multi(e: Sequence[int]) -> MultiMarkedDyckPath:
    """Bijection from ``(>,<,-)``-avoiders onto multi-marked Dyck paths with an unmarked tail."""
    e = _require_avoids_triple(e, GT_LT_DASH, "varphi_multi")
    return MultiMarkedDyckPath(_to_marked(e))


def _require_unmarked_tail(path, cls):
    if isinstance(path, str):
        path = cls.parse(path)
    path = cls(path)
    if not path.has_unmarked_tail():
        raise PreconditionError(f"{path} has a marked tail")
    return path


def varphi_inverse(path) -> tuple[int, ...]:
    return _from_marked(_require_unmarked_tail(path, MarkedDyckPath))


def varphi_multi_inverse(path) -> tuple[int, ...]:
    return _from_marked(_require_unmarked_tail(path, MultiMarkedDyckPath))


def _slant(steps: Sequence[int]) -> list[int]:
    # marks become D steps (same integer code); drop the final N run and the E before it
    steps = list(steps)
    while steps and steps[-1] == N:
        steps.pop()
    if not steps or steps[-1] != E:
        raise PreconditionError("path does not end with an east step followed by north steps")
    steps.pop()
    return steps


def _unslant(steps: Sequence[int]) -> list[int]:
    steps = list(steps) + [E]
    x = sum(1 for s in steps if s == E)
    y = sum(1 for s in steps if s != E)
    return steps + [N] * (x - y)


def varphi_prime(e: Sequence[int]) -> PlainSlantedPath:
    """Bijection from ``(>,<=,-)``-avoiders of length ``n >= 1`` onto slanted paths of length ``n-1``."""
    e = _require_avoids_triple(e, GT_LE_DASH, "varphi_prime")
    if not e:
        raise PreconditionError("varphi_prime needs n >= 1")
    return PlainSlantedPath(_slant(_to_marked(e)))


def varphi_multi_prime(e: Sequence[int]) -> SlantedPath:
    """Bijection from ``(>,<,-)``-avoiders of length ``n >= 1`` onto slanted paths of length ``n-1``."""
    e = _require_avoids_triple(e, GT_LT_DASH, "varphi_multi_prime")
    if not e:
        raise PreconditionError("varphi_multi_prime needs n >= 1")
    return SlantedPath(_slant(_to_marked(e)))


def varphi_prime_inverse(path) -> tuple[int, ...]:
    if isinstance(path, str):
        path = PlainSlantedPath.parse(path)
    path = PlainSlantedPath(path)
    return varphi_inverse(MarkedDyckPath(_unslant(path)))


def varphi_multi_prime_inverse(path) -> tuple[int, ...]:
    if isinstance(path, str):
        path = SlantedPath.parse(path)
    path = SlantedPath(path)
    return varphi_multi_inverse(MultiMarkedDyckPath(_unslant(path)))


def path_dist(path) -> int:
    """Elbows plus marked steps outside elbows; equals ``dist(e)`` for ``path = varphi(e)``."""
    if isinstance(path, str):
        path = MultiMarkedDyckPath.parse(path)
    return MultiMarkedDyckPath(path).dist()
