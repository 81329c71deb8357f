"""Permutation patterns: classical, consecutive and vincular avoidance, symmetries."""
from __future__ import annotations

import itertools
import re
from typing import Iterable, Iterator, Sequence

from . import kernels, limits
from .bijections import (
    Permutation,
    phi_last_preserving,
    phi_last_preserving_inverse,
    theta,
    theta_inverse,
)
from .errors import PreconditionError

__all__ = [
    "VincularPattern",
    "avoids_vincular",
    "reverse",
    "complement",
    "reverse_complement",
    "inverse",
    "is_involution",
    "permutations",
    "involutions",
    "count_avoiders_classical",
    "count_vincular_avoiders",
    "vincular_avoiders",
    "composite_1243_to_4213",
    "composite_1243_to_4213_inverse",
]

_GROUP = re.compile(r"\(([0-9]+)\)|([0-9])")


class VincularPattern:
    """Permutation pattern whose bracketed letters must be adjacent in an occurrence.

    Written in one-line notation with adjacent blocks in parentheses:
    ``"(124)3"``, ``"2(134)"``, ``"(321)"`` for a consecutive pattern and
    ``"2143"`` for a classical one.  ``adjacency`` holds 1-based positions
    ``i`` such that letters ``i`` and ``i+1`` must sit next to each other.
    """

    __slots__ = ("letters", "adjacency")

    def __init__(self, letters: Sequence[int], adjacency: Iterable[int] = ()):
        letters = tuple(int(v) for v in letters)
        if sorted(letters) != list(range(1, len(letters) + 1)):
            raise ValueError(f"{letters} is not a permutation of 1..{len(letters)}")
        adjacency = frozenset(int(i) for i in adjacency)
        if not adjacency <= set(range(1, len(letters))):
            raise ValueError(f"adjacency {sorted(adjacency)} must lie in 1..{len(letters) - 1}")
        self.letters = letters
        self.adjacency = adjacency

    @classmethod
    def parse(cls, text: str) -> "VincularPattern":
        text = text.replace(" ", "")
        letters: list[int] = []
        adjacency: set[int] = set()
        pos = 0
        while pos < len(text):
            m = _GROUP.match(text, pos)
            if m is None:
                raise ValueError(f"bad vincular pattern {text!r}")
            block = m.group(1) or m.group(2)
            start = len(letters) + 1
            letters += [int(c) for c in block]
            adjacency.update(range(start, start + len(block) - 1))
            pos = m.end()
        return cls(letters, adjacency)

    @classmethod
    def classical(cls, letters) -> "VincularPattern":
        if isinstance(letters, str):
            letters = [int(c) for c in letters]
        return cls(letters)

    @classmethod
    def consecutive(cls, letters) -> "VincularPattern":
        if isinstance(letters, str):
            letters = [int(c) for c in letters]
        return cls(letters, range(1, len(letters)))

    @property
    def adjacency_mask(self) -> int:
        return sum(1 << (i - 1) for i in self.adjacency)

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VincularPattern)
            and self.letters == other.letters
            and self.adjacency == other.adjacency
        )

    def __hash__(self) -> int:
        return hash((self.letters, self.adjacency))

    def __str__(self) -> str:
        out = []
        i = 0
        r = len(self.letters)
        while i < r:
            j = i
            while j + 1 < r and (j + 1) in self.adjacency:
                j += 1
            block = "".join(str(v) for v in self.letters[i : j + 1])
            out.append(f"({block})" if j > i else block)
            i = j + 1
        return "".join(out)

    def __repr__(self) -> str:
        return f"VincularPattern.parse('{self}')"


def _as_pattern(v) -> VincularPattern:
    return v if isinstance(v, VincularPattern) else VincularPattern.parse(str(v))


def avoids_vincular(pi: Sequence[int], v) -> bool:
    v = _as_pattern(v)
    return not kernels.vincular_contains(tuple(pi), v.letters, v.adjacency_mask)


def reverse(pi: Sequence[int]) -> Permutation:
    return Permutation(reversed(tuple(pi)))


def complement(pi: Sequence[int]) -> Permutation:
    n = len(pi)
    return Permutation(n + 1 - x for x in pi)


def reverse_complement(pi: Sequence[int]) -> Permutation:
    return complement(reverse(pi))


def inverse(pi: Sequence[int]) -> Permutation:
    out = [0] * len(pi)
    for i, x in enumerate(pi):
        out[x - 1] = i + 1
    return Permutation(out)


def is_involution(pi: Sequence[int]) -> bool:
    return all(pi[x - 1] == i + 1 for i, x in enumerate(pi))


def permutations(n: int) -> Iterator[Permutation]:
    """All of ``S_n`` in lexicographic order."""
    limits.check(n, limits.PERMUTATION_MAX_N, "permutations")
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation._trusted(p)


def involutions(n: int) -> Iterator[Permutation]:
    """Involutions of length ``n`` in lexicographic order, built from their pairings."""
    limits.check(n, limits.INVOLUTION_MAX_N, "involutions")
    out: list[Permutation] = []
    pi = [0] * n

    def place(i):
        while i < n and pi[i]:
            i += 1
        if i == n:
            out.append(Permutation._trusted(pi))
            return
        pi[i] = i + 1
        place(i + 1)
        for j in range(i + 1, n):
            if not pi[j]:
                pi[i], pi[j] = j + 1, i + 1
                place(i + 1)
                pi[j] = 0
        pi[i] = 0

    place(0)
    out.sort()
    return iter(out)


def count_vincular_avoiders(patterns, n: int) -> int:
    """Number of permutations of length ``n`` avoiding every pattern in ``patterns``."""
    limits.check(n, limits.PERMUTATION_MAX_N, "count_vincular_avoiders")
    if isinstance(patterns, (str, VincularPattern)):
        patterns = [patterns]
    pats = [_as_pattern(v) for v in patterns]
    return kernels.vincular_count(n, [(v.letters, v.adjacency_mask) for v in pats])


def count_avoiders_classical(patterns, n: int) -> int:
    """Number of permutations of length ``n`` avoiding each classical pattern given."""
    if isinstance(patterns, str):
        patterns = [patterns]
    return count_vincular_avoiders([VincularPattern.classical(p) for p in patterns], n)


def vincular_avoiders(patterns, n: int) -> Iterator[Permutation]:
    limits.check(n, limits.PERMUTATION_MAX_N, "vincular_avoiders")
    if isinstance(patterns, (str, VincularPattern)):
        patterns = [patterns]
    pats = [_as_pattern(v) for v in patterns]
    for p in permutations(n):
        if all(avoids_vincular(p, v) for v in pats):
            yield p


def composite_1243_to_4213(pi: Sequence[int]) -> Permutation:
    """Bijection from avoiders of ``(124)3`` onto avoiders of ``(421)3``.

    Reverse-complement turns the avoider into one of ``2(134)``, whose
    inversion sequence avoids ``(>,>=)``; the last-entry preserving map moves
    it to ``(>=,>)``, which decodes to an avoider of ``3(124)``; reversing
    lands in the avoiders of ``(421)3``.
    """
    pi = Permutation(pi)
    if not avoids_vincular(pi, "(124)3"):
        raise PreconditionError(f"{pi} contains the vincular pattern (124)3")
    e = theta(reverse_complement(pi))
    return reverse(theta_inverse(phi_last_preserving_inverse(e)))


def composite_1243_to_4213_inverse(pi: Sequence[int]) -> Permutation:
    pi = Permutation(pi)
    if not avoids_vincular(pi, "(421)3"):
        raise PreconditionError(f"{pi} contains the vincular pattern (421)3")
    e = phi_last_preserving(theta(reverse(pi)))
    return reverse_complement(theta_inverse(e))
