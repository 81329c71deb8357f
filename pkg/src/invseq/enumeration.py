"""Generation, counting and equivalence classification of pattern avoiders."""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import kernels, limits
from .core import (
    RelationPattern,
    TriplePattern,
    all_relation_patterns,
    compare,
    mask_to_positions,
)

__all__ = [
    "AvoiderCount",
    "OccurrenceProfile",
    "EquivalenceReport",
    "LEVELS",
    "enumerate_all",
    "iter_avoiders",
    "iter_avoiders_triple",
    "count_avoiders",
    "count_avoiders_upto",
    "count_avoiders_triple",
    "count_avoiders_triple_upto",
    "occurrence_profile",
    "occurrence_profiles",
    "classify",
    "classify_from_profiles",
    "theorem_partition",
]

LEVELS = ("wilf", "strong", "superstrong")


@dataclass(frozen=True)
class AvoiderCount:
    """Avoider count of one pattern at one length, with refinements.

    ``by_last_entry_r1`` is only filled for consecutive patterns: it counts
    avoiders ending in ``k`` whose last two entries satisfy the first relation.
    """

    pattern: object
    n: int
    total: int
    by_last_entry: dict[int, int]
    by_dist: dict[int, int]
    by_last_entry_r1: dict[int, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        def strmap(m):
            return {str(k): str(v) for k, v in sorted(m.items())}

        return {
            "pattern": str(self.pattern),
            "n": self.n,
            "total": str(self.total),
            "by_last_entry": strmap(self.by_last_entry),
            "by_dist": strmap(self.by_dist),
        }


def _sparse(values: Sequence[int]) -> dict[int, int]:
    return {k: v for k, v in enumerate(values) if v}


def enumerate_all(n: int) -> Iterator[tuple[int, ...]]:
    """All n! inversion sequences of length ``n`` in lexicographic order."""
    limits.check(n, limits.ENUMERATE_MAX_N, "enumerate_all")
    return itertools.product(*(range(i) for i in range(1, n + 1)))


def iter_avoiders(p: RelationPattern, n: int) -> Iterator[tuple[int, ...]]:
    """Avoiders of ``p`` of length ``n`` by pruned extension, in lexicographic order."""
    limits.check(n, limits.PRUNED_MAX_N, "iter_avoiders")
    table = p.table
    if n == 0:
        yield ()
        return
    e = [0] * n

    def extend(L):
        if L == n:
            yield tuple(e)
            return
        for c in range(L + 1):
            if L >= 2 and table >> (3 * compare(e[L - 2], e[L - 1]) + compare(e[L - 1], c)) & 1:
                continue
            e[L] = c
            yield from extend(L + 1)

    yield from extend(1)


def iter_avoiders_triple(t: TriplePattern, n: int) -> Iterator[tuple[int, ...]]:
    """Avoiders of a triple of relations by pruned extension, in lexicographic order."""
    limits.check(n, limits.PRUNED_MAX_N, "iter_avoiders_triple")
    r1, r2, r3 = t
    e: list[int] = []

    def closes_occurrence(c):
        k = len(e)
        for j in range(1, k):
            if not r2.holds(e[j], c):
                continue
            for i in range(j):
                if r1.holds(e[i], e[j]) and r3.holds(e[i], c):
                    return True
        return False

    def extend():
        if len(e) == n:
            yield tuple(e)
            return
        for c in range(len(e) + 1):
            if not closes_occurrence(c):
                e.append(c)
                yield from extend()
                e.pop()

    yield from extend()


def count_avoiders_upto(p: RelationPattern, n: int) -> list[AvoiderCount]:
    """Avoider counts of ``p`` for every length ``0..n`` from one pruned search."""
    limits.check(n, limits.PRUNED_MAX_N, "count_avoiders")
    rows = kernels.relation_counts(p.table, p.r1.mask, n)
    return [
        AvoiderCount(p, L, total, _sparse(last), _sparse(dist), _sparse(last_r1))
        for L, (total, last, last_r1, dist) in enumerate(rows)
    ]


def count_avoiders(p: RelationPattern, n: int) -> AvoiderCount:
    return count_avoiders_upto(p, n)[n]


def count_avoiders_triple_upto(t: TriplePattern, n: int) -> list[AvoiderCount]:
    limits.check(n, limits.PRUNED_MAX_N, "count_avoiders_triple")
    rows = kernels.triple_counts(t.r1.mask, t.r2.mask, t.r3.mask, n)
    return [
        AvoiderCount(t, L, total, _sparse(last), _sparse(dist))
        for L, (total, last, dist) in enumerate(rows)
    ]


def count_avoiders_triple(t: TriplePattern, n: int) -> AvoiderCount:
    return count_avoiders_triple_upto(t, n)[n]


@dataclass(frozen=True)
class OccurrenceProfile:
    """Distribution of occurrence sets; keys are bitmasks (bit ``i-1`` = position ``i``)."""

    pattern: RelationPattern
    n: int
    per_set: dict[int, int]

    @property
    def avoiders(self) -> int:
        return self.per_set.get(0, 0)

    def strong(self) -> dict[int, int]:
        """Marginal by number of occurrences."""
        out: dict[int, int] = defaultdict(int)
        for mask, count in self.per_set.items():
            out[bin(mask).count("1")] += count
        return dict(sorted(out.items()))

    def count(self, positions) -> int:
        mask = 0
        for i in positions:
            mask |= 1 << (i - 1)
        return self.per_set.get(mask, 0)

    def sets(self) -> dict[frozenset[int], int]:
        return {mask_to_positions(m): c for m, c in self.per_set.items()}


def occurrence_profiles(patterns: Sequence[RelationPattern], n: int) -> list[list[OccurrenceProfile]]:
    """``result[L][i]`` is the profile of ``patterns[i]`` at length ``L``, for ``L <= n``."""
    limits.check(n, limits.PROFILE_MAX_N, "occurrence_profile")
    raw = kernels.profile_counts([p.table for p in patterns], n)
    return [
        [OccurrenceProfile(p, L, _sparse(raw[L][i])) for i, p in enumerate(patterns)]
        for L in range(n + 1)
    ]


def occurrence_profile(p: RelationPattern, n: int) -> OccurrenceProfile:
    return occurrence_profiles([p], n)[n][0]


@dataclass(frozen=True)
class EquivalenceReport:
    level: str
    classes: tuple[tuple[RelationPattern, ...], ...]
    n_max: int

    def as_sets(self) -> set[frozenset[RelationPattern]]:
        return {frozenset(c) for c in self.classes}

    def class_of(self, p: RelationPattern) -> tuple[RelationPattern, ...]:
        for c in self.classes:
            if p in c:
                return c
        raise KeyError(p)

    def refines(self, other: "EquivalenceReport") -> bool:
        """True iff every class of ``self`` lies inside a class of ``other``."""
        return all(any(set(c) <= set(d) for d in other.classes) for c in self.classes)

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "n_max": self.n_max,
            "num_classes": len(self.classes),
            "classes": [[str(p) for p in c] for c in self.classes],
        }


def _key(profile: OccurrenceProfile, level: str):
    if level == "wilf":
        return profile.avoiders
    if level == "strong":
        return tuple(profile.strong().items())
    return tuple(sorted(profile.per_set.items()))


def classify_from_profiles(
    level: str, profiles: list[list[OccurrenceProfile]], patterns: Sequence[RelationPattern]
) -> EquivalenceReport:
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}, got {level!r}")
    n_max = len(profiles) - 1
    groups: dict[tuple, list[RelationPattern]] = defaultdict(list)
    for i, p in enumerate(patterns):
        key = tuple(_key(profiles[L][i], level) for L in range(n_max + 1))
        groups[key].append(p)
    order = {p: i for i, p in enumerate(patterns)}
    avoid = {p: profiles[n_max][i].avoiders for i, p in enumerate(patterns)}
    # least avoided first, as in the published listing
    classes = sorted(
        (tuple(g) for g in groups.values()),
        key=lambda c: (avoid[c[0]], order[c[0]]),
    )
    return EquivalenceReport(level, tuple(classes), n_max)


def classify(level: str, n_max: int) -> EquivalenceReport:
    """Partition the 36 patterns by agreement of their data at every ``n <= n_max``."""
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}, got {level!r}")
    patterns = all_relation_patterns()
    return classify_from_profiles(level, occurrence_profiles(patterns, n_max), patterns)


# Multi-pattern groups of the complete equivalence list; everything else is a singleton.
_WILF_GROUPS = (
    (">=,<", "<,>=", "!=,>="),
    (">=,>=", "<,<"),
    (">=,=", "=,>="),
    (">=,>", ">,>="),
    (">,=", "=,>"),
)
_STRONG_GROUPS = (
    (">=,<", "<,>="),
    (">=,>=", "<,<"),
    (">=,=", "=,>="),
    (">=,>", ">,>="),
    (">,=", "=,>"),
)


def theorem_partition(level: str) -> set[frozenset[RelationPattern]]:
    """The expected partition of the 36 patterns at the given level."""
    groups = _WILF_GROUPS if level == "wilf" else _STRONG_GROUPS
    blocks = [frozenset(RelationPattern.parse(s) for s in g) for g in groups]
    covered = set().union(*blocks)
    blocks += [frozenset([p]) for p in all_relation_patterns() if p not in covered]
    return set(blocks)
