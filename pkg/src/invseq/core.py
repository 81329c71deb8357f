"""Inversion sequences, relation symbols, patterns and occurrence detection.

An inversion sequence of length n is a tuple ``e`` with ``0 <= e[i] <= i`` for
0-based ``i``.  All reported positions are 1-based: position ``i`` refers to
the window ``e_i e_{i+1} e_{i+2}``.

Functions accept any sequence of ints; the :class:`InversionSequence` wrapper
adds validation, parsing and printing on top of a plain tuple.
"""
from __future__ import annotations

import enum
import functools
import itertools
from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "RelationSymbol",
    "RelationPattern",
    "TriplePattern",
    "WordPattern",
    "InversionSequence",
    "ALL_RELATIONS",
    "all_relation_patterns",
    "compare",
    "reduction",
    "relation_holds",
    "occurrence_set",
    "occurrence_mask",
    "avoids",
    "avoids_word",
    "avoids_triple",
    "complement",
    "dist",
    "is_inversion_sequence",
    "parse_sequence",
    "format_sequence",
    "mask_to_positions",
    "positions_to_mask",
]

# Comparison outcome of a pair (a, b): 0 for a<b, 1 for a=b, 2 for a>b.
LESS, EQUAL, GREATER = 0, 1, 2


def compare(a: int, b: int) -> int:
    return (a > b) - (a < b) + 1


class RelationSymbol(enum.Enum):
    LE = "<="
    GE = ">="
    LT = "<"
    GT = ">"
    EQ = "="
    NE = "!="
    DASH = "-"

    @property
    def mask(self) -> int:
        """Bit ``c`` is set iff the relation holds for comparison outcome ``c``."""
        return _MASKS[self]

    @property
    def symbol(self) -> str:
        return _UNICODE[self]

    def holds(self, a: int, b: int) -> bool:
        return bool(_MASKS[self] >> compare(a, b) & 1)

    @classmethod
    def parse(cls, token: str) -> "RelationSymbol":
        token = token.strip()
        try:
            return _TOKENS[token]
        except KeyError:
            raise ValueError(f"unknown relation token {token!r}") from None

    def __str__(self) -> str:
        return self.value


_MASKS = {
    RelationSymbol.LT: 0b001,
    RelationSymbol.EQ: 0b010,
    RelationSymbol.GT: 0b100,
    RelationSymbol.LE: 0b011,
    RelationSymbol.GE: 0b110,
    RelationSymbol.NE: 0b101,
    RelationSymbol.DASH: 0b111,
}
_UNICODE = {
    RelationSymbol.LE: "≤",
    RelationSymbol.GE: "≥",
    RelationSymbol.LT: "<",
    RelationSymbol.GT: ">",
    RelationSymbol.EQ: "=",
    RelationSymbol.NE: "≠",
    RelationSymbol.DASH: "−",
}
_TOKENS = {r.value: r for r in RelationSymbol}
_TOKENS.update({sym: r for r, sym in _UNICODE.items()})
_TOKENS.update({"==": RelationSymbol.EQ, "<>": RelationSymbol.NE, "≦": RelationSymbol.LE, "≧": RelationSymbol.GE})

# The six non-trivial relations, in the order used for listing patterns.
ALL_RELATIONS = (
    RelationSymbol.LE,
    RelationSymbol.GE,
    RelationSymbol.LT,
    RelationSymbol.GT,
    RelationSymbol.EQ,
    RelationSymbol.NE,
)


def relation_holds(r: RelationSymbol, a: int, b: int) -> bool:
    return r.holds(a, b)


def _split_tokens(text: str) -> list[str]:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    return [t for t in text.split(",")]


class RelationPattern(NamedTuple):
    """Consecutive pattern of relations ``(r1, r2)``."""

    r1: RelationSymbol
    r2: RelationSymbol

    @classmethod
    def parse(cls, text: str) -> "RelationPattern":
        tokens = _split_tokens(text)
        if len(tokens) != 2:
            raise ValueError(f"expected two relation tokens, got {text!r}")
        return cls.of(*(RelationSymbol.parse(t) for t in tokens))

    @classmethod
    def of(cls, r1: RelationSymbol, r2: RelationSymbol) -> "RelationPattern":
        if RelationSymbol.DASH in (r1, r2):
            raise ValueError("the trivial relation is not allowed in a consecutive pattern")
        return cls(r1, r2)

    @property
    def table(self) -> int:
        """9-bit table: bit ``3*c1 + c2`` is set iff comparisons (c1, c2) form an occurrence."""
        return _pattern_table(self.r1, self.r2)

    def matches(self, a: int, b: int, c: int) -> bool:
        return self.r1.holds(a, b) and self.r2.holds(b, c)

    def __str__(self) -> str:
        return f"{self.r1.value},{self.r2.value}"

    def pretty(self) -> str:
        return f"({self.r1.symbol},{self.r2.symbol})"


def all_relation_patterns() -> list[RelationPattern]:
    """The 36 consecutive patterns of relations in a fixed order."""
    return [RelationPattern(a, b) for a in ALL_RELATIONS for b in ALL_RELATIONS]


class TriplePattern(NamedTuple):
    """Classical triple of relations ``(r1, r2, r3)`` on indices ``i < j < k``."""

    r1: RelationSymbol
    r2: RelationSymbol
    r3: RelationSymbol

    @classmethod
    def parse(cls, text: str) -> "TriplePattern":
        tokens = _split_tokens(text)
        if len(tokens) != 3:
            raise ValueError(f"expected three relation tokens, got {text!r}")
        return cls(*(RelationSymbol.parse(t) for t in tokens))

    def __str__(self) -> str:
        return f"{self.r1.value},{self.r2.value},{self.r3.value}"

    def pretty(self) -> str:
        return f"({self.r1.symbol},{self.r2.symbol},{self.r3.symbol})"


@functools.lru_cache(maxsize=None)
def _pattern_table(r1: RelationSymbol, r2: RelationSymbol) -> int:
    m1, m2 = r1.mask, r2.mask
    return sum(m2 << 3 * c1 for c1 in range(3) if m1 >> c1 & 1)


def reduction(word: Sequence[int]) -> tuple[int, ...]:
    """Order-isomorphic relabelling of ``word`` onto ``0..k-1``.

    >>> reduction((4, 2, 4))
    (1, 0, 1)
    """
    rank = {v: i for i, v in enumerate(sorted(set(word)))}
    return tuple(rank[v] for v in word)


class WordPattern(tuple):
    """A reduced word, used as a consecutive pattern (``012``, ``100``, ...)."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        letters = tuple(int(x) for x in letters)
        if reduction(letters) != letters:
            raise ValueError(f"{letters} is not a reduced word")
        return super().__new__(cls, letters)

    @classmethod
    def parse(cls, text: str) -> "WordPattern":
        return cls(parse_sequence(text))

    def __str__(self) -> str:
        return format_sequence(self)

    def __repr__(self) -> str:
        return f"WordPattern('{self}')"


def is_inversion_sequence(seq: Sequence[int]) -> bool:
    return all(0 <= x <= i for i, x in enumerate(seq))


def parse_sequence(text: str) -> tuple[int, ...]:
    """Parse ``"002241250"`` or ``"0,1,10"`` into a tuple of ints."""
    text = text.strip()
    if not text:
        return ()
    if "," in text or " " in text:
        parts = text.replace(",", " ").split()
        return tuple(int(p) for p in parts)
    if not text.isdigit():
        raise ValueError(f"cannot parse sequence {text!r}")
    return tuple(int(ch) for ch in text)


def format_sequence(seq: Sequence[int]) -> str:
    if all(0 <= x < 10 for x in seq):
        return "".join(str(x) for x in seq)
    return ",".join(str(x) for x in seq)


class InversionSequence(tuple):
    """Validated inversion sequence; behaves as a tuple of entries."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()):
        entries = tuple(int(x) for x in entries)
        for i, x in enumerate(entries):
            if not 0 <= x <= i:
                raise ValueError(
                    f"entry {x} at position {i + 1} violates 0 <= e_i < i"
                )
        return super().__new__(cls, entries)

    @classmethod
    def parse(cls, text: str) -> "InversionSequence":
        return cls(parse_sequence(text))

    def __str__(self) -> str:
        return format_sequence(self)

    def __repr__(self) -> str:
        return f"InversionSequence('{self}')"


def positions_to_mask(positions: Iterable[int]) -> int:
    mask = 0
    for i in positions:
        mask |= 1 << (i - 1)
    return mask


def mask_to_positions(mask: int) -> frozenset[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def occurrence_set(e: Sequence[int], p: RelationPattern) -> frozenset[int]:
    """1-based positions ``i`` with ``e_i r1 e_{i+1}`` and ``e_{i+1} r2 e_{i+2}``."""
    table = RelationPattern(*p).table
    c = [compare(a, b) for a, b in zip(e, e[1:])]
    return frozenset(i + 1 for i in range(len(c) - 1) if table >> (3 * c[i] + c[i + 1]) & 1)


def occurrence_mask(e: Sequence[int], p: RelationPattern) -> int:
    return positions_to_mask(occurrence_set(e, p))


def avoids(e: Sequence[int], p: RelationPattern) -> bool:
    table = RelationPattern(*p).table
    c = [compare(a, b) for a, b in zip(e, e[1:])]
    return not any(table >> (3 * x + y) & 1 for x, y in zip(c, c[1:]))


def avoids_word(e: Sequence[int], p: Sequence[int]) -> bool:
    """True iff no window of ``e`` of length ``len(p)`` reduces to ``p``."""
    p = tuple(WordPattern(p))
    r = len(p)
    return all(reduction(e[i:i + r]) != p for i in range(len(e) - r + 1))


def avoids_triple(e: Sequence[int], t: TriplePattern) -> bool:
    """Classical avoidance: no ``i < j < k`` with ``e_i r1 e_j``, ``e_j r2 e_k``, ``e_i r3 e_k``."""
    m1, m2, m3 = (r.mask for r in t)
    n = len(e)
    for i in range(n):
        for j in range(i + 1, n):
            if not m1 >> compare(e[i], e[j]) & 1:
                continue
            for k in range(j + 1, n):
                if m2 >> compare(e[j], e[k]) & 1 and m3 >> compare(e[i], e[k]) & 1:
                    return False
    return True


def complement(e: Sequence[int]) -> tuple[int, ...]:
    """``e^C_i = i - 1 - e_i``."""
    return tuple(i - x for i, x in enumerate(e))


def dist(e: Sequence[int]) -> int:
    """Number of distinct entries."""
    return len(set(e))


def length3_words() -> list[tuple[int, ...]]:
    """All 13 reduced words of length 3."""
    return sorted({reduction(w) for w in itertools.product(range(3), repeat=3)})
