"""Lattice paths used as bijective images of unimodal inversion sequences.

Steps are stored as small ints.  In a (multi-)marked Dyck path ``0`` is an
east step ``E=(1,0)``, ``1`` is a plain north step ``N=(0,1)`` and ``t >= 2``
is a marked north step of arity ``t``.  In a slanted path ``t >= 2`` is instead
the step ``D_t = (t-1, t)``.

Text encoding: ``E``, ``N``, ``N*`` (arity 2), ``N*t`` and ``D``/``Dt``.
Subscripts may also be written ``N*_4``, ``D_3`` or with unicode digits.
"""
from __future__ import annotations

import re
from typing import Iterable, Iterator

__all__ = [
    "E",
    "N",
    "MultiMarkedDyckPath",
    "MarkedDyckPath",
    "SlantedPath",
    "PlainSlantedPath",
    "tokenize",
    "marked_dyck_paths",
    "unmarked_tail_paths",
    "slanted_paths",
]

E = 0
N = 1

_SUBSCRIPTS = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")
_TOKEN = re.compile(r"E|N\*_?(\d+)?|N|D_?(\d+)?|\s+|,")


def tokenize(text: str) -> list[tuple[str, int]]:
    """Split a path string into ``(kind, arity)`` pairs with kind in ``E``, ``N``, ``N*``, ``D``."""
    text = text.translate(_SUBSCRIPTS).replace("^*", "*").replace("−", "")
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ValueError(f"bad path token at {text[pos:pos + 6]!r} in {text!r}")
        tok = m.group(0)
        pos = m.end()
        if tok.isspace() or tok == ",":
            continue
        if tok == "E":
            out.append(("E", 0))
        elif tok == "N":
            out.append(("N", 1))
        elif tok.startswith("N*"):
            out.append(("N*", int(m.group(1) or 2)))
        else:
            out.append(("D", int(m.group(2) or 2)))
    return out


def _check_arity(t: int) -> None:
    if t < 2:
        raise ValueError(f"marked step arity must be >= 2, got {t}")


class MultiMarkedDyckPath(tuple):
    """Underdiagonal path from the origin to the diagonal with marked north steps.

    Size is ``#E + sum (t-1) * #N*_t``.
    """

    __slots__ = ()
    max_arity: int | None = None

    def __new__(cls, steps: Iterable[int] = ()):
        steps = tuple(int(s) for s in steps)
        x = y = 0
        for s in steps:
            if s == E:
                x += 1
            else:
                if s != N:
                    _check_arity(s)
                    if cls.max_arity is not None and s > cls.max_arity:
                        raise ValueError(f"{cls.__name__} only allows marks of arity {cls.max_arity}")
                y += 1
                if y > x:
                    raise ValueError("path rises above the diagonal")
        if x != y:
            raise ValueError("path does not end on the diagonal")
        return super().__new__(cls, steps)

    @classmethod
    def parse(cls, text: str):
        steps = []
        for kind, arity in tokenize(text):
            if kind == "D":
                raise ValueError("slanted steps are not allowed in a Dyck path")
            steps.append(E if kind == "E" else arity)
        return cls(steps)

    @property
    def size(self) -> int:
        return sum(1 if s == E else (s - 1 if s >= 2 else 0) for s in self)

    @property
    def semilength(self) -> int:
        return sum(1 for s in self if s == E)

    def marks(self) -> list[int]:
        return [s for s in self if s >= 2]

    def has_unmarked_tail(self) -> bool:
        """True iff the last maximal run of vertical steps has no marked step."""
        for s in reversed(self):
            if s == E:
                return True
            if s >= 2:
                return False
        return True

    def elbows(self) -> int:
        return sum(1 for a, b in zip(self, self[1:]) if a == E and b != E)

    def dist(self) -> int:
        """Elbows plus marked steps that are not part of an elbow."""
        lone = sum(1 for i, s in enumerate(self) if s >= 2 and (i == 0 or self[i - 1] != E))
        return self.elbows() + lone

    def _mark_token(self, t: int) -> str:
        return f"N*{t}"

    def __str__(self) -> str:
        return "".join("E" if s == E else "N" if s == N else self._mark_token(s) for s in self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}('{self}')"


class MarkedDyckPath(MultiMarkedDyckPath):
    """Marked Dyck path: every marked step has arity 2 and is written ``N*``."""

    __slots__ = ()
    max_arity = 2

    def _mark_token(self, t: int) -> str:
        return "N*"


class SlantedPath(tuple):
    """Underdiagonal path from the origin to the line ``x = length`` with ``N``, ``E``, ``D_t``.

    ``D_t = (t-1, t)``.  Stored with the same integer codes as the Dyck paths.
    """

    __slots__ = ()
    max_arity: int | None = None

    def __new__(cls, steps: Iterable[int] = ()):
        steps = tuple(int(s) for s in steps)
        x = y = 0
        for s in steps:
            if s == E:
                x += 1
            elif s == N:
                y += 1
            else:
                _check_arity(s)
                if cls.max_arity is not None and s > cls.max_arity:
                    raise ValueError(f"{cls.__name__} only allows D steps of arity {cls.max_arity}")
                x += s - 1
                y += s
            if y > x:
                raise ValueError("path rises above the diagonal")
        return super().__new__(cls, steps)

    @classmethod
    def parse(cls, text: str):
        steps = []
        for kind, arity in tokenize(text):
            if kind == "N*":
                raise ValueError("marked north steps are not allowed in a slanted path")
            steps.append(E if kind == "E" else N if kind == "N" else arity)
        return cls(steps)

    @property
    def length(self) -> int:
        """Horizontal displacement."""
        return sum(1 if s == E else (s - 1 if s >= 2 else 0) for s in self)

    def endpoint(self) -> tuple[int, int]:
        x = y = 0
        for s in self:
            if s == E:
                x += 1
            elif s == N:
                y += 1
            else:
                x += s - 1
                y += s
        return x, y

    def _d_token(self, t: int) -> str:
        return f"D{t}"

    def __str__(self) -> str:
        return "".join("E" if s == E else "N" if s == N else self._d_token(s) for s in self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}('{self}')"


class PlainSlantedPath(SlantedPath):
    """Slanted path using only ``D = D_2 = (1, 2)``; prints ``D``."""

    __slots__ = ()
    max_arity = 2

    def _d_token(self, t: int) -> str:
        return "D"


def marked_dyck_paths(n: int, max_arity: int | None = 2) -> Iterator[tuple[int, ...]]:
    """All (multi-)marked Dyck paths of size ``n`` as raw step tuples.

    ``max_arity=2`` gives ordinary marked paths, ``None`` allows every arity.
    """
    top = n + 1 if max_arity is None else max_arity
    steps: list[int] = []

    def walk(x, y, size):
        if size == n and x == y:
            yield tuple(steps)
            return
        if size < n:
            steps.append(E)
            yield from walk(x + 1, y, size + 1)
            steps.pop()
        if y < x:
            steps.append(N)
            yield from walk(x, y + 1, size)
            steps.pop()
            for t in range(2, top + 1):
                if size + t - 1 > n:
                    break
                steps.append(t)
                yield from walk(x, y + 1, size + t - 1)
                steps.pop()

    yield from walk(0, 0, 0)


def unmarked_tail_paths(n: int, max_arity: int | None = 2) -> Iterator[tuple[int, ...]]:
    """Paths of :func:`marked_dyck_paths` whose last vertical run is unmarked."""
    for p in marked_dyck_paths(n, max_arity):
        if MultiMarkedDyckPath.has_unmarked_tail(p):
            yield p


def slanted_paths(m: int, max_arity: int | None = 2) -> Iterator[tuple[int, ...]]:
    """All underdiagonal paths from the origin to the line ``x = m`` with ``N``, ``E``, ``D_t``."""
    top = m + 1 if max_arity is None else max_arity
    steps: list[int] = []

    def walk(x, y):
        if x == m:
            yield tuple(steps)
        else:
            steps.append(E)
            yield from walk(x + 1, y)
            steps.pop()
            for t in range(2, top + 1):
                nx, ny = x + t - 1, y + t
                if nx > m:
                    break
                if ny <= nx:
                    steps.append(t)
                    yield from walk(nx, ny)
                    steps.pop()
        if y < x:
            steps.append(N)
            yield from walk(x, y + 1)
            steps.pop()

    yield from walk(0, 0)
