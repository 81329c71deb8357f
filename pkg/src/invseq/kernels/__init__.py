"""Hot loops behind the enumeration routines.

The compiled extension ``_fast`` is used when it was built; otherwise the
pure-Python ``_pure`` module is selected.  Setting ``INVSEQ_PURE_PYTHON=1``
forces the fallback.  Both expose the same functions:

relation_counts(table, r1mask, n)
    pruned DFS over avoiders of a consecutive pattern of relations
triple_counts(m1, m2, m3, n)
    pruned DFS over avoiders of a classical triple of relations
profile_counts(tables, n)
    occurrence-set distributions for many patterns at once
vincular_count(n, patterns)
    permutations avoiding every given vincular pattern
vincular_contains(perm, letters, adjacency)
    single occurrence test
"""
from __future__ import annotations

import os
from types import ModuleType

from . import _pure

try:
    from . import _fast
except ImportError:  # extension not built
    _fast = None


def load(name: str) -> ModuleType:
    """Return the ``"compiled"`` or ``"pure"`` kernel module."""
    if name == "pure":
        return _pure
    if name == "compiled":
        if _fast is None:
            raise ImportError("compiled kernels are not available; build with `pip install -e .`")
        return _fast
    raise ValueError(f"unknown backend {name!r}")


def available() -> list[str]:
    return ["compiled", "pure"] if _fast is not None else ["pure"]


if os.environ.get("INVSEQ_PURE_PYTHON") == "1" or _fast is None:
    _active = _pure
else:
    _active = _fast

BACKEND: str = _active.BACKEND
relation_counts = _active.relation_counts
triple_counts = _active.triple_counts
profile_counts = _active.profile_counts
vincular_count = _active.vincular_count
vincular_contains = _active.vincular_contains
