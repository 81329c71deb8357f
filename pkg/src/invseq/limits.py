"""Resource guards for exhaustive computations.

Every exhaustive routine has a default ceiling on the length it accepts.  The
environment variable ``INVSEQ_UNSAFE_MAX_N`` raises (or lowers) all ceilings
at once; it is unsafe because the cost of most routines grows like n!.
"""
from __future__ import annotations

import os

from .errors import ResourceLimitError

ENV_OVERRIDE = "INVSEQ_UNSAFE_MAX_N"

# default ceilings
ENUMERATE_MAX_N = 12
PRUNED_MAX_N = 12
PROFILE_MAX_N = 10
PERMUTATION_MAX_N = 9
INVOLUTION_MAX_N = 14


def ceiling(default: int) -> int:
    value = os.environ.get(ENV_OVERRIDE)
    if value is None or value == "":
        return default
    try:
        return int(value)
    except ValueError:
        raise ResourceLimitError(f"{ENV_OVERRIDE} must be an integer, got {value!r}") from None


def check(n: int, default: int, what: str) -> None:
    if n < 0:
        raise ValueError(f"{what}: length must be non-negative, got {n}")
    limit = ceiling(default)
    if n > limit:
        raise ResourceLimitError(
            f"{what}: n={n} exceeds the resource guard ({limit}); "
            f"set {ENV_OVERRIDE} to override"
        )
