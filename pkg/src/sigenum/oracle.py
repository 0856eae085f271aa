"""Exhaustive reference results used to check every enumerator.

Nothing here is clever on purpose. The signature sweep evaluates all
``2^n`` assignments (through the compiled kernel when available) and the
extremal and union helpers compare everything with everything.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .errors import ResourceLimitError
from .formula import Cnf, Signature
from .kernels import first_occurrences, sweep_codes
from .unions import SetFamily

DEFAULT_MAX_VARS = 20
DEFAULT_MAX_MEMBERS = 20


def brute_force_signatures(
    cnf: Cnf, max_vars: int = DEFAULT_MAX_VARS, backend: str | None = None
) -> dict[Signature, dict[int, int]]:
    """Every signature with the lexicographically first assignment producing it.

    Assignments run through ``(x1, ..., xn)`` in lexicographic order; the
    result dict preserves that order.
    """
    n = cnf.n
    if n > max_vars:
        raise ResourceLimitError(f"{n} variables exceed the brute-force limit of {max_vars}")
    pos, neg = cnf.masks
    codes = sweep_codes(pos, neg, list(range(n)), 0, backend=backend)
    out: dict[Signature, dict[int, int]] = {}
    for code, t in first_occurrences(codes):
        sig = tuple(code >> i & 1 for i in range(cnf.m))
        out[sig] = {v: t >> (n - v) & 1 for v in range(1, n + 1)}
    return out


def brute_force_extremal(sigs: Iterable[Sequence[int]], direction: str = "minimal") -> set[Signature]:
    """Elements with no strictly smaller (``minimal``) or greater (``maximal``) element."""
    if direction not in ("minimal", "maximal"):
        raise ValueError(f"direction must be 'minimal' or 'maximal', not {direction!r}")
    pool = {tuple(s) for s in sigs}

    def below(a, b):
        return a != b and all(x <= y for x, y in zip(a, b))

    if direction == "minimal":
        return {s for s in pool if not any(below(t, s) for t in pool)}
    return {s for s in pool if not any(below(s, t) for t in pool)}


def brute_force_unions(
    family: SetFamily, include_empty: bool = False, max_members: int = DEFAULT_MAX_MEMBERS
) -> set[frozenset[int]]:
    members = family.members
    if len(members) > max_members:
        raise ResourceLimitError(
            f"{len(members)} members exceed the brute-force limit of {max_members}"
        )
    found: set[frozenset[int]] = set()
    for r in range(1, len(members) + 1):
        for combo in itertools.combinations(members, r):
            mask = 0
            for c in combo:
                mask |= c
            found.add(frozenset(i for i in range(family.ground_size) if mask >> i & 1))
    if include_empty:
        found.add(frozenset())
    return found
