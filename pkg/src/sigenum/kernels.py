"""Backend selection for the assignment sweep.

The compiled extension is used when it imported and the problem fits in
64-bit words. Setting ``SIGENUM_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os
from typing import Sequence

import numpy as np

from . import _kernels_py

try:
    if os.environ.get("SIGENUM_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

HAVE_COMPILED = _compiled is not None
BACKEND = "cython" if HAVE_COMPILED else "python"


def sweep_codes(
    pos: Sequence[int],
    neg: Sequence[int],
    var_bits: Sequence[int],
    base: int = 0,
    backend: str | None = None,
):
    """Dispatch to the compiled or Python sweep; returns a sequence of ints."""
    fits = len(pos) <= 64 and max(var_bits, default=0) < 64 and base < 1 << 64
    fits = fits and all(x < 1 << 64 for x in pos) and all(x < 1 << 64 for x in neg)
    use = backend or BACKEND
    if use == "cython":
        if not HAVE_COMPILED:
            raise RuntimeError("compiled kernel not available")
        if fits:
            return _compiled.sweep_codes(
                np.asarray(pos, dtype=np.uint64),
                np.asarray(neg, dtype=np.uint64),
                np.asarray(var_bits, dtype=np.int64),
                base,
            )
    return _kernels_py.sweep_codes(pos, neg, var_bits, base)


def first_occurrences(codes) -> list[tuple[int, int]]:
    """Distinct codes paired with the index of their first occurrence, in order."""
    if isinstance(codes, np.ndarray):
        uniq, idx = np.unique(codes, return_index=True)
        order = np.argsort(idx, kind="stable")
        return [(int(uniq[o]), int(idx[o])) for o in order]
    first: dict[int, int] = {}
    for i, c in enumerate(codes):
        first.setdefault(c, i)
    return list(first.items())
