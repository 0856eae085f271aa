"""Pure-Python assignment sweep with the same contract as the compiled one."""

from __future__ import annotations

from typing import Sequence


def sweep_codes(pos: Sequence[int], neg: Sequence[int], var_bits: Sequence[int], base: int) -> list[int]:
    """Clause-truth codes for every assignment of the swept variables.

    Entry ``t`` assigns ``var_bits[j]`` true iff bit ``k-1-j`` of ``t`` is
    set, on top of ``base`` (so the first swept variable is the most
    significant). Bit ``i`` of a code is the value of clause ``i``.
    """
    k = len(var_bits)
    weights = [1 << var_bits[k - 1 - j] for j in range(k)]
    clauses = list(zip(pos, neg))
    out = []
    for t in range(1 << k):
        a = base
        j = 0
        tt = t
        while tt:
            if tt & 1:
                a |= weights[j]
            tt >>= 1
            j += 1
        code = 0
        bit = 1
        for p, q in clauses:
            if p & a or q & ~a:
                code |= bit
            bit <<= 1
        out.append(code)
    return out
