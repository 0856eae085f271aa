"""Backtracking over signature prefixes with a SAT oracle as the pruning test.

A prefix ``(y_1..y_k)`` is feasible when some assignment falsifies every
clause with ``y_i = 0`` and satisfies every clause with ``y_i = 1``. The
zero clauses fix their literals to false, which may contradict; that case
is decided without asking the oracle.

Every feasible node carries a witness assignment whose full signature
extends the prefix, so one of its two children is known feasible for free.
Each node therefore spends exactly one oracle call, on the other child, and
at most ``2m`` calls separate consecutive outputs.
"""

from __future__ import annotations

from typing import Iterator, Optional, Sequence

from .errors import EngineMismatchError
from .formula import Cnf, PartialAssignment, Signature, complete, with_tautologies
from .sat import SatOracle, classify


def forced_assignment(cnf: Cnf, bits: Sequence[int]) -> Optional[dict[int, int]]:
    """Variables fixed by the zero coordinates of a prefix, or ``None`` on contradiction."""
    forced: dict[int, int] = {}
    for clause, bit in zip(cnf.clauses, bits):
        if bit:
            continue
        for lit in clause:
            val = 0 if lit > 0 else 1
            if forced.setdefault(abs(lit), val) != val:
                return None
    return forced


def _probe(cnf: Cnf, bits: Sequence[int], oracle: SatOracle) -> Optional[dict[int, int]]:
    forced = forced_assignment(cnf, bits)
    if forced is None:
        return None
    ones = Cnf(cnf.n, tuple(c for c, b in zip(cnf.clauses, bits) if b))
    witness = oracle.solve(ones, forced)
    if witness is None:
        return None
    return complete({**forced, **witness}, cnf.n)


def prefix_feasible(cnf: Cnf, bits: Sequence[int], oracle: SatOracle) -> bool:
    """Whether some signature of ``cnf`` starts with ``bits``."""
    return _probe(cnf, bits, oracle) is not None


def check_oracle(cnf: Cnf, oracle: SatOracle, general: bool) -> None:
    if oracle.engine == "dpll":
        if not general and classify(cnf) == "general":
            raise EngineMismatchError(
                "formula is outside the tractable classes; pass general=True to use dpll anyway"
            )
        return
    oracle.check_applicable(cnf)


@with_tautologies
def enumerate_flashlight(
    cnf: Cnf, oracle: SatOracle, general: bool = False
) -> Iterator[tuple[Signature, dict[int, int]]]:
    """Yield ``(signature, witness)`` pairs, child bit 1 explored before 0.

    ``general=True`` allows the dpll engine on arbitrary formulas; output is
    still correct but the delay guarantee no longer holds in polynomial time.
    """
    check_oracle(cnf, oracle, general)
    m = cnf.m
    if m == 0:
        yield (), complete({}, cnf.n)
        return

    def sig_of(w: PartialAssignment) -> Signature:
        return tuple(
            1 if any((w[abs(l)] == 1) == (l > 0) for l in c) else 0 for c in cnf.clauses
        )

    root = _probe(cnf, (), oracle)
    assert root is not None
    # frames: (prefix, witness, full signature of witness, state)
    # state 0: fresh node; 1: first child done, second child pending
    stack: list[list] = [[(), root, sig_of(root), 0, None]]
    while stack:
        frame = stack[-1]
        prefix, witness, wsig, state, other = frame
        k = len(prefix)
        if k == m:
            stack.pop()
            yield wsig, witness
            continue
        known = wsig[k]
        if state == 0:
            if known == 1:
                frame[3] = 1
                frame[4] = None
                stack.append([prefix + (1,), witness, wsig, 0, None])
            else:
                probe = _probe(cnf, prefix + (1,), oracle)
                frame[3] = 1
                frame[4] = "zero"
                if probe is not None:
                    stack.append([prefix + (1,), probe, sig_of(probe), 0, None])
                else:
                    # the 1-child is dead; descend into the known 0-child directly
                    stack[-1] = [prefix + (0,), witness, wsig, 0, None]
            continue
        # state 1: second child
        stack.pop()
        if other == "zero":
            stack.append([prefix + (0,), witness, wsig, 0, None])
        else:
            probe = _probe(cnf, prefix + (0,), oracle)
            if probe is not None:
                stack.append([prefix + (0,), probe, sig_of(probe), 0, None])
