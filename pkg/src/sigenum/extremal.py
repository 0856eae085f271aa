"""Minimal and maximal signatures.

Minimal signatures correspond one-to-one to the maximal independent sets
of the conflict graph: make every literal of the chosen clauses false and
all the other clauses are forced true. Maximal signatures are NP-hard to
generate (the all-ones vector is the unique maximum exactly when the
formula is satisfiable), so they are only offered as a filter over a full
enumeration, for small inputs.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Optional, Sequence

from .errors import InvariantViolation, ResourceLimitError
from .formula import Cnf, Signature, complete, evaluate_clause, with_tautologies
from .graphs import conflict_graph, enumerate_maximal_independent_sets
from .instrument import WorkMeter
from .sat import SatOracle

DEFAULT_MAX_SIGNATURES = 200_000


def mis_signature(cnf: Cnf, s: Iterable[int]) -> tuple[Signature, dict[int, int]]:
    """Signature forced by falsifying every literal of the clauses in ``s``.

    ``s`` must be a maximal independent set of the conflict graph. Any
    clause left undetermined, or a member clause not coming out false,
    means it was not, and raises :class:`InvariantViolation`.
    """
    a: dict[int, int] = {}
    members = set(s)
    for i in members:
        for lit in cnf.clauses[i]:
            val = 0 if lit > 0 else 1
            if a.setdefault(abs(lit), val) != val:
                raise InvariantViolation(f"clause set {sorted(members)} is not conflict-free")
    bits = []
    for i, clause in enumerate(cnf.clauses):
        val = evaluate_clause(clause, a)
        if val is None:
            raise InvariantViolation(
                f"clause {i} undetermined; {sorted(members)} is not a maximal independent set"
            )
        if (val == 0) != (i in members):
            raise InvariantViolation(f"clause {i} has value {val} against membership")
        bits.append(val)
    return tuple(bits), complete(a, cnf.n)


@with_tautologies
def enumerate_minimal_signatures(
    cnf: Cnf, meter: Optional[WorkMeter] = None
) -> Iterator[tuple[Signature, dict[int, int]]]:
    sub = WorkMeter() if meter is not None else None
    charged = 0
    for s in enumerate_maximal_independent_sets(conflict_graph(cnf), sub):
        sig, witness = mis_signature(cnf, s)
        if meter is not None:
            meter.add(sub.work - charged + cnf.size + cnf.m)
            charged = sub.work
            meter.mark()
        yield sig, witness
    if meter is not None:
        meter.add(sub.work - charged)
        meter.finish()


def is_all_ones_signature(cnf: Cnf, oracle: Optional[SatOracle] = None) -> bool:
    """True iff the all-ones vector is a signature, i.e. ``cnf`` is satisfiable."""
    oracle = oracle or SatOracle("dpll")
    return oracle.solve(cnf) is not None


def maximal_filter(sigs: Iterable[Sequence[int]]) -> list[Signature]:
    """Coordinatewise-maximal elements, scanning by decreasing weight.

    A signature can only be dominated by one of strictly larger weight, so
    comparing against the maxima kept so far is enough.
    """
    ordered = sorted({tuple(s) for s in sigs}, key=lambda s: (-sum(s), s))
    masks: list[int] = []
    kept: list[Signature] = []
    for s in ordered:
        mask = int("".join(map(str, s)) or "0", 2)
        if any(mask & k == mask for k in masks):
            continue
        masks.append(mask)
        kept.append(s)
    return kept


def maximal_signatures_bruteforce(
    cnf: Cnf,
    source: Optional[Callable[[Cnf], Iterable[tuple[Signature, dict]]]] = None,
    max_signatures: int = DEFAULT_MAX_SIGNATURES,
) -> list[Signature]:
    """Maximal signatures of a small formula, via a full enumeration.

    ``source`` is any full enumerator (default: the bounded-dimension one).
    More than ``max_signatures`` signatures raises
    :class:`ResourceLimitError` instead of continuing.
    """
    if source is None:
        from .bounded_dim import enumerate_bounded_dim as source
    collected = []
    for sig, _ in source(cnf):
        collected.append(sig)
        if len(collected) > max_signatures:
            raise ResourceLimitError(
                f"more than {max_signatures} signatures; maximal filter is desk-scale only"
            )
    return maximal_filter(collected)
