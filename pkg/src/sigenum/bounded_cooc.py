"""Signature enumeration for formulas with bounded clause size and bounded
variable co-occurrence.

A greedy maximal induced matching ``M`` of the conflict graph splits the
clauses into ``W`` (matched clauses and their conflict neighbours) and the
rest ``U``, which is conflict-free. The variables that occur only in ``U``
are monotone. Fixing them so their literals are false leaves a core whose
variables all touch ``W``. Enumeration runs in three phases:

1. signatures of the maximal independent sets of the fixed formula's
   conflict graph;
2. every assignment of the core variables, monotone variables still fixed;
3. for each core assignment, all ways of flipping monotone variables, which
   is a union-closure problem over the ``U`` clauses still false.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import InvariantViolation, ResourceLimitError
from .extremal import mis_signature
from .formula import Cnf, Signature, complete, lift, occurrences, restrict, with_tautologies
from .graphs import (
    ClauseGraph,
    conflict_graph,
    enumerate_maximal_independent_sets,
    greedy_maximal_induced_matching,
)
from .instrument import WorkMeter
from .unions import SetFamily, enumerate_union_masks

DEFAULT_MAX_CORE_VARS = 24


@dataclass(frozen=True)
class CoocDecomposition:
    matching: tuple[tuple[int, int], ...]
    w: tuple[int, ...]
    u: tuple[int, ...]
    # monotone variable -> value that makes its only literal false
    lprime: dict[int, int]
    core_vars: tuple[int, ...]


def decompose(cnf: Cnf, graph: Optional[ClauseGraph] = None) -> CoocDecomposition:
    h = graph if graph is not None else conflict_graph(cnf)
    matching = greedy_maximal_induced_matching(h)
    covered = 0
    for i, j in matching:
        covered |= (1 << i) | (1 << j)
    w_mask = covered
    for v in range(cnf.m):
        if covered >> v & 1:
            w_mask |= h.nbr_masks[v]
    w = tuple(i for i in range(cnf.m) if w_mask >> i & 1)
    u = tuple(i for i in range(cnf.m) if not w_mask >> i & 1)

    if not h.is_independent(u):
        raise InvariantViolation("U is not independent in the conflict graph")

    lprime: dict[int, int] = {}
    core: list[int] = []
    for var, idx in sorted(occurrences(cnf).items()):
        if any(w_mask >> i & 1 for i in idx):
            core.append(var)
            continue
        signs = {lit > 0 for i in idx for lit in cnf.clauses[i] if abs(lit) == var}
        if len(signs) != 1:
            raise InvariantViolation(f"variable {var} occurs only in U but in both polarities")
        lprime[var] = 0 if signs.pop() else 1
    return CoocDecomposition(tuple(matching), w, u, lprime, tuple(core))


@with_tautologies
def enumerate_bounded_cooc(
    cnf: Cnf,
    max_core_vars: int = DEFAULT_MAX_CORE_VARS,
    meter: Optional[WorkMeter] = None,
    decomposition_out: Optional[list] = None,
    phase_counts: Optional[dict] = None,
) -> Iterator[tuple[Signature, dict[int, int]]]:
    """Yield every signature once with a total witness.

    ``decomposition_out``, when given, receives the decomposition used.
    ``phase_counts`` receives the number of new signatures per phase.
    """
    m = cnf.m
    dec = decompose(cnf)
    if decomposition_out is not None:
        decomposition_out.append(dec)
    if meter is not None:
        meter.add(m * m + cnf.size)
    if len(dec.core_vars) > max_core_vars:
        raise ResourceLimitError(
            f"{len(dec.core_vars)} core variables exceed the limit of {max_core_vars}"
        )
    counts = phase_counts if phase_counts is not None else {}
    for p in (1, 2, 3):
        counts.setdefault(p, 0)
    seen: set[Signature] = set()

    def emit(sig, witness, phase):
        seen.add(sig)
        counts[phase] += 1
        if meter is not None:
            meter.mark()
        return sig, complete(witness, cnf.n)

    # phase 1
    fixed, determined, index_map = restrict(cnf, dec.lprime)
    for i, val in determined.items():
        if val != 0:
            raise InvariantViolation(f"fixing monotone variables satisfied clause {i}")
    for s in enumerate_maximal_independent_sets(conflict_graph(fixed)):
        rsig, a = mis_signature(fixed, s)
        sig = lift(m, determined, index_map, rsig)
        if meter is not None:
            meter.add(fixed.size + m)
        if sig not in seen:
            yield emit(sig, {**a, **dec.lprime}, 1)

    # phases 2 and 3 share the sweep over core assignments
    pos, neg = cnf.masks
    base = 0
    for var, val in dec.lprime.items():
        if val:
            base |= 1 << (var - 1)
    u_set = set(dec.u)
    # for each monotone variable, the U clauses its literal occurs in
    occ = occurrences(cnf)
    lp_clauses = {var: occ[var] for var in dec.lprime}
    core_bits = [1 << (v - 1) for v in dec.core_vars]

    def core_sweep():
        for values in itertools.product((0, 1), repeat=len(core_bits)):
            mask = base
            for bit, val in zip(core_bits, values):
                if val:
                    mask |= bit
            yield mask

    def witness_of(mask: int) -> dict[int, int]:
        return {v: mask >> (v - 1) & 1 for v in range(1, cnf.n + 1)}

    def sig_of(mask: int) -> Signature:
        if meter is not None:
            meter.add(cnf.size)
        return tuple(1 if (p & mask) or (q & ~mask) else 0 for p, q in zip(pos, neg))

    for mask in core_sweep():
        sig = sig_of(mask)
        if sig not in seen:
            yield emit(sig, witness_of(mask), 2)

    if not dec.lprime:
        if meter is not None:
            meter.finish()
        return
    for mask in core_sweep():
        sig = sig_of(mask)
        zero_u = [i for i in range(m) if sig[i] == 0 and i in u_set]
        position = {i: k for k, i in enumerate(zero_u)}
        members = []
        owners = []
        for var, clause_ids in lp_clauses.items():
            member = 0
            for i in clause_ids:
                if i in position:
                    member |= 1 << position[i]
            if member:
                members.append(member)
                owners.append((var, member))
        if not members:
            continue
        family = SetFamily(len(zero_u), members)
        sub = WorkMeter()
        charged = 0
        for union in enumerate_union_masks(family, meter=sub):
            if meter is not None:
                meter.add(sub.work - charged + m)
                charged = sub.work
            bits = list(sig)
            flipped = mask
            for k, i in enumerate(zero_u):
                if union >> k & 1:
                    bits[i] = 1
            for var, member in owners:
                if member & ~union == 0:
                    flipped ^= 1 << (var - 1)
            new = tuple(bits)
            if new not in seen:
                yield emit(new, witness_of(flipped), 3)
    if meter is not None:
        meter.finish()
