"""Signature enumeration for formulas of bounded clause size.

For dimension ``d >= 3`` the algorithm picks a greedy maximal independent
set ``S`` of the dual graph. Its clauses are variable-disjoint, which gives
``2^|S|`` distinct seed signatures right away. Then every assignment to the
variables of ``S`` is tried in turn. Each one leaves a residual formula of
dimension at most ``d - 1``, which is handled recursively. Dimension 2 goes
to the 2-SAT flashlight and dimension 1 is enumerated directly.

Each frame deduplicates its own output. Outputs from different frames can
coincide, but never within one stream.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .errors import InvariantViolation, ResourceLimitError
from .flashlight import enumerate_flashlight
from .formula import Cnf, Signature, complete, lift, restrict, signature_of, with_tautologies
from .graphs import dual_graph, greedy_maximal_independent_set
from .instrument import WorkMeter
from .sat import SatOracle

DEFAULT_MAX_CORE_VARS = 24


@dataclass
class BoundedDimTrace:
    """Structural facts observed during one run; every entry was also checked."""

    frames: list[tuple[int, int, int]] = field(default_factory=list)  # (dim, |S|, n')
    seed_batches: list[tuple[int, int]] = field(default_factory=list)  # (|S|, distinct seeds)
    residual_dims: list[tuple[int, int]] = field(default_factory=list)  # (frame dim, residual dim)


def seed_signatures(
    cnf: Cnf, s: Sequence[int]
) -> Iterator[tuple[Signature, dict[int, int]]]:
    """The ``2^|S|`` signatures obtained by toggling one literal per clause of ``S``.

    The toggled literal is the first literal of each clause. The other
    literals of ``S``'s clauses are made false and every variable outside
    ``S`` is set to 0.
    """
    seen_vars: set[int] = set()
    for i in s:
        vs = {abs(lit) for lit in cnf.clauses[i]}
        if vs & seen_vars:
            raise ValueError("seed clauses must be pairwise variable-disjoint")
        seen_vars |= vs
    base = {v: 0 for v in cnf.variables()}
    toggles = []
    for i in s:
        clause = cnf.clauses[i]
        if not clause:
            raise ValueError(f"seed clause {i} is empty")
        for lit in clause[1:]:
            base[abs(lit)] = 0 if lit > 0 else 1
        toggles.append(clause[0])
    for values in itertools.product((0, 1), repeat=len(toggles)):
        a = dict(base)
        for lit, t in zip(toggles, values):
            a[abs(lit)] = t if lit > 0 else 1 - t
        yield signature_of(cnf, a), a


def _unit_signatures(cnf: Cnf) -> Iterator[tuple[Signature, dict[int, int]]]:
    variables = list(dict.fromkeys(abs(c[0]) for c in cnf.clauses if c))
    for values in itertools.product((0, 1), repeat=len(variables)):
        a = dict(zip(variables, values))
        yield signature_of(cnf, a), a


def _generate(
    cnf: Cnf,
    max_core_vars: int,
    meter: Optional[WorkMeter],
    trace: Optional[BoundedDimTrace],
) -> Iterator[tuple[Signature, dict[int, int]]]:
    m, d = cnf.m, cnf.dim
    if m == 0:
        yield (), {}
        return
    if any(not c for c in cnf.clauses):
        # empty clauses are constant 0; enumerate the rest
        rest, determined, index_map = restrict(cnf, {})
        for rsig, rw in _generate(rest, max_core_vars, meter, trace):
            yield lift(m, determined, index_map, rsig), rw
        return
    if d <= 1:
        for sig, a in _unit_signatures(cnf):
            if meter is not None:
                meter.add(cnf.size + m)
            yield sig, a
        return
    if d == 2:
        oracle = SatOracle("two-sat")
        spent = 0
        for sig, w in enumerate_flashlight(cnf, oracle):
            if meter is not None:
                meter.add(oracle.ops - spent)
                spent = oracle.ops
            yield sig, w
        if meter is not None:
            meter.add(oracle.ops - spent)
        return

    g = dual_graph(cnf)
    s = greedy_maximal_independent_set(g)
    core = sorted({abs(lit) for i in s for lit in cnf.clauses[i]})
    if meter is not None:
        meter.add(m * m + cnf.size)
    if trace is not None:
        trace.frames.append((d, len(s), len(core)))
    if len(core) > max_core_vars:
        raise ResourceLimitError(
            f"{len(core)} variables in the dual-graph independent set exceed the limit "
            f"of {max_core_vars}"
        )

    seen: set[Signature] = set()
    seeds = 0
    for sig, a in seed_signatures(cnf, s):
        if meter is not None:
            meter.add(cnf.size + m)
        if sig in seen:
            raise InvariantViolation("seed signatures must be pairwise distinct")
        seen.add(sig)
        seeds += 1
        yield sig, a
    if seeds != 1 << len(s):
        raise InvariantViolation(f"expected {1 << len(s)} seed signatures, got {seeds}")
    if trace is not None:
        trace.seed_batches.append((len(s), seeds))

    for values in itertools.product((0, 1), repeat=len(core)):
        x = dict(zip(core, values))
        residual, determined, index_map = restrict(cnf, x)
        if meter is not None:
            meter.add(cnf.size + m)
        if residual.dim >= d:
            raise InvariantViolation(
                f"residual dimension {residual.dim} not below frame dimension {d}"
            )
        if trace is not None:
            trace.residual_dims.append((d, residual.dim))
        for rsig, rw in _generate(residual, max_core_vars, meter, trace):
            sig = lift(m, determined, index_map, rsig)
            if meter is not None:
                meter.add(m)
            if sig in seen:
                continue
            seen.add(sig)
            yield sig, {**rw, **x}


@with_tautologies
def enumerate_bounded_dim(
    cnf: Cnf,
    max_core_vars: int = DEFAULT_MAX_CORE_VARS,
    meter: Optional[WorkMeter] = None,
    trace: Optional[BoundedDimTrace] = None,
) -> Iterator[tuple[Signature, dict[int, int]]]:
    """Yield every signature of ``cnf`` once, with a total witness assignment.

    Raises :class:`ResourceLimitError` when a frame would sweep more than
    ``max_core_vars`` variables.
    """
    for sig, w in _generate(cnf, max_core_vars, meter, trace):
        if meter is not None:
            meter.mark()
        yield sig, complete(w, cnf.n)
    if meter is not None:
        meter.finish()
