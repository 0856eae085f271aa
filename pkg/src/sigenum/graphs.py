"""Conflict and dual graphs on clauses, plus the independent-set machinery
the enumerators need.

Vertices are 0-based clause indices. Tie-breaking is always
lowest-index-first so every result is reproducible.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .errors import SigenumError
from .formula import Cnf, is_tautology
from .instrument import WorkMeter


class ClauseGraph:
    """Undirected simple graph on ``0..m-1`` with sorted adjacency lists."""

    __slots__ = ("m", "adjacency", "nbr_masks")

    def __init__(self, m: int, edges=()):
        nbrs: list[set[int]] = [set() for _ in range(m)]
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            nbrs[i].add(j)
            nbrs[j].add(i)
        self.m = m
        self.adjacency = tuple(tuple(sorted(s)) for s in nbrs)
        self.nbr_masks = tuple(sum(1 << j for j in s) for s in nbrs)

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(i, j)`` with ``i < j`` in lexicographic order."""
        return [(i, j) for i in range(self.m) for j in self.adjacency[i] if i < j]

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.nbr_masks[i] >> j & 1)

    def is_independent(self, vertices) -> bool:
        mask = sum(1 << v for v in vertices)
        return all(not (self.nbr_masks[v] & mask) for v in vertices)

    def is_maximal_independent(self, vertices) -> bool:
        vs = set(vertices)
        mask = sum(1 << v for v in vs)
        if not self.is_independent(vs):
            return False
        return all(self.nbr_masks[u] & mask for u in range(self.m) if u not in vs)

    def __repr__(self) -> str:
        return f"ClauseGraph(m={self.m}, edges={self.edges()})"


def conflict_graph(cnf: Cnf) -> ClauseGraph:
    """Edge ``(i, j)`` iff some literal of clause ``i`` is complemented in clause ``j``."""
    by_lit: dict[int, list[int]] = {}
    for i, clause in enumerate(cnf.clauses):
        if is_tautology(clause):
            raise SigenumError(f"clause {i} is tautological; normalize the formula first")
        for lit in clause:
            by_lit.setdefault(lit, []).append(i)
    edges = set()
    for lit, owners in by_lit.items():
        if lit < 0:
            continue
        for i in owners:
            for j in by_lit.get(-lit, ()):
                edges.add((min(i, j), max(i, j)))
    return ClauseGraph(cnf.m, sorted(edges))


def dual_graph(cnf: Cnf) -> ClauseGraph:
    """Edge iff the two clauses share a variable, in either polarity."""
    by_var: dict[int, list[int]] = {}
    for i, clause in enumerate(cnf.clauses):
        for v in dict.fromkeys(abs(lit) for lit in clause):
            by_var.setdefault(v, []).append(i)
    edges = set()
    for owners in by_var.values():
        for a in range(len(owners)):
            for b in range(a + 1, len(owners)):
                edges.add((owners[a], owners[b]))
    return ClauseGraph(cnf.m, sorted(edges))


def greedy_maximal_independent_set(g: ClauseGraph) -> list[int]:
    chosen: list[int] = []
    blocked = 0
    for v in range(g.m):
        if not blocked >> v & 1:
            chosen.append(v)
            blocked |= g.nbr_masks[v] | (1 << v)
    return chosen


def greedy_maximal_induced_matching(g: ClauseGraph) -> list[tuple[int, int]]:
    """Scan edges lexicographically, keeping an edge when its endpoints are
    neither covered by nor adjacent to the matching built so far."""
    matching: list[tuple[int, int]] = []
    # covered vertices together with their neighbours
    closed = 0
    for i, j in g.edges():
        if closed >> i & 1 or closed >> j & 1:
            continue
        matching.append((i, j))
        closed |= (1 << i) | (1 << j) | g.nbr_masks[i] | g.nbr_masks[j]
    return matching


def _lex_completion(g: ClauseGraph, base: int, upto: int, meter: Optional[WorkMeter]) -> int:
    """Greedy lowest-index-first extension of ``base`` to a maximal
    independent set of the subgraph induced by vertices ``0..upto``."""
    chosen = base
    for v in range(upto + 1):
        if not (chosen >> v & 1) and not (g.nbr_masks[v] & chosen):
            chosen |= 1 << v
    if meter is not None:
        meter.add(upto + 1)
    return chosen


def enumerate_maximal_independent_sets(
    g: ClauseGraph, meter: Optional[WorkMeter] = None
) -> Iterator[list[int]]:
    """Yield every maximal independent set of ``g`` exactly once.

    Vertices are added one at a time. A node at level ``i`` is a maximal
    independent set ``S`` of the subgraph induced by ``0..i``. When vertex
    ``v = i + 1`` is added, ``S`` has the child ``S + v`` if no neighbour of
    ``v`` is in ``S``; otherwise it keeps ``S`` and may also gain
    ``T = (S - N(v)) + v``, provided ``T`` is maximal at level ``v`` and
    ``S`` is the greedy lexicographic completion of ``T - v``. Every node
    has at least one child, so a leaf is reached within ``m`` levels and the
    work between outputs is ``O(m^2)`` vertex operations.
    """
    m = g.m
    nbr = g.nbr_masks
    if m == 0:
        if meter is not None:
            meter.mark()
        yield []
        if meter is not None:
            meter.finish()
        return
    # stack entries: (level i of S, S as bitmask)
    stack: list[tuple[int, int]] = [(-1, 0)]
    while stack:
        level, s = stack.pop()
        if level == m - 1:
            if meter is not None:
                meter.mark()
            yield [v for v in range(m) if s >> v & 1]
            continue
        v = level + 1
        if meter is not None:
            meter.add(1)
        if not (nbr[v] & s):
            stack.append((v, s | (1 << v)))
            continue
        t = (s & ~nbr[v]) | (1 << v)
        # T must dominate every vertex 0..v-1 outside it
        maximal = True
        for u in range(v):
            if not (t >> u & 1) and not (nbr[u] & t):
                maximal = False
                break
        if meter is not None:
            meter.add(v)
        if maximal and _lex_completion(g, t & ~(1 << v), v - 1, meter) == s:
            stack.append((v, t))
        # pushed last so that S itself is explored first
        stack.append((v, s))
    if meter is not None:
        meter.finish()
