"""Satisfiability oracles that accept a partial fixing of the variables.

Three engines are available. ``two-sat`` uses strongly connected
components of the implication graph, ``horn`` uses linear-time forward
chaining, and ``dpll`` is a plain backtracking solver for everything else.
Each oracle counts the queries it answers (``calls``) and the elementary
steps it performs (``ops``).
"""

from __future__ import annotations

from typing import Optional

from .errors import EngineMismatchError
from .formula import Cnf, PartialAssignment, is_horn, is_monotone, restrict

ENGINES = ("two-sat", "horn", "dpll")
Witness = dict  # dict[int, int]


def classify(cnf: Cnf) -> str:
    """Most specific class, checked in the order monotone, two-cnf, horn."""
    if is_monotone(cnf):
        return "monotone"
    if cnf.dim <= 2:
        return "two-cnf"
    if is_horn(cnf):
        return "horn"
    return "general"


def engine_for(cnf: Cnf) -> str:
    """Cheapest engine that is valid for every sub-formula of ``cnf``."""
    if cnf.dim <= 2:
        return "two-sat"
    if is_horn(cnf):
        return "horn"
    return "dpll"


class SatOracle:
    def __init__(self, engine: str = "dpll"):
        if engine not in ENGINES:
            raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")
        self.engine = engine
        self.calls = 0
        self.ops = 0

    def __repr__(self) -> str:
        return f"SatOracle({self.engine!r}, calls={self.calls})"

    def check_applicable(self, cnf: Cnf) -> None:
        if self.engine == "two-sat" and cnf.dim > 2:
            raise EngineMismatchError(f"two-sat engine given a formula of dimension {cnf.dim}")
        if self.engine == "horn" and not is_horn(cnf):
            raise EngineMismatchError("horn engine given a clause with two positive literals")

    def solve(self, cnf: Cnf, fixed: Optional[PartialAssignment] = None) -> Optional[Witness]:
        """Return a witness over the residual variables, or ``None`` if unsat.

        A clause falsified outright by ``fixed`` makes the query unsat. The
        witness assigns every variable occurring in the residual formula;
        merged with ``fixed`` it satisfies every clause.
        """
        self.calls += 1
        fixed = fixed or {}
        self.ops += cnf.size
        residual, determined, _ = restrict(cnf, fixed)
        if 0 in determined.values():
            return None
        self.check_applicable(residual)
        clauses = residual.clauses
        if self.engine == "two-sat":
            return self._two_sat(clauses)
        if self.engine == "horn":
            return self._horn(clauses)
        return self._dpll(clauses)

    # -- engines ------------------------------------------------------------

    def _two_sat(self, clauses) -> Optional[Witness]:
        variables = sorted({abs(lit) for c in clauses for lit in c})
        index = {v: k for k, v in enumerate(variables)}

        def node(lit: int) -> int:
            return 2 * index[abs(lit)] + (0 if lit > 0 else 1)

        size = 2 * len(variables)
        succ: list[list[int]] = [[] for _ in range(size)]
        for clause in clauses:
            if len(clause) == 1:
                (a,) = clause
                succ[node(-a)].append(node(a))
            else:
                a, b = clause
                succ[node(-a)].append(node(b))
                succ[node(-b)].append(node(a))
        comp = _tarjan(succ)
        self.ops += size + 2 * len(clauses)
        witness = {}
        for v, k in index.items():
            if comp[2 * k] == comp[2 * k + 1]:
                return None
            # Tarjan numbers components in reverse topological order
            witness[v] = 1 if comp[2 * k] < comp[2 * k + 1] else 0
        return witness

    def _horn(self, clauses) -> Optional[Witness]:
        variables = {abs(lit) for c in clauses for lit in c}
        pending = []
        heads = []
        neg_occ: dict[int, list[int]] = {}
        queue = []
        for i, clause in enumerate(clauses):
            head = None
            count = 0
            for lit in clause:
                if lit > 0:
                    head = lit
                else:
                    count += 1
                    neg_occ.setdefault(-lit, []).append(i)
            heads.append(head)
            pending.append(count)
            if count == 0:
                queue.append(i)
        self.ops += sum(len(c) for c in clauses)
        true: set[int] = set()
        while queue:
            i = queue.pop()
            self.ops += 1
            h = heads[i]
            if h is None:
                return None
            if h in true:
                continue
            true.add(h)
            for j in neg_occ.get(h, ()):
                self.ops += 1
                pending[j] -= 1
                if pending[j] == 0:
                    queue.append(j)
        return {v: (1 if v in true else 0) for v in sorted(variables)}

    def _dpll(self, clauses) -> Optional[Witness]:
        variables = sorted({abs(lit) for c in clauses for lit in c})
        result = self._dpll_rec([list(c) for c in clauses], {})
        if result is None:
            return None
        return {v: result.get(v, 0) for v in variables}

    def _dpll_rec(self, clauses: list[list[int]], assignment: dict[int, int]) -> Optional[dict]:
        assignment = dict(assignment)
        while True:
            unit = None
            simplified = []
            for clause in clauses:
                self.ops += len(clause)
                rest = []
                sat = False
                for lit in clause:
                    val = assignment.get(abs(lit))
                    if val is None:
                        rest.append(lit)
                    elif (val == 1) == (lit > 0):
                        sat = True
                        break
                if sat:
                    continue
                if not rest:
                    return None
                if len(rest) == 1 and unit is None:
                    unit = rest[0]
                simplified.append(rest)
            clauses = simplified
            if unit is None:
                break
            assignment[abs(unit)] = 1 if unit > 0 else 0
        if not clauses:
            return assignment
        lit = min(clauses, key=len)[0]
        for val in ((1, 0) if lit > 0 else (0, 1)):
            got = self._dpll_rec(clauses, {**assignment, abs(lit): val})
            if got is not None:
                return got
        return None


def _tarjan(succ: list[list[int]]) -> list[int]:
    """Iterative Tarjan SCC; returns the component number of every node."""
    size = len(succ)
    index = [-1] * size
    low = [0] * size
    comp = [-1] * size
    on_stack = [False] * size
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(size):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            edges = succ[v]
            while pi < len(edges):
                w = edges[pi]
                pi += 1
                if index[w] == -1:
                    work.append((v, pi))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
    return comp


def is_satisfiable(cnf: Cnf, engine: str = "dpll") -> bool:
    return SatOracle(engine).solve(cnf) is not None
