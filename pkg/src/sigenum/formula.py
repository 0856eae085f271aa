"""CNF data model, DIMACS I/O, clause evaluation and variable restriction.

Literals are DIMACS integers: ``v`` is the positive literal of variable
``v`` and ``-v`` its complement. Clauses are tuples of literals in input
order, duplicates collapsed. A signature is a tuple of 0/1 ints, one per
clause, in clause order.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple, Optional, Union

from .errors import DimacsError, TautologyError, UndeterminedClauseError

Clause = tuple  # tuple[int, ...]
Signature = tuple  # tuple[int, ...]
PartialAssignment = Mapping[int, int]


def _dedupe(lits: Iterable[int]) -> tuple[int, ...]:
    return tuple(dict.fromkeys(lits))


def is_tautology(clause: Iterable[int]) -> bool:
    lits = set(clause)
    return any(-lit in lits for lit in lits)


@dataclass(frozen=True)
class Cnf:
    """A CNF formula over variables ``1..n``.

    Clause order is significant: it fixes the coordinate order of every
    signature. Tautological clauses are allowed in the value itself so that
    :func:`normalize` has something to work on; the graph-based algorithms
    reject them.
    """

    n: int
    clauses: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("variable count must be non-negative")
        clauses = tuple(_dedupe(c) for c in self.clauses)
        for i, clause in enumerate(clauses):
            for lit in clause:
                if lit == 0 or abs(lit) > self.n:
                    raise ValueError(
                        f"literal {lit} in clause {i + 1} outside variables 1..{self.n}"
                    )
        object.__setattr__(self, "clauses", clauses)

    @property
    def m(self) -> int:
        return len(self.clauses)

    @functools.cached_property
    def dim(self) -> int:
        return max((len(c) for c in self.clauses), default=0)

    @functools.cached_property
    def size(self) -> int:
        """Total number of literal occurrences."""
        return sum(len(c) for c in self.clauses)

    @functools.cached_property
    def masks(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Per-clause (positive, negative) variable bitmasks; bit ``v-1`` is variable ``v``."""
        pos, neg = [], []
        for clause in self.clauses:
            p = q = 0
            for lit in clause:
                if lit > 0:
                    p |= 1 << (lit - 1)
                else:
                    q |= 1 << (-lit - 1)
            pos.append(p)
            neg.append(q)
        return tuple(pos), tuple(neg)

    def variables(self) -> list[int]:
        """Variables occurring in some clause, ascending."""
        return sorted({abs(lit) for c in self.clauses for lit in c})

    def signature_of_mask(self, assignment: int) -> Signature:
        """Signature of the total assignment encoded as a bitmask (bit ``v-1`` true)."""
        pos, neg = self.masks
        return tuple(1 if (p & assignment) or (q & ~assignment) else 0 for p, q in zip(pos, neg))

    def __str__(self) -> str:
        return to_dimacs(self)


# ---------------------------------------------------------------------------
# DIMACS


def parse_dimacs(text: Union[str, bytes], *, allow_tautologies: bool = False) -> Cnf:
    """Parse DIMACS CNF text.

    Tautological clauses raise :class:`TautologyError` unless
    ``allow_tautologies`` is set; pass the result to :func:`normalize` then.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    header: Optional[tuple[int, int]] = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if header is not None:
                raise DimacsError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"line {lineno}: malformed header {line!r}")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed header {line!r}") from None
            if n < 0 or m < 0:
                raise DimacsError(f"line {lineno}: negative counts in header")
            header = (n, m)
            continue
        if header is None:
            raise DimacsError(f"line {lineno}: clause data before 'p cnf' header")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(f"line {lineno}: bad token {tok!r}") from None
            if lit == 0:
                clauses.append(_dedupe(current))
                current = []
            elif abs(lit) > header[0]:
                raise DimacsError(
                    f"line {lineno}: variable {abs(lit)} out of range 1..{header[0]}"
                )
            else:
                current.append(lit)
    if header is None:
        raise DimacsError("missing 'p cnf' header")
    if current:
        clauses.append(_dedupe(current))
    n, m = header
    if len(clauses) != m:
        raise DimacsError(f"header declares {m} clauses, found {len(clauses)}")
    if not allow_tautologies:
        for i, clause in enumerate(clauses, 1):
            if is_tautology(clause):
                raise TautologyError(i)
    return Cnf(n, tuple(clauses))


def to_dimacs(cnf: Cnf) -> str:
    lines = [f"p cnf {cnf.n} {cnf.m}"]
    lines.extend(" ".join([*map(str, c), "0"]) for c in cnf.clauses)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Tautologies


def normalize(cnf: Cnf) -> tuple[Cnf, tuple[int, ...]]:
    """Drop tautological clauses; the mask marks their original positions."""
    mask = tuple(1 if is_tautology(c) else 0 for c in cnf.clauses)
    if not any(mask):
        return cnf, mask
    kept = tuple(c for c, t in zip(cnf.clauses, mask) if not t)
    return Cnf(cnf.n, kept), mask


def reinsert_constant_ones(sig: Signature, mask: tuple[int, ...]) -> Signature:
    """Expand a signature of the normalized formula back to original coordinates."""
    if not any(mask):
        return sig
    it = iter(sig)
    return tuple(1 if t else next(it) for t in mask)


def with_tautologies(
    enumerate_fn: Callable[..., Iterator[tuple[Signature, dict]]],
) -> Callable[..., Iterator[tuple[Signature, dict]]]:
    """Wrap an enumerator so it accepts formulas containing tautologies.

    The wrapped function runs on the normalized formula and re-inserts the
    constant-1 coordinates into every emitted signature.
    """

    @functools.wraps(enumerate_fn)
    def wrapper(cnf: Cnf, *args, **kwargs):
        work, mask = normalize(cnf)
        if work is cnf:
            yield from enumerate_fn(cnf, *args, **kwargs)
            return
        for sig, witness in enumerate_fn(work, *args, **kwargs):
            yield reinsert_constant_ones(sig, mask), witness

    return wrapper


# ---------------------------------------------------------------------------
# Evaluation


def evaluate_clause(clause: Iterable[int], a: PartialAssignment) -> Optional[int]:
    """Return 1 if some literal is true, 0 if all are assigned false, else None."""
    undetermined = False
    for lit in clause:
        val = a.get(abs(lit))
        if val is None:
            undetermined = True
        elif (val == 1) == (lit > 0):
            return 1
    return None if undetermined else 0


def signature_of(cnf: Cnf, a: PartialAssignment) -> Signature:
    bits = []
    for i, clause in enumerate(cnf.clauses):
        val = evaluate_clause(clause, a)
        if val is None:
            raise UndeterminedClauseError(i)
        bits.append(val)
    return tuple(bits)


def complete(a: PartialAssignment, n: int, default: int = 0) -> dict[int, int]:
    """Total assignment over ``1..n`` extending ``a``."""
    return {v: a.get(v, default) for v in range(1, n + 1)}


def assignment_to_mask(a: PartialAssignment) -> int:
    mask = 0
    for v, val in a.items():
        if val:
            mask |= 1 << (v - 1)
    return mask


class Restriction(NamedTuple):
    residual: Cnf
    determined: dict[int, int]
    index_map: tuple[int, ...]


def restrict(cnf: Cnf, a: PartialAssignment) -> Restriction:
    """Apply a partial assignment.

    Satisfied clauses are recorded as 1 and fully falsified ones as 0 in
    ``determined``; the other clauses lose their falsified literals and form
    the residual formula. ``index_map[j]`` is the original index of residual
    clause ``j``. The residual keeps the same variable count.
    """
    determined: dict[int, int] = {}
    kept: list[tuple[int, ...]] = []
    index_map: list[int] = []
    for i, clause in enumerate(cnf.clauses):
        rest = []
        sat = False
        for lit in clause:
            val = a.get(abs(lit))
            if val is None:
                rest.append(lit)
            elif (val == 1) == (lit > 0):
                sat = True
                break
        if sat:
            determined[i] = 1
        elif not rest:
            determined[i] = 0
        else:
            kept.append(tuple(rest))
            index_map.append(i)
    return Restriction(Cnf(cnf.n, tuple(kept)), determined, tuple(index_map))


def lift(
    m: int, determined: Mapping[int, int], index_map: tuple[int, ...], residual_sig: Signature
) -> Signature:
    """Merge determined coordinates with a residual signature."""
    bits = [0] * m
    for i, v in determined.items():
        bits[i] = v
    for j, v in zip(index_map, residual_sig):
        bits[j] = v
    return tuple(bits)


# ---------------------------------------------------------------------------
# Statistics


class FormulaStats(NamedTuple):
    dim: int
    cooccurrence: int
    monotone: bool
    horn: bool
    two_cnf: bool


def occurrences(cnf: Cnf) -> dict[int, list[int]]:
    """Variable -> indices of the clauses containing it in either polarity."""
    occ: dict[int, list[int]] = {}
    for i, clause in enumerate(cnf.clauses):
        for v in dict.fromkeys(abs(lit) for lit in clause):
            occ.setdefault(v, []).append(i)
    return occ


def is_monotone(cnf: Cnf) -> bool:
    return all(lit > 0 for c in cnf.clauses for lit in c)


def is_horn(cnf: Cnf) -> bool:
    return all(sum(1 for lit in c if lit > 0) <= 1 for c in cnf.clauses)


def stats(cnf: Cnf) -> FormulaStats:
    occ = occurrences(cnf)
    return FormulaStats(
        dim=cnf.dim,
        cooccurrence=max((len(v) for v in occ.values()), default=0),
        monotone=is_monotone(cnf),
        horn=is_horn(cnf),
        two_cnf=cnf.dim <= 2,
    )


def format_bits(sig: Signature) -> str:
    return "".join("1" if b else "0" for b in sig)
