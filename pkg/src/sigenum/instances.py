"""Named example formulas and seeded random generators."""

from __future__ import annotations

import random
from typing import Optional

from .formula import Cnf


def worked_example() -> Cnf:
    """C1 = x1 | ~x3, C2 = ~x2, C3 = x1 | x2 | x3, C4 = x2 | ~x3."""
    return Cnf(3, ((1, -3), (-2,), (1, 2, 3), (2, -3)))


WORKED_EXAMPLE_SIGNATURES = frozenset(
    {(1, 1, 0, 1), (1, 1, 1, 1), (1, 0, 1, 1), (0, 1, 1, 0), (1, 1, 1, 0), (0, 0, 1, 1)}
)


def _clause(rng: random.Random, n: int, size: int, polarity: Optional[str] = None) -> tuple[int, ...]:
    variables = rng.sample(range(1, n + 1), min(size, n))
    lits = []
    for k, v in enumerate(variables):
        if polarity == "positive":
            sign = 1
        elif polarity == "horn":
            sign = 1 if k == 0 and rng.random() < 0.5 else -1
        else:
            sign = rng.choice((1, -1))
        lits.append(sign * v)
    return tuple(lits)


def random_cnf(
    rng: random.Random,
    n: int,
    m: int,
    d: int,
    *,
    exact: bool = False,
    polarity: Optional[str] = None,
) -> Cnf:
    """Random formula with ``m`` clauses of size ``1..d`` (exactly ``d`` if ``exact``).

    ``polarity`` may be ``"positive"`` (monotone) or ``"horn"``. Clauses never
    repeat a variable, so no clause is tautological.
    """
    clauses = []
    for _ in range(m):
        size = d if exact else rng.randint(1, d)
        clauses.append(_clause(rng, n, size, polarity))
    return Cnf(n, tuple(clauses))


def random_bounded_cooc_cnf(rng: random.Random, n: int, m: int, d: int, omega: int) -> Cnf:
    """Random formula where no variable occurs in more than ``omega`` clauses."""
    load = {v: 0 for v in range(1, n + 1)}
    clauses = []
    for _ in range(m):
        free = [v for v, c in load.items() if c < omega]
        if not free:
            break
        size = rng.randint(1, min(d, len(free)))
        chosen = rng.sample(free, size)
        for v in chosen:
            load[v] += 1
        clauses.append(tuple(v * rng.choice((1, -1)) for v in chosen))
    return Cnf(n, tuple(clauses))
