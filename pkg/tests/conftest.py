import random

import pytest
from hypothesis import strategies as st

from sigenum.formula import Cnf
from sigenum.instances import worked_example


@pytest.fixture
def phi():
    return worked_example()


@pytest.fixture
def rng():
    return random.Random(20190519)


@st.composite
def cnfs(draw, max_vars=6, max_clauses=8, max_dim=3, polarity=None):
    """Random non-tautological CNFs."""
    n = draw(st.integers(1, max_vars))
    m = draw(st.integers(0, max_clauses))
    clauses = []
    for _ in range(m):
        size = draw(st.integers(0 if polarity is None else 1, min(max_dim, n)))
        variables = draw(st.lists(st.integers(1, n), min_size=size, max_size=size, unique=True))
        if polarity == "positive":
            lits = variables
        elif polarity == "horn":
            head = draw(st.booleans())
            lits = [v if (k == 0 and head) else -v for k, v in enumerate(variables)]
        else:
            lits = [v if draw(st.booleans()) else -v for v in variables]
        clauses.append(tuple(lits))
    return Cnf(n, tuple(clauses))


@st.composite
def assignments(draw, n, partial=True):
    keys = range(1, n + 1)
    out = {}
    for v in keys:
        if partial and draw(st.booleans()):
            continue
        out[v] = draw(st.integers(0, 1))
    return out


# one verdict line per acceptance criterion, repeated in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
