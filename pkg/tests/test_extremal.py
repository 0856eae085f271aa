import random

import pytest
from hypothesis import given, settings

from sigenum.errors import ResourceLimitError
from sigenum.extremal import (
    enumerate_minimal_signatures,
    is_all_ones_signature,
    maximal_filter,
    maximal_signatures_bruteforce,
)
from sigenum.flashlight import enumerate_flashlight
from sigenum.formula import Cnf, signature_of
from sigenum.graphs import conflict_graph, enumerate_maximal_independent_sets
from sigenum.instances import random_cnf
from sigenum.instrument import WorkMeter
from sigenum.oracle import brute_force_extremal, brute_force_signatures
from sigenum.sat import SatOracle
from conftest import cnfs


class TestMinimal:
    def test_worked_example(self, phi):
        got = [s for s, _ in enumerate_minimal_signatures(phi)]
        assert set(got) == {(0, 0, 1, 1), (0, 1, 1, 0), (1, 1, 0, 1)} and len(got) == 3

    def test_complementary(self):
        assert {s for s, _ in enumerate_minimal_signatures(Cnf(1, ((1,), (-1,))))} == {(1, 0), (0, 1)}

    def test_edgeless(self):
        assert [s for s, _ in enumerate_minimal_signatures(Cnf(2, ((1,), (2,))))] == [(0, 0)]

    def test_tautology_coordinate(self):
        cnf = Cnf(2, ((1,), (2, -2), (-1,)))
        assert {s for s, _ in enumerate_minimal_signatures(cnf)} == {(0, 1, 1), (1, 1, 0)}

    @settings(max_examples=200)
    @given(cnfs(max_dim=4))
    def test_matches_oracle(self, cnf):
        out = list(enumerate_minimal_signatures(cnf))
        sigs = {s for s, _ in out}
        full = set(brute_force_signatures(cnf))
        assert sigs == brute_force_extremal(full, "minimal")
        assert len(out) == len(list(enumerate_maximal_independent_sets(conflict_graph(cnf))))
        h = conflict_graph(cnf)
        for s, w in out:
            assert signature_of(cnf, w) == s
            assert h.is_maximal_independent([i for i, b in enumerate(s) if b == 0])
        for s in full:
            assert h.is_independent([i for i, b in enumerate(s) if b == 0])

    def test_delay_instrumented(self):
        rng = random.Random(6)
        for _ in range(30):
            cnf = random_cnf(rng, 10, 14, 3)
            meter = WorkMeter()
            list(enumerate_minimal_signatures(cnf, meter=meter))
            m = cnf.m
            assert meter.max_gap() <= 2 * m * (2 * m + 1) + cnf.size + m


class TestAllOnes:
    def test_worked_example(self, phi):
        assert is_all_ones_signature(phi, SatOracle("dpll"))
        assert signature_of(phi, {1: 1, 2: 0, 3: 0}) == (1, 1, 1, 1)

    def test_contradiction(self):
        assert not is_all_ones_signature(Cnf(1, ((1,), (-1,))), SatOracle("two-sat"))

    def test_empty(self):
        assert is_all_ones_signature(Cnf(0))


class TestMaximal:
    def test_worked_example(self, phi):
        assert maximal_signatures_bruteforce(phi) == [(1, 1, 1, 1)]

    def test_contradiction(self):
        assert set(maximal_signatures_bruteforce(Cnf(1, ((1,), (-1,))))) == {(1, 0), (0, 1)}

    def test_empty(self):
        assert maximal_signatures_bruteforce(Cnf(0)) == [()]

    def test_other_source(self, phi):
        src = lambda c: enumerate_flashlight(c, SatOracle("dpll"), general=True)  # noqa: E731
        assert maximal_signatures_bruteforce(phi, source=src) == [(1, 1, 1, 1)]

    def test_guard(self):
        cnf = Cnf(6, tuple((v,) for v in range(1, 7)))
        with pytest.raises(ResourceLimitError):
            maximal_signatures_bruteforce(cnf, max_signatures=10)

    def test_filter_keeps_incomparable(self):
        assert set(maximal_filter([(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)])) == {(1, 1, 0), (0, 0, 1)}

    @settings(max_examples=200)
    @given(cnfs(max_dim=4))
    def test_matches_oracle(self, cnf):
        full = set(brute_force_signatures(cnf))
        got = maximal_signatures_bruteforce(cnf)
        assert set(got) == brute_force_extremal(full, "maximal")
        if is_all_ones_signature(cnf):
            assert got == [(1,) * cnf.m]
