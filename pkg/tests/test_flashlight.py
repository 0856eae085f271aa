import random

import pytest
from hypothesis import given, settings

from sigenum.errors import EngineMismatchError
from sigenum.flashlight import enumerate_flashlight, forced_assignment, prefix_feasible
from sigenum.formula import Cnf, signature_of
from sigenum.instances import WORKED_EXAMPLE_SIGNATURES, random_cnf
from sigenum.oracle import brute_force_signatures
from sigenum.sat import SatOracle
from conftest import cnfs


def run_with_calls(cnf, oracle, **kw):
    out, calls = [], []
    for sig, w in enumerate_flashlight(cnf, oracle, **kw):
        out.append((sig, w))
        calls.append(oracle.calls)
    return out, calls, oracle.calls


def call_gaps(calls, final):
    points = [0, *calls]
    return [b - a for a, b in zip(points, points[1:])], final - points[-1]


class TestPrefixFeasible:
    def test_one_zero(self, phi):
        oracle = SatOracle("dpll")
        assert forced_assignment(phi, (1, 0)) == {2: 1}
        assert prefix_feasible(phi, (1, 0), oracle)
        assert oracle.calls == 1

    def test_zero_zero(self, phi):
        assert forced_assignment(phi, (0, 0)) == {1: 0, 3: 1, 2: 1}
        assert prefix_feasible(phi, (0, 0), SatOracle("dpll"))
        assert (0, 0, 1, 1) in WORKED_EXAMPLE_SIGNATURES

    def test_duplicate_clause_incoherent(self):
        oracle = SatOracle("two-sat")
        assert not prefix_feasible(Cnf(1, ((1,), (1,))), (0, 1), oracle)

    def test_contradiction_needs_no_call(self):
        oracle = SatOracle("two-sat")
        assert not prefix_feasible(Cnf(1, ((1,), (-1,))), (0, 0), oracle)
        assert oracle.calls == 0


class TestEnumerate:
    def test_worked_example(self, phi):
        out = list(enumerate_flashlight(phi, SatOracle("dpll"), general=True))
        assert {s for s, _ in out} == WORKED_EXAMPLE_SIGNATURES
        assert len(out) == 6
        assert out[0][0] == (1, 1, 1, 1)  # satisfiable: 1-first order meets all-ones first

    def test_two_cnf(self):
        out = list(enumerate_flashlight(Cnf(2, ((1, 2), (-1, 2))), SatOracle("two-sat")))
        assert {s for s, _ in out} == {(0, 1), (1, 0), (1, 1)}

    def test_empty(self):
        assert list(enumerate_flashlight(Cnf(2), SatOracle("horn"))) == [((), {1: 0, 2: 0})]

    def test_general_needs_flag(self, phi):
        with pytest.raises(EngineMismatchError):
            list(enumerate_flashlight(phi, SatOracle("dpll")))

    def test_engine_class_checked(self, phi):
        with pytest.raises(EngineMismatchError):
            list(enumerate_flashlight(phi, SatOracle("two-sat")))

    def test_tautology_reinserted(self):
        cnf = Cnf(2, ((1,), (2, -2), (-1,)))
        got = {s for s, _ in enumerate_flashlight(cnf, SatOracle("two-sat"))}
        assert got == {(1, 1, 0), (0, 1, 1)}

    @settings(max_examples=150)
    @given(cnfs(max_vars=7, max_clauses=9, max_dim=4))
    def test_matches_oracle(self, cnf):
        out = list(enumerate_flashlight(cnf, SatOracle("dpll"), general=True))
        sigs = [s for s, _ in out]
        assert len(sigs) == len(set(sigs))
        assert set(sigs) == set(brute_force_signatures(cnf))
        for s, w in out:
            assert signature_of(cnf, w) == s


@pytest.mark.parametrize("engine,polarity,dim", [("two-sat", None, 2), ("horn", "horn", 4)])
def test_delay_bound(engine, polarity, dim):
    rng = random.Random(11)
    for _ in range(200):
        cnf = random_cnf(rng, rng.randint(1, 12), rng.randint(1, 14), dim, polarity=polarity)
        out, calls, final = run_with_calls(cnf, SatOracle(engine))
        gaps, tail = call_gaps(calls, final)
        assert max(gaps) <= 2 * cnf.m
        assert tail <= cnf.m
        assert {s for s, _ in out} == set(brute_force_signatures(cnf))
