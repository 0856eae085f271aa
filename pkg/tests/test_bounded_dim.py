import random

import pytest
from hypothesis import given, settings

from sigenum.bounded_dim import BoundedDimTrace, enumerate_bounded_dim, seed_signatures
from sigenum.errors import ResourceLimitError
from sigenum.formula import Cnf, signature_of
from sigenum.graphs import dual_graph, greedy_maximal_independent_set
from sigenum.instances import WORKED_EXAMPLE_SIGNATURES, random_cnf
from sigenum.oracle import brute_force_signatures
from conftest import cnfs


class TestSeeds:
    def test_worked_example(self, phi):
        s = greedy_maximal_independent_set(dual_graph(phi))
        assert s == [0, 1]
        out = list(seed_signatures(phi, s))
        assert len(out) == 4
        assert {(sig[0], sig[1]) for sig, _ in out} == {(0, 0), (0, 1), (1, 0), (1, 1)}
        for sig, a in out:
            assert a[3] == 1  # the other literal ~x3 of C1 made false
            assert sig in WORKED_EXAMPLE_SIGNATURES
            assert signature_of(phi, a) == sig

    def test_single_clause(self):
        out = list(seed_signatures(Cnf(2, ((1, 2),)), [0]))
        assert [s for s, _ in out] == [(0,), (1,)]
        assert all(a[2] == 0 for _, a in out)

    def test_empty(self):
        assert [s for s, _ in seed_signatures(Cnf(0), [])] == [()]

    def test_rejects_overlap(self, phi):
        with pytest.raises(ValueError):
            list(seed_signatures(phi, [0, 2]))


class TestEnumerate:
    def test_worked_example(self, phi):
        out = list(enumerate_bounded_dim(phi))
        assert len(out) == 6
        assert {s for s, _ in out} == WORKED_EXAMPLE_SIGNATURES

    def test_complementary_units(self):
        assert {s for s, _ in enumerate_bounded_dim(Cnf(1, ((1,), (-1,))))} == {(1, 0), (0, 1)}

    def test_empty(self):
        assert list(enumerate_bounded_dim(Cnf(3))) == [((), {1: 0, 2: 0, 3: 0})]

    def test_with_empty_clause(self):
        cnf = Cnf(3, ((), (1, 2, 3), (-1, -2, -3)))
        assert {s for s, _ in enumerate_bounded_dim(cnf)} == set(brute_force_signatures(cnf))

    def test_seeds_first(self, phi):
        first = [s for s, _ in enumerate_bounded_dim(phi)][:4]
        seeds = [s for s, _ in seed_signatures(phi, [0, 1])]
        assert first == seeds

    def test_resource_guard(self):
        rng = random.Random(0)
        cnf = random_cnf(rng, 30, 12, 3, exact=True)
        with pytest.raises(ResourceLimitError):
            list(enumerate_bounded_dim(cnf, max_core_vars=2))

    def test_random_3cnf_n14(self):
        rng = random.Random(14)
        for _ in range(25):
            cnf = random_cnf(rng, 14, rng.randint(5, 15), 3)
            out = list(enumerate_bounded_dim(cnf))
            sigs = [s for s, _ in out]
            assert len(sigs) == len(set(sigs))
            assert set(sigs) == set(brute_force_signatures(cnf))

    @settings(max_examples=150)
    @given(cnfs(max_vars=7, max_clauses=9, max_dim=4))
    def test_matches_oracle_with_witnesses(self, cnf):
        out = list(enumerate_bounded_dim(cnf))
        sigs = [s for s, _ in out]
        assert len(sigs) == len(set(sigs))
        assert set(sigs) == set(brute_force_signatures(cnf))
        for s, w in out:
            assert signature_of(cnf, w) == s


def test_trace_invariants():
    rng = random.Random(4)
    for _ in range(40):
        cnf = random_cnf(rng, 10, 12, 4)
        trace = BoundedDimTrace()
        list(enumerate_bounded_dim(cnf, trace=trace))
        assert all(r < d for d, r in trace.residual_dims)
        assert all(count == 2 ** k for k, count in trace.seed_batches)
        assert all(n_core <= d * s for d, s, n_core in trace.frames)
