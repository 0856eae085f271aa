import random

import pytest

from sigenum import _kernels_py, kernels
from sigenum.formula import Cnf
from sigenum.instances import random_cnf
from sigenum.oracle import brute_force_signatures


def definitional_codes(cnf, var_bits, base):
    """Codes computed through Cnf.signature_of_mask, one assignment at a time."""
    k = len(var_bits)
    out = []
    for t in range(1 << k):
        a = base
        for j, bit in enumerate(var_bits):
            if t >> (k - 1 - j) & 1:
                a |= 1 << bit
        sig = cnf.signature_of_mask(a)
        out.append(sum(b << i for i, b in enumerate(sig)))
    return out


@pytest.mark.parametrize("seed", range(20))
def test_python_sweep_matches_definition(seed):
    rng = random.Random(seed)
    cnf = random_cnf(rng, rng.randint(1, 9), rng.randint(0, 12), 4)
    var_bits = rng.sample(range(cnf.n), rng.randint(0, cnf.n))
    base = rng.getrandbits(cnf.n)
    for b in var_bits:
        base &= ~(1 << b)
    pos, neg = cnf.masks
    assert _kernels_py.sweep_codes(pos, neg, var_bits, base) == definitional_codes(cnf, var_bits, base)


@pytest.mark.skipif(not kernels.HAVE_COMPILED, reason="compiled kernel not built")
@pytest.mark.parametrize("seed", range(20))
def test_compiled_matches_python(seed):
    rng = random.Random(100 + seed)
    n = rng.randint(1, 14)
    cnf = random_cnf(rng, n, rng.randint(0, 64), 5)
    var_bits = rng.sample(range(n), rng.randint(0, n))
    pos, neg = cnf.masks
    fast = kernels.sweep_codes(pos, neg, var_bits, 0, backend="cython")
    slow = kernels.sweep_codes(pos, neg, var_bits, 0, backend="python")
    assert [int(x) for x in fast] == slow


def test_wide_formula_falls_back():
    cnf = Cnf(2, tuple(((1,) if i % 2 else (-2,)) for i in range(70)))
    pos, neg = cnf.masks
    codes = kernels.sweep_codes(pos, neg, [0, 1], 0)
    assert codes == _kernels_py.sweep_codes(pos, neg, [0, 1], 0)
    assert len(brute_force_signatures(cnf)) == 4


def test_first_occurrences_both_paths():
    import numpy as np

    data = [5, 3, 5, 1, 3, 0]
    expected = [(5, 0), (3, 1), (1, 3), (0, 5)]
    assert kernels.first_occurrences(data) == expected
    assert kernels.first_occurrences(np.array(data, dtype=np.uint64)) == expected


@pytest.mark.parametrize("backend", ["python", "cython"])
def test_oracle_same_on_both_backends(backend, phi):
    if backend == "cython" and not kernels.HAVE_COMPILED:
        pytest.skip("compiled kernel not built")
    assert brute_force_signatures(phi, backend=backend) == brute_force_signatures(phi, backend="python")
