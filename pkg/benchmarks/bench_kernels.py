"""Compare the compiled and pure-Python assignment sweeps.

    python benchmarks/bench_kernels.py [--repeat 3]

Each row sweeps all 2^n assignments of a random 3-CNF with m clauses.
"""

import argparse
import random
import time

from sigenum import _kernels_py, kernels
from sigenum.instances import random_cnf

CASES = [(10, 20), (14, 30), (16, 40), (18, 60)]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if not kernels.HAVE_COMPILED:
        print("compiled kernel not built; only the Python sweep is timed")
    rng = random.Random(args.seed)
    print(f"{'n':>3} {'m':>4} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for n, m in CASES:
        cnf = random_cnf(rng, n, m, 3, exact=True)
        pos, neg = cnf.masks
        bits = list(range(n))
        slow = best_of(lambda: _kernels_py.sweep_codes(pos, neg, bits, 0), args.repeat)
        if kernels.HAVE_COMPILED:
            fast = best_of(lambda: kernels.sweep_codes(pos, neg, bits, 0, backend="cython"), args.repeat)
            assert [int(x) for x in kernels.sweep_codes(pos, neg, bits, 0, backend="cython")] == \
                _kernels_py.sweep_codes(pos, neg, bits, 0)
            print(f"{n:>3} {m:>4} {slow:>10.4f} {fast:>10.4f} {slow / fast:>7.1f}x")
        else:
            print(f"{n:>3} {m:>4} {slow:>10.4f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
