"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--seed 0]

Both backends are run on the same inputs and their outputs compared before
any timing is reported.
"""

import argparse
import sys
import timeit
from itertools import combinations

import numpy as np

from symtower import _kernels
from symtower._kernels import _fallback
from symtower.homology import normalized_chains
from symtower.sset import simplex_quotient


def map_encode_case(rng, n_rows, k, size):
    rows = rng.integers(0, size, size=(n_rows, k), dtype=np.int64)
    table = rng.integers(0, size, size=size, dtype=np.int64)
    flat = np.tile(table, k)
    offsets = np.arange(k, dtype=np.int64) * size
    return rows, flat, offsets, size


def boundary_case(nv, top):
    """Boundary matrix into degree ``top - 1`` of the ``top``-skeleton of a simplex."""
    X = simplex_quotient(list(combinations(range(nv), top + 1)), top + 1, dim=top)
    return np.asarray(normalized_chains(X).diff(top))


def bench(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if _kernels.compiled is None:
        print("compiled kernels unavailable; build with `pip install -e . --no-build-isolation`")
        return 1
    ck = _kernels.compiled
    rng = np.random.default_rng(args.seed)
    rows = []

    for n_rows, k, size in [(10_000, 2, 50), (200_000, 3, 40), (400_000, 4, 25)]:
        case = map_encode_case(rng, n_rows, k, size)
        for sort_rows in (False, True):
            a = ck.map_encode(*case, sort_rows)
            b = _fallback.map_encode(*case, sort_rows)
            assert np.array_equal(a, b)
            tc = bench(lambda: ck.map_encode(*case, sort_rows), args.repeat)
            tp = bench(lambda: _fallback.map_encode(*case, sort_rows), args.repeat)
            rows.append((f"map_encode N={n_rows} k={k} sort={int(sort_rows)}", tc, tp))

    for nv, top in [(7, 2), (9, 3), (10, 3)]:
        M = boundary_case(nv, top)
        a, b = list(ck.smith_diagonal(M)), list(_fallback.smith_diagonal(M))
        assert a == b
        tc = bench(lambda: ck.smith_diagonal(M), args.repeat)
        tp = bench(lambda: _fallback.smith_diagonal(M), max(1, args.repeat // 2))
        rows.append((f"smith_diagonal boundary {M.shape[0]}x{M.shape[1]}", tc, tp))

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  {'compiled':>10}  {'fallback':>10}  {'speedup':>8}")
    for name, tc, tp in rows:
        print(f"{name:<{width}}  {tc * 1e3:9.2f}ms  {tp * 1e3:9.2f}ms  {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
