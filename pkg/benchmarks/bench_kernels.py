"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Times the two hot spots of ``symmetry_group``: the distance-preserving
permutation search on regular simplices (the worst case, every permutation
survives) and the closure check on the resulting permutation groups.
"""
import argparse
import timeit

import numpy as np

from eqcenters import _pykernels
from eqcenters._registration import _candidate_table
from eqcenters.geometry import DEFAULT_TOL, distance_matrix
from eqcenters.harness import random_simplex, regular_simplex

try:
    from eqcenters import _ckernels
except ImportError:
    _ckernels = None


def match_args(V):
    d = np.ascontiguousarray(distance_matrix(V))
    compat, order = _candidate_table(d, d, DEFAULT_TOL)
    return d, d, compat, order, DEFAULT_TOL.abs, DEFAULT_TOL.rel, 0


def best(fn, repeat):
    number = 1
    # grow the loop until one batch takes at least 0.05 s
    while timeit.timeit(fn, number=number) < 0.05:
        number *= 4
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation`")

    cases = [(f"match regular n={n}", match_args(regular_simplex(n))) for n in (4, 5, 6)]
    cases.append(("match random n=6", match_args(random_simplex(6, 0))))
    rows = []
    for label, a in cases:
        np.testing.assert_array_equal(_ckernels.match_permutations(*a), _pykernels.match_permutations(*a))
        rows.append((label, best(lambda: _pykernels.match_permutations(*a), args.repeat),
                     best(lambda: _ckernels.match_permutations(*a), args.repeat)))
    for n in (4, 5, 6):
        perms = _ckernels.match_permutations(*match_args(regular_simplex(n)))
        assert _ckernels.perm_group_closed(perms) and _pykernels.perm_group_closed(perms)
        rows.append((f"closure order {len(perms)}", best(lambda: _pykernels.perm_group_closed(perms), args.repeat),
                     best(lambda: _ckernels.perm_group_closed(perms), args.repeat)))

    print(f"{'kernel':<22}{'python':>12}{'cython':>12}{'speedup':>10}")
    for label, tp, tc in rows:
        print(f"{label:<22}{tp * 1e3:>10.3f}ms{tc * 1e3:>10.3f}ms{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
