"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import timeit

from equilayer import _pykernels, basis
from equilayer.combinatorics import enumerate_partitions

try:
    from equilayer import _kernels
except ImportError:
    _kernels = None


def all_orbits(kern, n, m, l):
    for pi in enumerate_partitions(m, n):
        kern.orbit_coo(pi.rgs, n, l, n >= 2 and pi.num_blocks >= n - 1)


def full_basis(kern, n, k, l):
    saved = basis.kernels
    basis.kernels = kern
    try:
        return len(basis.layer_basis(n, k, l, "an"))
    finally:
        basis.kernels = saved


CASES = [
    ("orbits n=5 m=5", lambda kern: all_orbits(kern, 5, 5, 2)),
    ("orbits n=7 m=6", lambda kern: all_orbits(kern, 7, 6, 3)),
    ("orbits n=8 m=7", lambda kern: all_orbits(kern, 8, 7, 3)),
    ("perm_offsets n=6 order=6", lambda kern: kern.perm_offsets((2, 3, 1, 5, 6, 4), 6)),
    ("layer_basis A_6 k=3 l=3", lambda kern: full_basis(kern, 6, 3, 3)),
]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = [("python", _pykernels)] + ([("cython", _kernels)] if _kernels else [])
    if _kernels is None:
        print("compiled kernels not built; timing the fallback only")
    print(f"{'case':28s}" + "".join(f"{name:>12s}" for name, _ in backends) + ("     speedup" if _kernels else ""))
    for label, fn in CASES:
        times = [min(timeit.repeat(lambda: fn(kern), number=1, repeat=args.repeat)) for _, kern in backends]
        row = f"{label:28s}" + "".join(f"{t:11.4f}s" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
