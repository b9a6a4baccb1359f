"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--orders 16 32 64]

Prints one row per (kernel, L): best-of-repeat wall time for each backend,
the speedup, and the largest entrywise difference between the two results.
"""

import argparse
import timeit

import numpy as np

from qtfa._backend import get_kernels
from qtfa.phase_space import FiniteLattice
from qtfa.testkit import seeded_random


def cases(L):
    g = seeded_random("signal", 1, L)
    h = seeded_random("signal", 2, L)
    S = seeded_random("operator", 3, (L, L))
    a = b = 2 if L % 2 == 0 else 1
    odd = L if L % 2 else L + 1
    So = seeded_random("operator", 4, (odd, odd))
    lat = FiniteLattice(L, a, b)
    x = seeded_random("coefficient", 5, lat.count)
    y = seeded_random("coefficient", 6, lat.count)
    pts = lat.point_array
    return {
        "frame_operator": lambda k: k.frame_operator(g, h, a, b),
        "operator_periodize": lambda k: k.operator_periodize(S, a, b),
        "modulation_periodize": lambda k: k.modulation_periodize(So, 1, 1, (odd + 1) // 2),
        "twisted_convolution": lambda k: k.twisted_convolution(x, y, pts, L, 0, (L + 1) // 2),
    }


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--orders", type=int, nargs="+", default=[16, 32, 64])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)

    py = get_kernels("python")
    try:
        compiled = get_kernels("compiled")
    except ImportError:
        print("compiled extension not built; run `pip install -e . --no-build-isolation` first")
        return 1

    print(f"{'kernel':22s} {'L':>4s} {'python [ms]':>12s} {'compiled [ms]':>14s} {'speedup':>8s} {'max diff':>9s}")
    for L in args.orders:
        for name, fn in cases(L).items():
            t_py = min(timeit.repeat(lambda: fn(py), number=1, repeat=args.repeat))
            t_c = min(timeit.repeat(lambda: fn(compiled), number=1, repeat=args.repeat))
            diff = float(np.abs(fn(py) - fn(compiled)).max())
            print(f"{name:22s} {L:4d} {1e3 * t_py:12.3f} {1e3 * t_c:14.3f} {t_py / t_c:8.1f} {diff:9.1e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
