"""Time the numba kernels against the pure-numpy fallbacks on tubulene graphs.

    python benchmarks/bench_kernels.py [--sizes 4,8,12] [--repeat 5]

Each kernel is checked for identical output on both paths before timing.
"""

import argparse
import timeit

import numpy as np

from gpindex import _kernels
from gpindex.tubulene import TubuleneSpec, generate


def bench(fn, args, repeat):
    fn(*args)  # compile / warm caches
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="4,8,12,16", help="comma-separated n=h values")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba path unavailable (unset GPINDEX_PURE_NUMPY to compare)")

    print(f"{'graph':<12}{'V':>6}{'E':>6}  {'kernel':<14}{'numba ms':>10}{'numpy ms':>10}{'speedup':>9}")
    for size in (int(s) for s in args.sizes.split(",")):
        spec = TubuleneSpec(size, size)
        g = generate(spec)
        indptr, indices = g.csr
        eu, ev = g.edge_arrays
        dist = _kernels.NUMBA_KERNELS["apsp"](indptr, indices, g.vertex_count)
        keep = np.ones(g.edge_count, dtype=np.bool_)
        keep[::3] = False
        cases = {
            "apsp": (indptr, indices, g.vertex_count),
            "theta_classes": (dist, eu, ev),
            "components": (g.vertex_count, eu, ev, keep),
        }
        for name, kargs in cases.items():
            fast = _kernels.NUMBA_KERNELS[name]
            slow = _kernels.NUMPY_KERNELS[name]
            assert np.array_equal(fast(*kargs), slow(*kargs)), name
            t_fast = bench(fast, kargs, args.repeat) * 1e3
            t_slow = bench(slow, kargs, args.repeat) * 1e3
            label = f"ZT({size},{size})"
            print(f"{label:<12}{g.vertex_count:>6}{g.edge_count:>6}  {name:<14}"
                  f"{t_fast:>10.2f}{t_slow:>10.2f}{t_slow / t_fast:>8.1f}x")


if __name__ == "__main__":
    main()
