#!/usr/bin/env python3
"""Time the two eigensolver backends against each other on torus graphs.

The cyclic Jacobi kernel dominates runtime for spectrum work, so this is the
one comparison worth making: compiled scalar loops (numba) versus the
vectorized numpy fallback, on box products of two rings of growing size.

Usage:
    python benchmarks/bench_jacobi.py [--sizes 6x4,12x10,16x15] [--repeats 3]

Without numba installed only the numpy column is reported.
"""

import argparse
import time

from rotmaps import adjacency_from_rotation, cartesian_adjacency, cycle, spectrum
from rotmaps._kernels import available_backends


def torus_adjacency(n, m):
    return cartesian_adjacency(
        adjacency_from_rotation(cycle(n)), adjacency_from_rotation(cycle(m))
    )


def best_time(adj, backend, repeats):
    spectrum(adj, backend=backend)  # warm-up; compiles the kernel on first numba use
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        spectrum(adj, backend=backend)
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="6x4,12x10,16x15",
                        help="comma-separated torus dimensions, e.g. 12x10")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    dims = []
    for token in args.sizes.split(","):
        n, _, m = token.strip().partition("x")
        dims.append((int(n), int(m)))

    backends = available_backends()
    header = f"{'vertices':>8}  " + "  ".join(f"{b:>10}" for b in backends)
    if len(backends) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    for n, m in dims:
        adj = torus_adjacency(n, m)
        timings = {b: best_time(adj, b, args.repeats) for b in backends}
        row = f"{adj.order:>8}  " + "  ".join(f"{timings[b]:>9.4f}s" for b in backends)
        if len(backends) == 2:
            row += f"  {timings['numpy'] / timings['numba']:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
