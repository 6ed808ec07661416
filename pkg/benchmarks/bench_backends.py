#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python (numpy) fallback.

Times the two hot paths on desk-scale workloads: prefractal construction
(digit-expansion interval starts) and grid box counting across a ladder of
box sizes. Outputs are checked identical between backends before timing.

Usage: python benchmarks/bench_backends.py [--repeats N]
"""

import argparse
import time

import numpy as np

from cantordim import available_backends, stage_one_offsets, lacunarity_bounds
from cantordim.estimation import SNAP_ETA

CASES = [
    # (n, dimension, epsilon mode, stage)
    (2, 0.63, None, 20),   # ~1.0e6 intervals
    (4, 0.70, "reg", 10),  # ~1.0e6 intervals
    (10, 0.55, "reg", 6),  # 1.0e6 intervals
    (5, 0.80, "max", 9),   # ~2.0e6 intervals
]


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    backends = available_backends()
    print(f"backends available: {', '.join(sorted(backends))}")
    if len(backends) < 2:
        print("compiled kernels not built; timing the python backend only")

    for n, d, eps_mode, stage in CASES:
        gamma = n ** (-1.0 / d)
        eps = 0.0
        if eps_mode and n >= 4:
            b = lacunarity_bounds(n, gamma)
            eps = b.eps_reg if eps_mode == "reg" else b.eps_max
        offsets = np.asarray(stage_one_offsets(n, gamma, eps))
        count = n**stage
        width = 1.0
        for _ in range(stage):
            width *= gamma
        deltas = [gamma ** (j / 4) for j in range(4, 4 * stage + 1)]

        print(f"\nn={n} D={d} eps={eps_mode or '0'} stage={stage}  "
              f"({count:,} intervals, {len(deltas)} box sizes)")
        built = {}
        for name in sorted(backends):
            kern = backends[name]
            t_build, starts = best_of(
                lambda k=kern: k.prefractal_starts(offsets, gamma, stage), args.repeats
            )
            ends = np.minimum(starts + width, 1.0)
            t_count, total = best_of(
                lambda k=kern, s=starts, e=ends: sum(
                    k.box_count(s, e, dl, SNAP_ETA) for dl in deltas
                ),
                args.repeats,
            )
            built[name] = (t_build, t_count, starts, total)
            print(f"  {name:>8}: construct {t_build*1e3:8.1f} ms   "
                  f"box-count ladder {t_count*1e3:8.1f} ms")
        if len(built) == 2:
            py, cc = built["python"], built["compiled"]
            assert np.array_equal(py[2], cc[2]), "backend outputs differ"
            assert py[3] == cc[3], "backend counts differ"
            print(f"  outputs identical; speedup: construct x{py[0]/cc[0]:.1f}, "
                  f"box count x{py[1]/cc[1]:.1f}")


if __name__ == "__main__":
    main()
