"""Time the two-coin table kernels against each other.

Usage: python benchmarks/bench_tables.py [--max N] [--repeat K]

Builds the full value table once per repeat for every available backend
and reports the best wall time.  The backends must also agree cell for
cell; a benchmark that silently compared different answers would be
worthless.
"""

import argparse
import time

import numpy as np

from coinslide.core import Variant
from coinslide.tables import available_backends, raw_two_coin_table


def best_time(backend: str, bound: int, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        started = time.perf_counter()
        raw_two_coin_table(bound, Variant.A, backend)
        best = min(best, time.perf_counter() - started)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max", type=int, default=600, dest="bound",
                        help="largest square (default 600)")
    parser.add_argument("--repeat", type=int, default=3,
                        help="repetitions per backend, best is kept (default 3)")
    args = parser.parse_args()

    backends = available_backends()
    print(f"two-coin table, y <= {args.bound}, best of {args.repeat}")
    timings = {name: best_time(name, args.bound, args.repeat) for name in backends}
    reference = None
    for name in backends:
        table = raw_two_coin_table(args.bound, Variant.A, name)
        if reference is None:
            reference = table
        elif not np.array_equal(reference, table):
            raise SystemExit(f"backend {name!r} disagrees with {backends[0]!r}")
    width = max(len(name) for name in backends)
    for name in backends:
        line = f"  {name:<{width}}  {timings[name] * 1000:9.2f} ms"
        if name != backends[0] and timings[backends[0]] > 0:
            line += f"  ({timings[name] / timings[backends[0]]:.1f}x slower than {backends[0]})"
        print(line)


if __name__ == "__main__":
    main()
