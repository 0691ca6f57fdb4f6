"""Benchmark the descent-histogram kernels: compiled backend vs pure Python.

Runs each (kind, n) cell with both backends through the public API,
checks that the histograms agree, and reports best-of-``--repeats``
wall-clock times with the speedup factor.

Usage::

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --max-b 7 --repeats 5 --jobs 4
"""

import argparse
import time

from signedpaths.kernels import (
    available_backends,
    descent_histogram,
    positive_descent_histogram,
)


def _time_once(kind, n, jobs, backend):
    start = time.perf_counter()
    if kind == "positive":
        hist = positive_descent_histogram(n, jobs=jobs, backend=backend)
    else:
        hist = descent_histogram(kind, n, jobs=jobs, backend=backend)
    return time.perf_counter() - start, hist


def bench_cell(kind, n, jobs, repeats):
    rows = {}
    for backend in available_backends():
        best, hist = min(
            (_time_once(kind, n, jobs, backend) for _ in range(repeats)),
            key=lambda pair: pair[0],
        )
        rows[backend] = (best, hist)
    histograms = {hist for _, hist in rows.values()}
    if len(histograms) != 1:
        raise SystemExit(f"backend mismatch for {kind} n={n}: {rows}")
    return {backend: best for backend, (best, _) in rows.items()}


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-a", type=int, default=9, metavar="N")
    parser.add_argument("--max-b", type=int, default=8, metavar="N")
    parser.add_argument("--max-d", type=int, default=8, metavar="N")
    parser.add_argument("--max-positive", type=int, default=8, metavar="N")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args(argv)

    backends = available_backends()
    print(f"backends: {', '.join(backends)}   jobs={args.jobs}   "
          f"best of {args.repeats}")
    if "compiled" not in backends:
        print("compiled backend not installed; timing the pure backend only")

    grid = []
    grid += [("A", n) for n in range(6, args.max_a + 1)]
    grid += [("B", n) for n in range(5, args.max_b + 1)]
    grid += [("D", n) for n in range(5, args.max_d + 1)]
    grid += [("positive", n) for n in range(5, args.max_positive + 1)]

    header = f"{'kind':<9}{'n':>3}{'pure [s]':>12}"
    if "compiled" in backends:
        header += f"{'compiled [s]':>14}{'speedup':>9}"
    print(header)
    for kind, n in grid:
        times = bench_cell(kind, n, args.jobs, args.repeats)
        line = f"{kind:<9}{n:>3}{times['pure']:>12.4f}"
        if "compiled" in times:
            ratio = times["pure"] / times["compiled"] if times["compiled"] else float("inf")
            line += f"{times['compiled']:>14.4f}{ratio:>8.1f}x"
        print(line)


if __name__ == "__main__":
    main()
