"""Backend selection and dispatch for the counting kernels.

At import time this module picks the compiled extension ``_kernels`` when
it is available and otherwise falls back to the pure-Python twin
``_pykernels``; ``BACKEND`` records the choice.  Both backends expose the
same four histogram functions with identical semantics, and the test
suite cross-checks them against each other on overlapping ranges.

The unit of work everywhere is one permutation of [n] together with its
whole block of sign vectors; permutations are ranked lexicographically.
``descent_histogram`` can split that rank space across worker processes,
which is deterministic because every chunk boundary is a permutation
rank and histogram addition is associative.
"""

from __future__ import annotations

import multiprocessing
from math import factorial

from . import _pykernels

try:  # pragma: no cover - exercised only when the extension is present
    from . import _kernels  # type: ignore[attr-defined]

    BACKEND = "compiled"
except ImportError:  # pragma: no cover
    _kernels = None  # type: ignore[assignment]
    BACKEND = "pure"

__all__ = [
    "BACKEND",
    "available_backends",
    "descent_histogram",
    "positive_descent_histogram",
]

_FUNCTIONS = {
    "A": "hist_a",
    "B": "hist_b",
    "D": "hist_d",
    "positive": "hist_b_positive",
}


def available_backends() -> tuple[str, ...]:
    """Names of the kernel backends importable in this installation."""
    return ("compiled", "pure") if _kernels is not None else ("pure",)


def _module(backend: str | None):
    if backend is None:
        backend = BACKEND
    if backend == "pure":
        return _pykernels
    if backend == "compiled":
        if _kernels is None:
            raise ValueError("the compiled kernel backend is not available")
        return _kernels
    raise ValueError(f"unknown kernel backend: {backend!r}")


def _chunk(name: str, n: int, lo: int, hi: int, backend: str | None) -> list[int]:
    return list(getattr(_module(backend), name)(n, lo, hi))


def _run(
    name: str, n: int, jobs: int, backend: str | None
) -> tuple[int, ...]:
    total = factorial(n)
    jobs = max(1, min(jobs, total)) if total else 1
    if jobs == 1:
        return tuple(_chunk(name, n, 0, total, backend))
    bounds = [total * i // jobs for i in range(jobs + 1)]
    args = [
        (name, n, bounds[i], bounds[i + 1], backend)
        for i in range(jobs)
        if bounds[i] < bounds[i + 1]
    ]
    with multiprocessing.Pool(processes=jobs) as pool:
        parts = pool.starmap(_chunk, args)
    counts = [0] * (n + 1)
    for part in parts:
        for k, value in enumerate(part):
            counts[k] += value
    return tuple(counts)


def descent_histogram(
    kind: str, n: int, jobs: int = 1, backend: str | None = None
) -> tuple[int, ...]:
    """Histogram of descent counts over the whole group of the given kind.

    ``kind`` is "A" (permutations of [n]), "B" (signed permutations) or
    "D" (even-signed permutations, n >= 2); entry ``k`` of the result is
    the number of group elements with exactly ``k`` descents.

    >>> descent_histogram("A", 3)
    (1, 4, 1, 0)
    >>> descent_histogram("B", 2)
    (1, 6, 1)
    >>> descent_histogram("D", 2)
    (1, 2, 1)
    """
    if kind not in ("A", "B", "D"):
        raise ValueError(f"unknown group kind: {kind!r}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind == "D" and n < 2:
        raise ValueError("type D histograms need n >= 2")
    return _run(_FUNCTIONS[kind], n, jobs, backend)


def positive_descent_histogram(
    n: int, jobs: int = 1, backend: str | None = None
) -> tuple[int, ...]:
    """Histogram of strictly positive descent counts over signed windows.

    Entry ``k`` counts the signed permutations of [n] whose descent set
    contains exactly ``k`` positions >= 1 (the sentinel position 0 is
    ignored).

    >>> positive_descent_histogram(2)
    (4, 4, 0)
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _run(_FUNCTIONS["positive"], n, jobs, backend)
