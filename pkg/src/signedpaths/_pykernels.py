"""Pure-Python counting kernels for descent histograms.

These are the fallback twins of the compiled kernels in ``_kernels.pyx``
and deliberately use a different algorithm: instead of scanning every sign
vector of every permutation, they run a small dynamic program over sign
choices.  Walking the window left to right, the only facts a comparison
``s_i w_i > s_(i+1) w_(i+1)`` needs are the sign of the previous letter and
the underlying values ``w_i``, ``w_(i+1)``: mixed signs decide the
comparison outright, equal signs reduce it to the unsigned values.  Keeping
one descent-count vector per sign of the last letter (and, for the
even-signed case, per sign parity so far) therefore sweeps all ``2^n``
sign vectors of a permutation in ``O(n^2)`` work.

All histogram functions share the same work-partitioning convention: the
unit of work is one permutation of [n] together with its whole sign block,
permutations being ranked in lexicographic order; ``start``/``stop``
bound that rank.  Results are plain lists of length ``n + 1`` indexed by
descent count.
"""

from __future__ import annotations

import itertools
from math import factorial
from typing import Iterator

__all__ = [
    "perm_range",
    "hist_a",
    "hist_b",
    "hist_b_positive",
    "hist_d",
]


def perm_range(n: int, start: int, stop: int | None) -> Iterator[tuple[int, ...]]:
    """Lexicographic permutations of [n] with ranks in [start, stop)."""
    total = factorial(n)
    stop = total if stop is None else min(stop, total)
    return itertools.islice(
        itertools.permutations(range(1, n + 1)), start, max(stop, start)
    )


def hist_a(n: int, start: int = 0, stop: int | None = None) -> list[int]:
    """Descent histogram of the permutations with ranks in [start, stop)."""
    counts = [0] * (n + 1)
    if n == 0:
        if start == 0 and (stop is None or stop > 0):
            counts[0] = 1
        return counts
    for w in perm_range(n, start, stop):
        counts[sum(1 for i in range(n - 1) if w[i] > w[i + 1])] += 1
    return counts


def _signed_sweep(w: tuple[int, ...], zero_counts: bool) -> tuple[list[int], list[int]]:
    # Sweep all sign vectors of the window values w by the sign DP.  The
    # two returned vectors are descent histograms keyed by the sign of the
    # last letter; ``zero_counts`` decides whether a negative first letter
    # counts as a descent (the type B sentinel at position 0).
    n = len(w)
    pos = [0] * (n + 1)
    neg = [0] * (n + 1)
    pos[0] = 1
    neg[1 if zero_counts else 0] = 1
    last = w[0]
    for i in range(1, n):
        cur = w[i]
        # descent increments by (previous sign, next sign); mixed signs
        # are forced, equal signs compare the unsigned values
        dpp = 1 if last > cur else 0
        dnn = 1 if cur > last else 0
        npos = [0] * (n + 1)
        nneg = [0] * (n + 1)
        for k in range(i + 1):
            cp = pos[k]
            if cp:
                npos[k + dpp] += cp
                nneg[k + 1] += cp  # positive then negative: always a descent
            cn = neg[k]
            if cn:
                npos[k] += cn  # negative then positive: never a descent
                nneg[k + dnn] += cn
        pos, neg = npos, nneg
        last = cur
    return pos, neg


def hist_b(n: int, start: int = 0, stop: int | None = None) -> list[int]:
    """Type B descent histogram over whole sign blocks of permutations."""
    counts = [0] * (n + 1)
    if n == 0:
        if start == 0 and (stop is None or stop > 0):
            counts[0] = 1
        return counts
    for w in perm_range(n, start, stop):
        pos, neg = _signed_sweep(w, zero_counts=True)
        for k in range(n + 1):
            counts[k] += pos[k] + neg[k]
    return counts


def hist_b_positive(n: int, start: int = 0, stop: int | None = None) -> list[int]:
    """Histogram of strictly positive type B descents (sentinel ignored)."""
    counts = [0] * (n + 1)
    if n == 0:
        if start == 0 and (stop is None or stop > 0):
            counts[0] = 1
        return counts
    for w in perm_range(n, start, stop):
        pos, neg = _signed_sweep(w, zero_counts=False)
        for k in range(n + 1):
            counts[k] += pos[k] + neg[k]
    return counts


def hist_d(n: int, start: int = 0, stop: int | None = None) -> list[int]:
    """Type D descent histogram over even-signed sign blocks.

    The first two letters are handled outright (the sentinel compares
    ``-u_2`` with ``u_1``, i.e. contributes exactly when ``u_1 + u_2 < 0``)
    and the DP then tracks the parity of negative signs so only even
    vectors are counted at the end.
    """
    if n < 2:
        raise ValueError("type D histograms need n >= 2")
    counts = [0] * (n + 1)
    for w in perm_range(n, start, stop):
        a, b = w[0], w[1]
        # state[sign of last letter][parity of negatives] -> histogram
        state = [[[0] * (n + 1) for _ in range(2)] for _ in range(2)]
        state[0][0][1 if a > b else 0] += 1  # (+, +)
        state[1][1][1 + (1 if a < b else 0)] += 1  # (+, -)
        state[0][1][1 if b < a else 0] += 1  # (-, +)
        state[1][0][1 + (1 if b > a else 0)] += 1  # (-, -)
        last = b
        for i in range(2, n):
            cur = w[i]
            dpp = 1 if last > cur else 0
            dnn = 1 if cur > last else 0
            nxt = [[[0] * (n + 1) for _ in range(2)] for _ in range(2)]
            for par in range(2):
                for k in range(i + 1):
                    cp = state[0][par][k]
                    if cp:
                        nxt[0][par][k + dpp] += cp
                        nxt[1][par ^ 1][k + 1] += cp
                    cn = state[1][par][k]
                    if cn:
                        nxt[0][par][k] += cn
                        nxt[1][par ^ 1][k + dnn] += cn
            state = nxt
            last = cur
        for sign in range(2):
            for k in range(n + 1):
                counts[k] += state[sign][0][k]
    return counts
