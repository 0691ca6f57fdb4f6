"""Eulerian numbers of types A, B and D, and identities relating them.

The central objects are the descent-count distributions over the three
families of (signed) permutation groups:

* type A: permutations of [n] with adjacent descents,
* type B: signed permutations with the extra sentinel descent at
  position 0 (first window letter negative),
* type D: even-signed permutations with the sentinel comparing -u_2
  against u_1.

Every number is available through two independent routes: closed-form or
summation formulas on one side and brute-force enumeration (backed by the
counting kernels) on the other.  ``verify_identity`` pits the two routes
against each other and returns an exact row-by-row report; a formula is
never checked against itself.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from . import kernels
from .sgnperm import group_order

__all__ = [
    "MAX_BRUTE_ELEMENTS",
    "stirling2",
    "eulerian",
    "eulerian_polynomial",
    "IdentityRow",
    "IdentityReport",
    "IDENTITY_NAMES",
    "verify_identity",
    "ThresholdCounts",
    "threshold_counts",
    "report_to_json",
    "triangle_rows",
]

#: Largest group size the brute-force route will enumerate by default.
MAX_BRUTE_ELEMENTS = 10**8


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind: set partitions of [n] into k blocks.

    >>> [stirling2(4, k) for k in range(5)]
    [0, 1, 7, 6, 1]
    >>> stirling2(0, 0)
    1
    """
    if n < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    if n == 0 or k == 0:
        return 1 if n == k else 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def _eul_a(n: int, k: int) -> int:
    # Type A Eulerian number by the alternating-sum formula, padded with
    # zeros outside the meaningful range so summations can run freely.
    if k < 0 or (n == 0 and k > 0) or (n > 0 and k > n - 1):
        return 0
    return sum(
        (-1) ** j * comb(n + 1, j) * (k + 1 - j) ** n for j in range(k + 1)
    )


def _eul_b(n: int, k: int) -> int:
    # Type B Eulerian number as a positively-weighted sum of type A ones.
    if k < 0 or k > n:
        return 0
    return sum(_eul_a(n, i) * comb(n + 1, 2 * k - i) for i in range(2 * k + 1))


def _eul_d(n: int, k: int) -> int:
    # Type D Eulerian number by the subtraction identity from type B.
    if k < 0 or k > n:
        return 0
    return _eul_b(n, k) - n * 2 ** (n - 1) * _eul_a(n - 1, k - 1)


_FORMULAS = {"A": _eul_a, "B": _eul_b, "D": _eul_d}


# Histograms are deterministic, so the cache key ignores the worker count.
_HISTOGRAMS: dict[tuple[str, int], tuple[int, ...]] = {}


def _brute_histogram(kind: str, n: int, jobs: int = 1) -> tuple[int, ...]:
    key = (kind, n)
    if key not in _HISTOGRAMS:
        if kind == "positive":
            _HISTOGRAMS[key] = kernels.positive_descent_histogram(n, jobs=jobs)
        else:
            _HISTOGRAMS[key] = kernels.descent_histogram(kind, n, jobs=jobs)
    return _HISTOGRAMS[key]


def eulerian(
    n: int,
    k: int,
    kind: str = "A",
    method: str = "formula",
    jobs: int = 1,
    max_elements: int | None = None,
) -> int:
    """Number of kind-X group elements of rank n with exactly k descents.

    The ``formula`` method evaluates the closed summation formulas; the
    ``bruteforce`` method enumerates the group through the counting
    kernels, capped at ``max_elements`` (``MAX_BRUTE_ELEMENTS`` when not
    given) and optionally spread over ``jobs`` workers.  Type D needs
    n >= 2.

    >>> [eulerian(4, k) for k in range(4)]
    [1, 11, 11, 1]
    >>> [eulerian(3, k, kind="B") for k in range(4)]
    [1, 23, 23, 1]
    >>> [eulerian(3, k, kind="D") for k in range(4)]
    [1, 11, 11, 1]
    >>> eulerian(3, 1, kind="B", method="bruteforce")
    23
    """
    if kind not in _FORMULAS:
        raise ValueError(f"unknown group kind: {kind!r}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind == "D" and n < 2:
        raise ValueError("type D Eulerian numbers need n >= 2")
    hi = n - 1 if kind == "A" and n > 0 else n
    if k < 0 or k > max(hi, 0):
        raise ValueError(f"k must lie in 0..{max(hi, 0)} for kind {kind}, n={n}")
    if method == "formula":
        return _FORMULAS[kind](n, k)
    if method == "bruteforce":
        budget = MAX_BRUTE_ELEMENTS if max_elements is None else max_elements
        if group_order(n, kind) > budget:
            raise ValueError(
                f"brute force over {kind}_{n} exceeds the element budget"
            )
        return _brute_histogram(kind, n, jobs)[k]
    raise ValueError(f"unknown method: {method!r}")


def eulerian_polynomial(
    n: int, kind: str = "A", method: str = "formula"
) -> tuple[int, ...]:
    """Coefficient vector (by ascending power of t) of the descent polynomial.

    >>> eulerian_polynomial(3)
    (1, 4, 1)
    >>> eulerian_polynomial(2, kind="B")
    (1, 6, 1)
    """
    if kind not in _FORMULAS:
        raise ValueError(f"unknown group kind: {kind!r}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind == "D" and n < 2:
        raise ValueError("type D Eulerian polynomials need n >= 2")
    hi = n - 1 if kind == "A" and n > 0 else n
    return tuple(eulerian(n, k, kind, method) for k in range(max(hi, 0) + 1))


@dataclass(frozen=True)
class IdentityRow:
    """One exact comparison inside an identity check.

    ``index`` names the row (a descent count or a power of t), ``lhs`` and
    ``rhs`` are the two independently computed sides, and ``brute`` holds a
    third, enumeration-based value when the identity has one.
    """

    index: int
    lhs: int
    rhs: int
    brute: int | None = None

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs and (self.brute is None or self.brute == self.lhs)


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking one identity at one rank n."""

    name: str
    n: int
    rows: tuple[IdentityRow, ...]

    @property
    def holds(self) -> bool:
        return all(row.holds for row in self.rows)


def _poly_mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return tuple(out)


def _spread(p: tuple[int, ...]) -> tuple[int, ...]:
    # p(t) -> p(t^2)
    out = [0] * (2 * len(p) - 1)
    for i, a in enumerate(p):
        out[2 * i] = a
    return tuple(out)


def _pad(p: tuple[int, ...], size: int) -> tuple[int, ...]:
    return p + (0,) * (size - len(p))


def _check_alternating(n: int, jobs: int = 1) -> tuple[IdentityRow, ...]:
    # brute-force type A histogram against the alternating-sum formula
    hist = _brute_histogram("A", n, jobs)
    return tuple(
        IdentityRow(k, hist[k], _eul_a(n, k)) for k in range(max(n, 1))
    )


def _check_eul_b_even(n: int, jobs: int = 1) -> tuple[IdentityRow, ...]:
    # brute-force type B histogram against the even-indexed binomial sum
    hist = _brute_histogram("B", n, jobs)
    return tuple(IdentityRow(k, hist[k], _eul_b(n, k)) for k in range(n + 1))


def _check_eul_b_odd(n: int, jobs: int = 1) -> tuple[IdentityRow, ...]:
    # 2^n Eul_A(n, k) against the odd-indexed binomial sum, with the
    # brute-force count of signed windows having k strictly positive
    # descents as the third, enumerative face of the same statement
    hist = _brute_histogram("positive", n, jobs)
    rows = []
    for k in range(max(n, 1)):
        lhs = 2**n * _eul_a(n, k)
        rhs = sum(
            _eul_a(n, i) * comb(n + 1, 2 * k + 1 - i) for i in range(2 * k + 2)
        )
        rows.append(IdentityRow(k, lhs, rhs, brute=hist[k]))
    return tuple(rows)


def _check_main(n: int, jobs: int = 1) -> tuple[IdentityRow, ...]:
    # (1 + t)^(n+1) S_n(t) = B_n(t^2) + 2^n t S_n(t^2), coefficientwise
    s_n = tuple(_eul_a(n, k) for k in range(max(n, 1)))
    b_n = tuple(_eul_b(n, k) for k in range(n + 1))
    binom = tuple(comb(n + 1, j) for j in range(n + 2))
    lhs = _poly_mul(binom, s_n)
    rhs_b = _spread(b_n)
    rhs_s = (0,) + tuple(2**n * c for c in _spread(s_n))
    size = max(len(lhs), len(rhs_b), len(rhs_s))
    lhs = _pad(lhs, size)
    rhs = tuple(
        a + b for a, b in zip(_pad(rhs_b, size), _pad(rhs_s, size))
    )
    return tuple(IdentityRow(i, lhs[i], rhs[i]) for i in range(size))


def _check_stembridge(n: int, jobs: int = 1) -> tuple[IdentityRow, ...]:
    # brute-force type D histogram against Eul_B - n 2^(n-1) Eul_A
    if n < 2:
        raise ValueError("the type D identity needs n >= 2")
    hist = _brute_histogram("D", n, jobs)
    return tuple(IdentityRow(k, hist[k], _eul_d(n, k)) for k in range(n + 1))


def _closed_form_rows(n: int, kind: str, jobs: int = 1) -> tuple[IdentityRow, ...]:
    if n < 2:
        raise ValueError("the closed forms for k = 1 need n >= 2")
    closed = 3**n - n - 1
    if kind == "D":
        closed -= n * 2 ** (n - 1)
    brute = (
        eulerian(n, 1, kind, "bruteforce", jobs=jobs)
        if group_order(n, kind) <= MAX_BRUTE_ELEMENTS
        else None
    )
    return (IdentityRow(1, _FORMULAS[kind](n, 1), closed, brute=brute),)


_CHECKS = {
    "alternating": _check_alternating,
    "eulBeven": _check_eul_b_even,
    "eulBodd": _check_eul_b_odd,
    "main": _check_main,
    "stembridge": _check_stembridge,
    "B_n1": lambda n, jobs=1: _closed_form_rows(n, "B", jobs),
    "D_n1": lambda n, jobs=1: _closed_form_rows(n, "D", jobs),
}

#: The identity names accepted by :func:`verify_identity`.
IDENTITY_NAMES = tuple(sorted(_CHECKS))


def verify_identity(name: str, n: int, jobs: int = 1) -> IdentityReport:
    """Check one named identity exactly at rank n and report every row.

    Identities whose statement involves a group count pit a brute-force
    enumeration against a formula; the purely formal identity ``main`` is
    checked coefficient by coefficient between two independently built
    polynomials.

    >>> verify_identity("alternating", 4).holds
    True
    >>> report = verify_identity("main", 3)
    >>> (report.holds, len(report.rows))
    (True, 7)
    """
    if name not in _CHECKS:
        raise ValueError(
            f"unknown identity {name!r}; expected one of {', '.join(IDENTITY_NAMES)}"
        )
    if n < 0:
        raise ValueError("n must be nonnegative")
    return IdentityReport(name, n, _CHECKS[name](n, jobs))


@dataclass(frozen=True)
class ThresholdCounts:
    """Counting data for threshold graphs on n labeled vertices.

    ``total`` is the number of labeled threshold graphs; ``by_degree_classes``
    maps i (1-based) to the number of such graphs with exactly i distinct
    vertex degrees; ``by_partition_descents`` maps k to the number whose
    barred-permutation encoding (degree classes written increasingly, the
    class holding the diagonal rotated to the front) has a word with
    exactly k descents; ``unlabeled`` counts isomorphism classes.
    """

    n: int
    total: int
    by_degree_classes: tuple[int, ...]
    by_partition_descents: tuple[int, ...]
    unlabeled: int


def threshold_counts(n: int) -> ThresholdCounts:
    """Exact counting sequences for threshold graphs on [n], via formulas.

    >>> threshold_counts(4).total
    46
    >>> threshold_counts(4).by_degree_classes
    (2, 20, 24, 0)
    >>> threshold_counts(4).by_partition_descents
    (8, 32, 6)
    >>> [threshold_counts(m).total for m in range(1, 7)]
    [1, 2, 8, 46, 332, 2874]
    """
    if n < 1:
        raise ValueError("threshold counts need n >= 1")
    if n == 1:
        by_classes: tuple[int, ...] = (1,)
    else:
        by_classes = tuple(
            2
            * (
                factorial(i) * stirling2(n, i)
                - n * factorial(i - 1) * stirling2(n - 1, i - 1)
            )
            for i in range(1, n + 1)
        )
    by_partition_descents = tuple(
        (k + 1) * _eul_a(n - 1, k) * 2 ** (n - 1 - k)
        for k in range(max(n - 2, 0) + 1)
    )
    total = sum(by_classes)
    if total != sum(by_partition_descents):
        raise AssertionError("internal threshold counts disagree")
    return ThresholdCounts(
        n=n,
        total=total,
        by_degree_classes=by_classes,
        by_partition_descents=by_partition_descents,
        unlabeled=2 ** (n - 1),
    )


def report_to_json(report: IdentityReport) -> str:
    """Serialize an identity report as a JSON document."""
    return json.dumps(
        {
            "identity": report.name,
            "n": report.n,
            "holds": report.holds,
            "rows": [
                {
                    "index": row.index,
                    "lhs": row.lhs,
                    "rhs": row.rhs,
                    **({"brute": row.brute} if row.brute is not None else {}),
                    "holds": row.holds,
                }
                for row in report.rows
            ],
        },
        indent=2,
    )


def triangle_rows(
    kind: str, max_n: int, method: str = "formula"
) -> list[tuple[int, tuple[int, ...]]]:
    """Rows (n, coefficients) of the Eulerian triangle up to max_n."""
    lo = 2 if kind == "D" else 0
    return [
        (n, eulerian_polynomial(n, kind, method)) for n in range(lo, max_n + 1)
    ]
