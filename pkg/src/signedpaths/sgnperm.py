"""Permutations and signed permutations with their type A/B/D statistics.

Conventions used throughout the package:

* A *permutation* of ``[n] = {1, ..., n}`` is a tuple ``w`` of length ``n``
  in one-line notation: ``w[i - 1]`` is the image of ``i``.

* A *signed permutation* is stored by its *window* ``u = (u_1, ..., u_n)``:
  a tuple of nonzero integers whose absolute values form a permutation of
  ``[n]``.  The *full notation* is the word of length ``2n``

      -u_n ... -u_1 u_1 ... u_n

  obtained by prepending the reversed, sign-flipped window; it describes
  ``u`` as a permutation of ``{-n, ..., -1, 1, ..., n}`` commuting with
  negation.  The full notation is always derived on demand, never stored.

* An *even-signed* permutation has an even number of negative window
  letters.  The even-signed elements of ``B_n`` form ``D_n``.

* Descent conventions.  Type A scans adjacent positions of the word.
  Type B prepends the sentinel ``u_0 = 0``, so position ``0`` is a descent
  exactly when ``u_1 < 0``.  Type D (``n >= 2``) prepends the sentinel
  ``u_0 = -u_2``.  A second type D convention indexes the extra position
  by ``-1`` with sentinel ``u_{-1} = -u_1``; both are provided because
  only the second interacts simply with mates.

* Inversion sets are value-based: ``(i, j)`` is an inversion when ``i``
  occurs after ``j``.  Type B allows negative ``i`` with
  ``1 <= |i| <= j <= n``; type D discards the pairs ``(-i, i)``.

Group multiplication, reduced words and other word-problem machinery are
out of scope; only statistics and the bijections built on them live here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

__all__ = [
    "MAX_ENUMERATION_N",
    "Permutation",
    "SignedPermutation",
    "InversionSet",
    "Classification",
    "as_permutation",
    "as_window",
    "full_notation",
    "descent_set",
    "descent_set_d_variant",
    "descent_count",
    "positive_descent_count",
    "inversion_set",
    "inversion_count",
    "mate",
    "classify",
    "is_even_signed",
    "is_smooth",
    "smooth_representative",
    "chi",
    "chi_inverse",
    "window_decomposition",
    "group_order",
    "enumerate_group",
    "parse_signed",
    "format_signed",
]

# Exhaustive enumeration is capped so a typo cannot ask for 13!*2^13 tuples.
MAX_ENUMERATION_N = 12

Permutation = tuple[int, ...]
SignedPermutation = tuple[int, ...]

_KINDS = ("A", "B", "D")


def _check_kind(kind: str) -> str:
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {_KINDS}, got {kind!r}")
    return kind


def as_permutation(values: Sequence[int]) -> Permutation:
    """Validate and freeze a one-line permutation of [n].

    >>> as_permutation([2, 3, 1])
    (2, 3, 1)
    """
    w = tuple(values)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of [n]: {w}")
    return w


def as_window(values: Sequence[int]) -> SignedPermutation:
    """Validate and freeze a signed-permutation window.

    >>> as_window([-2, 3, 1, 6, -4, -7, 5])
    (-2, 3, 1, 6, -4, -7, 5)
    """
    u = tuple(values)
    if sorted(abs(x) for x in u) != list(range(1, len(u) + 1)):
        raise ValueError(f"window letters must have absolute values [n]: {u}")
    return u


def full_notation(u: SignedPermutation) -> tuple[int, ...]:
    """The length-2n word: reversed sign-flipped window, then the window.

    >>> full_notation((-2, 3, 1))
    (-1, -3, 2, -2, 3, 1)
    """
    return tuple(-x for x in reversed(u)) + tuple(u)


# ---------------------------------------------------------------------------
# Descents


def descent_set(u: Sequence[int], kind: str = "A") -> frozenset[int]:
    """Descent positions of ``u`` in the given Coxeter type.

    Type A works on any word of distinct integers and returns positions in
    ``{1, ..., n-1}``.  Types B and D require a signed window and may also
    contain the sentinel position ``0``; type D needs ``n >= 2``.

    >>> sorted(descent_set((7, 4, 2, 3, 1, 6, 5), "A"))
    [1, 2, 4, 6]
    >>> sorted(descent_set((-2, 3, 1, 6, -4, -7, 5), "B"))
    [0, 2, 4, 5]
    """
    _check_kind(kind)
    n = len(u)
    out = {i for i in range(1, n) if u[i - 1] > u[i]}
    if kind == "B":
        if u and u[0] < 0:
            out.add(0)
    elif kind == "D":
        if n < 2:
            raise ValueError("type D descents need n >= 2 (sentinel is -u_2)")
        if -u[1] > u[0]:
            out.add(0)
    return frozenset(out)


def descent_set_d_variant(u: SignedPermutation) -> frozenset[int]:
    """Type D descents with the extra position indexed by -1.

    The sentinel is ``u_{-1} = -u_1`` (as in full notation) and ``-1`` is a
    descent when ``u_{-1} > u_2``.  The result equals ``descent_set(u, "D")``
    up to renaming ``-1`` to ``0``, but unlike that convention this one
    trades places with position ``1`` under mates, which is what makes
    ``descent_count`` mate-invariant.
    """
    n = len(u)
    if n < 2:
        raise ValueError("type D descents need n >= 2 (sentinel is -u_1)")
    out = {i for i in range(1, n) if u[i - 1] > u[i]}
    if -u[0] > u[1]:
        out.add(-1)
    return frozenset(out)


def descent_count(u: Sequence[int], kind: str = "A") -> int:
    """Number of descents of ``u`` in the given type."""
    return len(descent_set(u, kind))


def positive_descent_count(u: SignedPermutation) -> int:
    """Number of strictly positive type B descents, ``|Desc_B(u) - {0}|``."""
    return len(descent_set(u, "B") - {0})


# ---------------------------------------------------------------------------
# Inversions


@dataclass(frozen=True)
class InversionSet:
    """Value-based inversions, split into positive and negative pairs.

    ``positive_pairs`` holds ``(i, j)`` with ``1 <= i < j <= n``;
    ``negative_pairs`` holds ``(i, j)`` with ``i < 0`` and
    ``1 <= |i| <= j <= n`` (so ``(-i, i)`` is a legal member).
    """

    positive_pairs: frozenset[tuple[int, int]]
    negative_pairs: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.positive_pairs) + len(self.negative_pairs)

    def unordered_negative_pairs(self) -> list[tuple[int, int]]:
        """Negative pairs as unordered pairs of absolute values ``{a, b}``."""
        return sorted((-i, j) for i, j in self.negative_pairs)


def _positions(u: SignedPermutation) -> dict[int, int]:
    # position map of u as a permutation of {-n..-1, 1..n}: value -> index,
    # where the window occupies indices 1..n and the prefix -n..-1.
    pos: dict[int, int] = {}
    for k, x in enumerate(u, start=1):
        pos[x] = k
        pos[-x] = -k
    return pos


def inversion_set(u: Sequence[int], kind: str = "A") -> InversionSet:
    """Inversions of ``u`` in the given type.

    >>> len(inversion_set((-1, -2), "B"))
    4
    """
    _check_kind(kind)
    n = len(u)
    if kind == "A":
        w = as_permutation(u)
        pos = {x: k for k, x in enumerate(w, start=1)}
        positive = frozenset(
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if pos[i] > pos[j]
        )
        return InversionSet(positive, frozenset())
    pos = _positions(as_window(u))
    positive = frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if pos[i] > pos[j]
    )
    lo = 0 if kind == "B" else 1  # type D drops the pairs (-i, i)
    negative = frozenset(
        (-a, j)
        for a in range(1, n + 1)
        for j in range(a + lo, n + 1)
        if pos[-a] > pos[j]
    )
    return InversionSet(positive, negative)


def inversion_count(u: Sequence[int], kind: str = "A") -> int:
    """Number of inversions of ``u`` in the given type."""
    return len(inversion_set(u, kind))


# ---------------------------------------------------------------------------
# Mates, smoothness, the chi decomposition


def mate(u: SignedPermutation) -> SignedPermutation:
    """The signed permutation differing from ``u`` only in the sign of the
    first window letter.  An involution.

    >>> mate((-2, 3, 1, 6, -4, -7, 5))
    (2, 3, 1, 6, -4, -7, 5)
    """
    if not u:
        raise ValueError("mate needs n >= 1")
    return (-u[0],) + tuple(u[1:])


def is_even_signed(u: SignedPermutation) -> bool:
    """True when the window has an even number of negative letters."""
    return sum(1 for x in u if x < 0) % 2 == 0


def is_smooth(u: SignedPermutation) -> bool:
    """True when the first two window letters have equal sign.

    Exactly one of ``u`` and ``mate(u)`` is smooth.  Needs ``n >= 2``.
    """
    if len(u) < 2:
        raise ValueError("smoothness needs n >= 2")
    return (u[0] > 0) == (u[1] > 0)


@dataclass(frozen=True)
class Classification:
    smooth: bool
    even_signed: bool


def classify(u: SignedPermutation) -> Classification:
    """Smoothness and even-signedness of ``u`` (``n >= 2``).

    >>> classify((-2, 3, 1, 6, -4, -7, 5))
    Classification(smooth=False, even_signed=False)
    """
    return Classification(smooth=is_smooth(u), even_signed=is_even_signed(u))


def smooth_representative(u: SignedPermutation) -> SignedPermutation:
    """The smooth element of the mate pair ``{u, mate(u)}``."""
    return u if is_smooth(u) else mate(u)


def chi(u: SignedPermutation) -> tuple[int, SignedPermutation]:
    """Split a non-smooth ``u`` into ``(|u_1|, renamed tail)``.

    The tail ``u_2 ... u_n`` is renamed by the unique order-preserving
    bijection from ``{-n..n} - {0, x, -x}`` onto ``{-(n-1)..n-1} - {0}``
    (signs survive, absolute values above ``x = |u_1|`` drop by one).
    Restricted to non-smooth windows this is a bijection onto
    ``[n] x B_{n-1}``.

    >>> chi((-2, 3, 1, 6, -4, -7, 5))
    (2, (2, 1, 5, -3, -6, 4))
    """
    if is_smooth(u):
        raise ValueError(f"chi is defined only on non-smooth windows: {u}")
    x = abs(u[0])
    tail = tuple(t - (1 if t > x else 0) + (1 if t < -x else 0) for t in u[1:])
    return x, tail


def chi_inverse(x: int, v: SignedPermutation) -> SignedPermutation:
    """The unique non-smooth ``u`` with ``chi(u) = (x, v)``.

    Renames ``v`` so neither ``x`` nor ``-x`` occurs, then prepends ``x``
    with the sign opposite to the renamed first letter.

    >>> chi_inverse(3, (-1, 5, -4, 2, 3))
    (3, -1, 6, -5, 2, 4)
    """
    n = len(v) + 1
    if not 1 <= x <= n:
        raise ValueError(f"x must lie in [{n}], got {x}")
    as_window(v)
    renamed = tuple(t + (1 if t >= x else 0) - (1 if t <= -x else 0) for t in v)
    first = x if renamed[0] < 0 else -x
    return (first,) + renamed


def window_decomposition(u: SignedPermutation) -> tuple[Permutation, frozenset[int]]:
    """Factor the window as ``iota o w``: pattern permutation and image.

    ``w`` is the permutation of [n] with the same relative order as the
    window, and the returned set is the positive part of the image of the
    order-preserving injection ``iota`` (i.e. the positive window letters).
    The strictly positive type B descents of ``u`` are exactly the type A
    descents of ``w``.

    >>> window_decomposition((3, -4, 1, -2, -5))
    ((5, 2, 4, 3, 1), frozenset({1, 3}))
    """
    u = as_window(u)
    rank = {x: r for r, x in enumerate(sorted(u), start=1)}
    w = tuple(rank[x] for x in u)
    return w, frozenset(x for x in u if x > 0)


# ---------------------------------------------------------------------------
# Enumeration


def group_order(n: int, kind: str = "A") -> int:
    """|A_n| = n!, |B_n| = 2^n n!, |D_n| = 2^(n-1) n!."""
    _check_kind(kind)
    if n < 0 or (kind == "D" and n < 1):
        raise ValueError(f"group order undefined for kind {kind}, n = {n}")
    if kind == "A":
        return factorial(n)
    if kind == "B":
        return 2**n * factorial(n)
    return 2 ** (n - 1) * factorial(n)


def _subtree_count(r: int, kind: str, parity_even: bool) -> int:
    # Completions of a prefix with r letters still unplaced.  For type D the
    # count is independent of the prefix parity except at r = 0.
    if kind == "A":
        return factorial(r)
    if kind == "B":
        return factorial(r) * 2**r
    if r == 0:
        return 1 if parity_even else 0
    return factorial(r) * 2 ** (r - 1)


def enumerate_group(
    n: int, kind: str = "A", start: int = 0, stop: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield the elements of A_n/B_n/D_n in window-lexicographic order.

    Words are compared as integer tuples, so the all-negative window
    (-n, ..., -1) comes first and the decreasing positive window
    (n, ..., 1) last.  ``start``/``stop``
    select a rank range of this fixed order, which is what makes parallel
    exhaustive sweeps deterministic: partitioning by rank ranges yields the
    same multiset of elements regardless of scheduling.

    >>> list(enumerate_group(2, "D"))
    [(-2, -1), (-1, -2), (1, 2), (2, 1)]
    """
    _check_kind(kind)
    if n < 0 or (kind == "D" and n < 1):
        raise ValueError(f"enumeration undefined for kind {kind}, n = {n}")
    if n > MAX_ENUMERATION_N:
        raise ValueError(
            f"n = {n} exceeds the enumeration cap {MAX_ENUMERATION_N}"
        )
    total = group_order(n, kind)
    stop = total if stop is None else min(stop, total)
    if not 0 <= start <= total:
        raise ValueError(f"start must lie in [0, {total}], got {start}")
    if start >= stop:
        return
    if kind == "A":
        # itertools.permutations already yields in lexicographic order.
        yield from itertools.islice(
            itertools.permutations(range(1, n + 1)), start, stop
        )
        return

    remaining = stop - start
    skip = start
    prefix: list[int] = []

    def emit(avail: list[int], negatives: int) -> Iterator[tuple[int, ...]]:
        nonlocal skip, remaining
        if remaining == 0:
            return
        if not avail:
            if skip == 0:
                remaining -= 1
                yield tuple(prefix)
            else:  # pragma: no cover - skip never reaches completed leaves
                skip -= 1
            return
        candidates = [-a for a in reversed(avail)] + avail
        for c in candidates:
            even_after = (negatives + (1 if c < 0 else 0)) % 2 == 0
            t = _subtree_count(len(avail) - 1, kind, even_after)
            if skip >= t:
                skip -= t
                continue
            rest = [a for a in avail if a != abs(c)]
            prefix.append(c)
            yield from emit(rest, negatives + (1 if c < 0 else 0))
            prefix.pop()
            if remaining == 0:
                return

    yield from emit(list(range(1, n + 1)), 0)


# ---------------------------------------------------------------------------
# Text forms


def parse_signed(text: str) -> SignedPermutation:
    """Parse a window from the comma form or the compact digit form.

    The comma form ("-2,3,1,6,-4,-7,5") works for every n; the compact
    form ("-231" for (-2, 3, 1)) only for n <= 9.

    >>> parse_signed("-2,3,1,6,-4,-7,5")
    (-2, 3, 1, 6, -4, -7, 5)
    >>> parse_signed("-231")
    (-2, 3, 1)
    """
    text = text.strip()
    if not text:
        raise ValueError("empty signed-permutation text")
    if "," in text:
        return as_window(tuple(int(p) for p in text.split(",")))
    letters = []
    sign = 1
    for ch in text:
        if ch == "-":
            if sign < 0:
                raise ValueError(f"dangling sign in {text!r}")
            sign = -1
        elif ch.isdigit() and ch != "0":
            letters.append(sign * int(ch))
            sign = 1
        elif ch.isspace():
            continue
        else:
            raise ValueError(f"unexpected character {ch!r} in {text!r}")
    if sign < 0:
        raise ValueError(f"dangling sign in {text!r}")
    return as_window(tuple(letters))


def format_signed(u: Sequence[int]) -> str:
    """Canonical comma form of a window.

    >>> format_signed((-2, 3, 1))
    '-2,3,1'
    """
    return ",".join(str(x) for x in u)


if __name__ == "__main__":  # pragma: no cover
    import doctest

    doctest.testmod()
