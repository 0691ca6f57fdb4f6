"""Barred permutations and their correspondence with signed permutations.

A *simply barred permutation* is a pair ``(w, B)`` of a permutation ``w``
of [n] and a set of bar positions ``B`` inside ``{1..n}``; a bar at
position ``i`` sits after the ``i``-th letter, so the bars cut ``w`` into
``|B| + 1`` blocks of which only the last may be empty (bar at ``n``).
A *loosely barred permutation* also admits a bar at position ``0``.

The map ``psi`` turns ``(w, B)`` into a signed permutation: the bars
determine a diagonal-symmetric lattice path (the upper antidiagonal of the
subgrid spanned by ``B``) and ``w`` labels its columns.  Its inverse reads
the bars off the East-South turns of the path of ``u``.  Two counting
formulas come with it: the signed permutation ``psi(w, B)`` has

* ``|Desc(w) - B| + ceil(|B| / 2)`` type B descents, and
* ``|Desc(w) - B| + floor(|B| / 2)`` strictly positive type B descents,

so descent classes of signed permutations can be enumerated on the barred
side without ever building ``psi``.  The map ``theta`` reduces loosely
barred permutations to simply barred ones through the two-to-one map
``xi_D(B) = (D symmetric-difference B) - {0}`` with ``D = Desc(w)``; its
one-sided inverses pick the preimage prescribed by the parity bookkeeping
of ``descent_sum``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .pathrep import LatticePath, east_south_turns, path_representation
from .sgnperm import (
    Permutation,
    SignedPermutation,
    as_permutation,
    descent_set,
)
from . import pathrep

__all__ = [
    "SimplyBarredPermutation",
    "LooselyBarredPermutation",
    "SbpClassification",
    "upper_antidiagonal",
    "psi",
    "psi_inverse",
    "descB_formula",
    "positive_descB_formula",
    "xi",
    "xi_preimages",
    "theta",
    "theta_inverse",
    "descent_sum",
    "blocks",
    "central_block_index",
    "central_block",
    "classify_sbp",
    "enumerate_sbp",
    "enumerate_lbp",
    "parse_sbp",
    "format_sbp",
]


@dataclass(frozen=True)
class SimplyBarredPermutation:
    """A permutation with bars at positions from ``{1..n}``."""

    w: Permutation
    bars: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "w", as_permutation(self.w))
        object.__setattr__(self, "bars", frozenset(self.bars))
        n = len(self.w)
        if not all(1 <= b <= n for b in self.bars):
            raise ValueError(f"bars must lie in [{n}]: {sorted(self.bars)}")


@dataclass(frozen=True)
class LooselyBarredPermutation:
    """A permutation with bars at positions from ``{0..n}``."""

    w: Permutation
    bars: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "w", as_permutation(self.w))
        object.__setattr__(self, "bars", frozenset(self.bars))
        n = len(self.w)
        if not all(0 <= b <= n for b in self.bars):
            raise ValueError(f"bars must lie in 0..{n}: {sorted(self.bars)}")


# ---------------------------------------------------------------------------
# psi and the descent formulas


def upper_antidiagonal(bars: Iterable[int], n: int) -> LatticePath:
    """The staircase hugging the antidiagonal of the subgrid spanned by bars.

    With ``B = {b_1 < ... < b_m}`` the path runs from ``(0, n)`` down to
    ``(0, b_m)``, then alternates East runs through the abscissas ``b_i``
    with South runs through the ordinates ``b_{m+1-i}``, and finishes East
    to ``(n, 0)``.  It is diagonal-symmetric with exactly ``m`` East-South
    turns; no bars give the extreme path of all South steps first.

    >>> upper_antidiagonal({2, 3, 6}, 7)
    'SEESSSESEEESSE'
    >>> upper_antidiagonal((), 3)
    'SSSEEE'
    """
    b = sorted(set(bars))
    if b and not (1 <= b[0] and b[-1] <= n):
        raise ValueError(f"bars must lie in [{n}]: {b}")
    m = len(b)
    lo = [0] + b  # b_0 = 0
    top = b[-1] if b else 0
    out = [pathrep.SOUTH * (n - top)]
    for i in range(1, m + 1):
        out.append(pathrep.EAST * (lo[i] - lo[i - 1]))
        out.append(pathrep.SOUTH * (lo[m + 1 - i] - lo[m - i]))
    out.append(pathrep.EAST * (n - top))
    return "".join(out)


def psi(sbp: SimplyBarredPermutation) -> SignedPermutation:
    """The signed permutation whose path is the bar staircase of ``sbp``
    and whose column labels are ``sbp.w``.

    >>> psi(SimplyBarredPermutation((7, 4, 2, 3, 1, 6, 5), frozenset({2, 3, 6})))
    (-2, 3, 1, 6, -4, -7, 5)
    """
    path = upper_antidiagonal(sbp.bars, len(sbp.w))
    return pathrep.signed_from_path(path, sbp.w)


def psi_inverse(u: SignedPermutation) -> SimplyBarredPermutation:
    """Recover ``(w, B)`` from the path of ``u``: ``w`` is the column
    labelling and each East-South turn contributes a bar at its abscissa.

    >>> psi_inverse((-2, 3, 1, 6, -4, -7, 5))
    SimplyBarredPermutation(w=(7, 4, 2, 3, 1, 6, 5), bars=frozenset({2, 3, 6}))
    """
    rep = path_representation(u)
    bars = frozenset(x for x, _ in east_south_turns(rep.path))
    return SimplyBarredPermutation(rep.lambda_x, bars)


def descB_formula(sbp: SimplyBarredPermutation) -> int:
    """Type B descents of ``psi(sbp)``, without building it.

    >>> descB_formula(SimplyBarredPermutation((7, 4, 2, 3, 1, 6, 5), frozenset({2, 3, 6})))
    4
    """
    free = descent_set(sbp.w, "A") - sbp.bars
    return len(free) + (len(sbp.bars) + 1) // 2


def positive_descB_formula(sbp: SimplyBarredPermutation) -> int:
    """Strictly positive type B descents of ``psi(sbp)``: position 0 is a
    descent exactly when the number of bars is odd, so the ceiling in
    ``descB_formula`` drops to a floor."""
    free = descent_set(sbp.w, "A") - sbp.bars
    return len(free) + len(sbp.bars) // 2


# ---------------------------------------------------------------------------
# xi and theta


def xi(d: Iterable[int], bars: Iterable[int]) -> frozenset[int]:
    """``(D symmetric-difference B) - {0}``; two-to-one in ``B``.

    >>> sorted(xi({1, 3}, {0, 1}))
    [3]
    """
    return frozenset(set(d) ^ set(bars)) - {0}


def xi_preimages(d: Iterable[int], c: Iterable[int]) -> tuple[frozenset[int], frozenset[int]]:
    """The two ``xi``-preimages of ``c``: ``D delta C`` and its union with 0."""
    b1 = frozenset(set(d) ^ set(c))
    if 0 in b1:
        raise ValueError("c must be a subset of [n], not contain 0")
    return b1, b1 | {0}


def theta(lbp: LooselyBarredPermutation) -> SimplyBarredPermutation:
    """Forget the loose bar structure through ``xi`` with ``D = Desc(w)``."""
    c = xi(descent_set(lbp.w, "A"), lbp.bars)
    return SimplyBarredPermutation(lbp.w, c)


def descent_sum(lbp: LooselyBarredPermutation) -> int:
    """The grading ``des(w) + |B|`` that theta's inverses are indexed by."""
    return len(descent_set(lbp.w, "A")) + len(lbp.bars)


def theta_inverse(
    sbp: SimplyBarredPermutation, k: int, sum_parity: str = "even"
) -> LooselyBarredPermutation:
    """The unique theta-preimage with ``des(w) + |B| = 2k`` or ``2k + 1``.

    With ``sum_parity="even"`` the input must satisfy
    ``descB_formula(sbp) = k`` and the preimage has descent sum ``2k``;
    with ``"odd"`` it must satisfy ``positive_descB_formula(sbp) = k`` and
    the preimage has descent sum ``2k + 1``.  Which of the two candidate
    bar sets works is decided by the parity of ``|bars|``.
    """
    if sum_parity not in ("even", "odd"):
        raise ValueError(f"sum_parity must be 'even' or 'odd': {sum_parity!r}")
    d = descent_set(sbp.w, "A")
    b1, b2 = xi_preimages(d, sbp.bars)
    even_bars = len(sbp.bars) % 2 == 0
    if sum_parity == "even":
        if descB_formula(sbp) != k:
            raise ValueError(
                f"{sbp} is not in the descent class k = {k} (even sum)"
            )
        bars = b1 if even_bars else b2
    else:
        if positive_descB_formula(sbp) != k:
            raise ValueError(
                f"{sbp} is not in the positive-descent class k = {k} (odd sum)"
            )
        bars = b2 if even_bars else b1
    return LooselyBarredPermutation(sbp.w, bars)


# ---------------------------------------------------------------------------
# Blocks


def blocks(sbp: SimplyBarredPermutation) -> list[tuple[int, ...]]:
    """The maximal bar-free runs of letters, in order.

    There are ``|bars| + 1`` of them; only the last may be empty.

    >>> blocks(SimplyBarredPermutation((7, 4, 2, 3, 1, 6, 5), frozenset({2, 3, 6})))
    [(7, 4), (2,), (3, 1, 6), (5,)]
    """
    n = len(sbp.w)
    cuts = [0] + sorted(sbp.bars) + [n]
    return [tuple(sbp.w[a:b]) for a, b in itertools.pairwise(cuts)]


def central_block_index(sbp: SimplyBarredPermutation) -> int:
    """1-based index ``ceil((|bars| + 1) / 2)`` of the central block."""
    return (len(sbp.bars) + 2) // 2


def central_block(sbp: SimplyBarredPermutation) -> tuple[int, ...]:
    """The central block; never the empty last one when bars exist."""
    return blocks(sbp)[central_block_index(sbp) - 1]


@dataclass(frozen=True)
class SbpClassification:
    normal: bool
    compatible: bool


def classify_sbp(sbp: SimplyBarredPermutation) -> SbpClassification:
    """Normality (blocks increasing) and compatibility (central block >= 2).

    Compatibility is equivalent to smoothness of ``psi(sbp)``.

    >>> classify_sbp(SimplyBarredPermutation((7, 4, 2, 3, 1, 6, 5), frozenset({2, 3, 6})))
    SbpClassification(normal=False, compatible=False)
    """
    bs = blocks(sbp)
    normal = all(all(a < b for a, b in itertools.pairwise(blk)) for blk in bs)
    return SbpClassification(
        normal=normal, compatible=len(central_block(sbp)) >= 2
    )


# ---------------------------------------------------------------------------
# Enumeration and text forms


def _subsets(ground: list[int]) -> Iterator[frozenset[int]]:
    for r in range(len(ground) + 1):
        for combo in itertools.combinations(ground, r):
            yield frozenset(combo)


def enumerate_sbp(n: int) -> Iterator[SimplyBarredPermutation]:
    """All ``2^n n!`` simply barred permutations of [n]."""
    for w in itertools.permutations(range(1, n + 1)):
        for bars in _subsets(list(range(1, n + 1))):
            yield SimplyBarredPermutation(w, bars)


def enumerate_lbp(n: int) -> Iterator[LooselyBarredPermutation]:
    """All ``2^(n+1) n!`` loosely barred permutations of [n]."""
    for w in itertools.permutations(range(1, n + 1)):
        for bars in _subsets(list(range(n + 1))):
            yield LooselyBarredPermutation(w, bars)


def parse_sbp(text: str) -> SimplyBarredPermutation:
    """Parse the bar form, e.g. ``"74|2|316|5"`` or ``"7,4|2|3,1,6|5|"``.

    A trailing bar marks an empty last block; other empty blocks are
    rejected (consecutive bars are not allowed).
    """
    text = text.strip()
    segments = text.split("|")
    trailing_empty = segments and segments[-1] == ""
    if trailing_empty:
        segments = segments[:-1]
    if any(seg == "" for seg in segments):
        raise ValueError(f"consecutive bars are not allowed: {text!r}")
    letters: list[int] = []
    bars: set[int] = set()
    for seg in segments:
        if "," in seg:
            letters.extend(int(p) for p in seg.split(","))
        else:
            letters.extend(int(ch) for ch in seg if not ch.isspace())
        bars.add(len(letters))
    n = len(letters)
    if not trailing_empty:
        bars.discard(n)
    return SimplyBarredPermutation(tuple(letters), frozenset(bars))


def format_sbp(sbp: SimplyBarredPermutation) -> str:
    """Render with '|' bars; compact digits for n <= 9, commas beyond.

    >>> format_sbp(SimplyBarredPermutation((7, 4, 2, 3, 1, 6, 5), frozenset({2, 3, 6})))
    '74|2|316|5'
    """
    sep = "" if len(sbp.w) <= 9 else ","
    return "|".join(sep.join(str(x) for x in blk) for blk in blocks(sbp))


if __name__ == "__main__":  # pragma: no cover
    import doctest

    doctest.testmod()
