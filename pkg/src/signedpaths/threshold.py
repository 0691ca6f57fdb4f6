"""Threshold graphs and their correspondences with signed permutations.

Graphs here are simple and labeled, with vertex set [n] and edges stored
as sorted pairs ``(min, max)``.  The *vicinal preorder* compares vertices
by neighborhood inclusion, ``v <= u`` iff ``N(v)`` is contained in
``N(u) + {u}``; a graph is *threshold* when this preorder is total, or
equivalently when no four vertices induce a perfect matching, a three-edge
path, or a four-cycle.  Both recognizers are implemented and kept
deliberately independent so they can be played against each other.

Threshold graphs with a chosen degree ordering (a permutation ``w`` along
which degrees never increase) correspond to even-signed permutations: the
cells weakly below the path of ``u`` and strictly below the diagonal,
relabeled through the column labels ``lambda_x``, form a threshold edge
set ``E(u)``, and ``u -> (lambda_x, E(u))`` is a bijection once ``u`` runs
over even-signed (equivalently, smooth) permutations.  The edge set only
depends on the path, so mates yield the same graph.  Composing with the
bar encoding of paths identifies threshold graphs with normal simply
barred permutations whose central block has at least two letters; rotating
that block to the front gives the first-block form used by the public
pair of converters.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from . import barred, pathrep
from .sgnperm import (
    Permutation,
    SignedPermutation,
    as_permutation,
    is_even_signed,
    is_smooth,
    mate,
)

__all__ = [
    "SimpleGraph",
    "ThresholdPair",
    "graph",
    "neighbors",
    "degree",
    "vicinal_compare",
    "is_threshold",
    "is_degree_ordering",
    "canonical_degree_ordering",
    "edges_from_height",
    "height_from_edges",
    "edges_from_signed",
    "tg_pair",
    "signed_from_tg",
    "degree_orderings",
    "enumerate_graphs",
    "enumerate_threshold_graphs",
    "enumerate_tg",
    "unlabeled_threshold_count",
    "sbp_from_threshold",
    "threshold_from_sbp",
    "parse_graph",
    "format_graph",
    "graph_to_json",
    "graph_from_json",
]

Edge = tuple[int, int]


@dataclass(frozen=True)
class SimpleGraph:
    """A simple labeled graph on vertex set [n]."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "edges",
            frozenset((min(a, b), max(a, b)) for a, b in self.edges),
        )
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise ValueError(f"edge ({a},{b}) leaves the vertex set [{self.n}]")


def graph(n: int, edges: Iterable[Iterable[int]] = ()) -> SimpleGraph:
    """Convenience constructor normalizing edge pairs."""
    return SimpleGraph(n, frozenset(tuple(sorted(e)) for e in edges))


def neighbors(g: SimpleGraph, v: int) -> frozenset[int]:
    return frozenset(
        b if a == v else a for a, b in g.edges if v in (a, b)
    )


def degree(g: SimpleGraph, v: int) -> int:
    return sum(1 for e in g.edges if v in e)


# ---------------------------------------------------------------------------
# Recognition


def vicinal_compare(g: SimpleGraph, v: int, u: int) -> bool:
    """``v <= u`` in the vicinal preorder: ``N(v)`` inside ``N(u) + {u}``."""
    return neighbors(g, v) <= (neighbors(g, u) | {u})


def is_threshold(g: SimpleGraph, method: str = "vicinal") -> bool:
    """Threshold recognition by preorder totality or forbidden subgraphs.

    >>> is_threshold(graph(4, [(1, 2), (2, 3), (3, 4), (4, 1)]))
    False
    >>> is_threshold(graph(3, [(1, 2), (2, 3)]), method="forbidden")
    True
    """
    if method == "vicinal":
        return all(
            vicinal_compare(g, v, u) or vicinal_compare(g, u, v)
            for v in range(1, g.n + 1)
            for u in range(v + 1, g.n + 1)
        )
    if method == "forbidden":
        # On four vertices the induced edge count plus degree multiset pins
        # down each of the three forbidden graphs: a two-edge matching, the
        # three-edge path, and the four-cycle.
        for quad in itertools.combinations(range(1, g.n + 1), 4):
            induced = [e for e in g.edges if e[0] in quad and e[1] in quad]
            degs = sorted(
                sum(1 for e in induced if v in e) for v in quad
            )
            e = len(induced)
            if (
                (e == 2 and degs == [1, 1, 1, 1])
                or (e == 3 and degs == [1, 1, 2, 2])
                or (e == 4 and degs == [2, 2, 2, 2])
            ):
                return False
        return True
    raise ValueError(f"method must be 'vicinal' or 'forbidden': {method!r}")


def is_degree_ordering(g: SimpleGraph, w: Permutation) -> bool:
    """True when degrees never increase along the word ``w``."""
    w = as_permutation(w)
    if len(w) != g.n:
        raise ValueError(f"ordering length {len(w)} does not match n = {g.n}")
    degs = [degree(g, v) for v in w]
    return all(a >= b for a, b in itertools.pairwise(degs))


def canonical_degree_ordering(g: SimpleGraph) -> Permutation:
    """The degree ordering listing equal-degree vertices by increasing label.

    Only defined on threshold graphs.

    >>> canonical_degree_ordering(graph(3, [(1, 2), (1, 3)]))
    (1, 2, 3)
    """
    if not is_threshold(g):
        raise ValueError("canonical degree ordering is defined for threshold graphs")
    return tuple(
        sorted(range(1, g.n + 1), key=lambda v: (-degree(g, v), v))
    )


def degree_orderings(g: SimpleGraph) -> Iterator[Permutation]:
    """All degree orderings of ``g``: permute freely within degree classes."""
    classes: dict[int, list[int]] = {}
    for v in range(1, g.n + 1):
        classes.setdefault(degree(g, v), []).append(v)
    ordered = sorted(classes.items(), key=lambda item: -item[0])
    for arrangement in itertools.product(
        *(itertools.permutations(vs) for _, vs in ordered)
    ):
        yield tuple(itertools.chain.from_iterable(arrangement))


# ---------------------------------------------------------------------------
# Heights <-> edges (the Galois correspondence)


def edges_from_height(f: pathrep.HeightFunction) -> frozenset[Edge]:
    """Edge set of a self-adjoint height function: ``x != y, y <= f(x)``.

    >>> sorted(edges_from_height((3, 3, 2, 1)))
    [(1, 2), (1, 3)]
    """
    f = pathrep.as_height(f)
    if not pathrep.classify_height(f).self_adjoint:
        raise ValueError(f"height function is not self-adjoint: {f}")
    n = len(f) - 1
    return frozenset(
        (y, x) for x in range(1, n + 1) for y in range(1, min(x, f[x] + 1))
    )


def height_from_edges(edges: Iterable[Edge], n: int) -> pathrep.HeightFunction:
    """Height function ``f(x) = max N(x)`` of a threshold graph for which
    the identity is a degree ordering; always fixed-point-free and
    self-adjoint, and a two-sided inverse of :func:`edges_from_height`
    on that side.

    >>> height_from_edges([(1, 2), (1, 3)], 3)
    (3, 3, 1, 1)
    """
    g = graph(n, edges)
    if not is_threshold(g):
        raise ValueError("edge set is not threshold")
    if not is_degree_ordering(g, tuple(range(1, n + 1))):
        raise ValueError("identity is not a degree ordering of the edge set")
    f = [n]
    for x in range(1, n + 1):
        nx = neighbors(g, x)
        f.append(max(nx) if nx else 0)
    return pathrep.as_height(f)


# ---------------------------------------------------------------------------
# Signed permutations <-> threshold pairs


@dataclass(frozen=True)
class ThresholdPair:
    """A threshold graph bundled with a degree ordering of it."""

    w: Permutation
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        object.__setattr__(self, "w", as_permutation(self.w))
        object.__setattr__(
            self,
            "edges",
            frozenset((min(a, b), max(a, b)) for a, b in self.edges),
        )
        g = SimpleGraph(len(self.w), self.edges)
        if not is_threshold(g):
            raise ValueError("edge set is not threshold")
        if not is_degree_ordering(g, self.w):
            raise ValueError(f"{self.w} is not a degree ordering of the edge set")


def edges_from_signed(u: SignedPermutation) -> frozenset[Edge]:
    """The threshold edge set of ``u``: off-diagonal cells weakly below the
    path, relabeled through ``lambda_x``.  Mate-invariant.

    >>> sorted(edges_from_signed((-2, 3, 1, 6, -4, -7, 5)))
    [(1, 4), (1, 7), (2, 4), (2, 7), (3, 4), (3, 7), (4, 6), (4, 7), (6, 7)]
    """
    rep = pathrep.path_representation(u)
    f = pathrep.height_function(rep.path)
    n = len(rep.lambda_x)
    out = set()
    for x in range(1, n + 1):
        for y in range(1, min(x, f[x] + 1)):
            a, b = rep.lambda_x[x - 1], rep.lambda_x[y - 1]
            out.add((min(a, b), max(a, b)))
    return frozenset(out)


def tg_pair(u: SignedPermutation) -> ThresholdPair:
    """The pair (column labels, edge set) of ``u``."""
    rep = pathrep.path_representation(u)
    return ThresholdPair(rep.lambda_x, edges_from_signed(u))


def signed_from_tg(pair: ThresholdPair) -> SignedPermutation:
    """The unique even-signed ``u`` with ``tg_pair(u) = pair``.

    Relabels the edges through ``w^{-1}`` so the identity orders degrees,
    reads off the height function, rebuilds the path, labels it with ``w``,
    and finally picks the even-signed mate.

    >>> signed_from_tg(ThresholdPair((1, 2, 3), frozenset()))
    (1, 2, 3)
    """
    n = len(pair.w)
    pos = {v: i for i, v in enumerate(pair.w, start=1)}
    relabeled = [(pos[a], pos[b]) for a, b in pair.edges]
    f = height_from_edges(relabeled, n)
    path = pathrep.path_from_height(f)
    u = pathrep.signed_from_path(path, pair.w)
    return u if is_even_signed(u) else mate(u)


# ---------------------------------------------------------------------------
# Threshold graphs <-> barred permutations


def sbp_from_threshold(g: SimpleGraph) -> barred.SimplyBarredPermutation:
    """Encode a threshold graph as a normal simply barred permutation whose
    first block has at least two letters (vacuously short for n <= 1).

    The word is the canonical degree ordering, the blocks are the degree
    classes, and the block holding the diagonal is rotated to the front.
    """
    w = canonical_degree_ordering(g)
    n = g.n
    if n == 0:
        return barred.SimplyBarredPermutation((), frozenset())
    u = signed_from_tg(ThresholdPair(w, g.edges))
    if n >= 2 and not is_smooth(u):
        u = mate(u)
    sbp = barred.psi_inverse(u)
    bs = barred.blocks(sbp)
    c = barred.central_block_index(sbp)
    rotated = [bs[c - 1]] + bs[: c - 1] + bs[c:]
    word = tuple(itertools.chain.from_iterable(rotated))
    cuts = list(itertools.accumulate(len(b) for b in rotated[:-1]))
    return barred.SimplyBarredPermutation(word, frozenset(cuts))


def threshold_from_sbp(sbp: barred.SimplyBarredPermutation) -> SimpleGraph:
    """Decode :func:`sbp_from_threshold`: move the first block back to the
    central position and read the graph off the resulting signed
    permutation."""
    n = len(sbp.w)
    cls = barred.classify_sbp(sbp)
    if not cls.normal:
        raise ValueError(f"{sbp} is not normal (blocks must increase)")
    bs = barred.blocks(sbp)
    if n >= 2 and len(bs[0]) < 2:
        raise ValueError(f"{sbp} must have a first block of at least two letters")
    c = barred.central_block_index(sbp)
    original = bs[1:c] + [bs[0]] + bs[c:]
    word = tuple(itertools.chain.from_iterable(original))
    cuts = list(itertools.accumulate(len(b) for b in original[:-1]))
    u = barred.psi(barred.SimplyBarredPermutation(word, frozenset(cuts)))
    return SimpleGraph(n, edges_from_signed(u)) if n else SimpleGraph(0)


# ---------------------------------------------------------------------------
# Enumeration, counting, text forms


def enumerate_graphs(n: int) -> Iterator[SimpleGraph]:
    """All ``2^C(n,2)`` simple graphs on [n], by edge-subset order."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for bits in range(2 ** len(pairs)):
        edges = frozenset(
            pairs[i] for i in range(len(pairs)) if bits >> i & 1
        )
        yield SimpleGraph(n, edges)


def enumerate_threshold_graphs(n: int) -> Iterator[SimpleGraph]:
    """All labeled threshold graphs on [n]."""
    return (g for g in enumerate_graphs(n) if is_threshold(g))


def enumerate_tg(n: int) -> Iterator[ThresholdPair]:
    """All pairs of a threshold graph with one of its degree orderings."""
    for g in enumerate_threshold_graphs(n):
        for w in degree_orderings(g):
            yield ThresholdPair(w, g.edges)


def unlabeled_threshold_count(n: int) -> int:
    """Number of threshold graphs on [n] up to isomorphism (``2^(n-1)``).

    Threshold graphs are isomorphic exactly when their degree sequences
    agree, so the count is over sorted degree sequences.
    """
    seen = set()
    for g in enumerate_threshold_graphs(n):
        seen.add(tuple(sorted(degree(g, v) for v in range(1, n + 1))))
    return len(seen)


def parse_graph(text: str) -> SimpleGraph:
    """Parse the text form ``"n; i-j, i-j"`` (edge list may be empty).

    >>> parse_graph("3; 1-2, 1-3")
    SimpleGraph(n=3, edges=frozenset({(1, 2), (1, 3)}))
    """
    head, _, rest = text.partition(";")
    n = int(head.strip())
    edges = set()
    for chunk in rest.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        a, _, b = chunk.partition("-")
        edges.add((int(a), int(b)))
    return graph(n, edges)


def format_graph(g: SimpleGraph) -> str:
    """Canonical text form with edges sorted.

    >>> format_graph(graph(3, [(1, 3), (1, 2)]))
    '3; 1-2, 1-3'
    """
    body = ", ".join(f"{a}-{b}" for a, b in sorted(g.edges))
    return f"{g.n}; {body}" if body else f"{g.n};"


def graph_to_json(g: SimpleGraph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in sorted(g.edges)]})


def graph_from_json(text: str) -> SimpleGraph:
    data = json.loads(text)
    return graph(int(data["n"]), data.get("edges", []))


if __name__ == "__main__":  # pragma: no cover
    import doctest

    doctest.testmod()
