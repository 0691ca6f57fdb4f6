"""Unit tests for finite posets, weak orders, and the threshold-pair order."""

import json

import pytest

from signedpaths.eulerian import eulerian
from signedpaths.posets import (
    FinitePoset,
    LatticeReport,
    order_isomorphism_check,
    tg_order_leq,
    tg_poset,
    weak_leq,
    weak_poset,
)
from signedpaths.sgnperm import descent_count, descent_set, enumerate_group
from signedpaths.threshold import ThresholdPair, tg_pair

DIVISORS = [1, 2, 3, 4, 6, 12]


def divides(a, b):
    return b % a == 0


class TestFinitePoset:
    def test_divisor_lattice(self):
        p = FinitePoset(DIVISORS, divides)
        assert len(p) == 6
        assert sorted(p.covers()) == [
            (1, 2), (1, 3), (2, 4), (2, 6), (3, 6), (4, 12), (6, 12),
        ]
        assert p.le(2, 12) and not p.le(4, 6) and p.le(3, 3)
        assert p.lattice_check() == LatticeReport(True)
        assert p.join_irreducible_count() == 3  # 2, 3 and 4
        assert p.lower_cover_counts() == {1: 0, 2: 1, 3: 1, 4: 1, 6: 2, 12: 2}

    def test_element_order_does_not_matter(self):
        a = FinitePoset(DIVISORS, divides)
        b = FinitePoset(list(reversed(DIVISORS)), divides)
        assert sorted(a.covers()) == sorted(b.covers())
        assert a.elements[0] == b.elements[0] == 1

    def test_elements_come_in_a_linear_extension(self):
        p = FinitePoset(DIVISORS, divides)
        seq = p.elements
        for i, b in enumerate(seq):
            for a in seq[i + 1:]:
                assert not (divides(a, b) and a != b)

    def test_chain_and_diamond(self):
        chain = FinitePoset(range(5), lambda a, b: a <= b)
        assert chain.covers() == [(i, i + 1) for i in range(4)]
        assert chain.lattice_check().is_lattice
        assert chain.join_irreducible_count() == 4

        order = {"0": "0ab1", "a": "a1", "b": "b1", "1": "1"}
        diamond = FinitePoset("0ab1", lambda a, b: b in order[a])
        assert diamond.lattice_check().is_lattice
        assert diamond.join_irreducible_count() == 2

    def test_bowtie_is_not_a_lattice(self):
        # two bottoms under two tops: the bottoms have no least upper bound
        uppers = {"a": "acd", "b": "bcd", "c": "c", "d": "d"}
        p = FinitePoset("abcd", lambda x, y: y in uppers[x])
        report = p.lattice_check()
        assert not report.is_lattice
        assert report.missing == "join"
        assert set(report.witness) == {"a", "b"}
        with pytest.raises(ValueError):
            p.join_irreducible_count()

    def test_antichain_is_not_a_lattice(self):
        p = FinitePoset("xy", lambda a, b: a == b)
        report = p.lattice_check()
        assert not report.is_lattice

    def test_validation(self):
        with pytest.raises(ValueError):
            FinitePoset([1, 1, 2], lambda a, b: a <= b)
        with pytest.raises(ValueError):
            FinitePoset([1, 2], lambda a, b: a < b)  # not reflexive
        with pytest.raises(ValueError):
            # 1 <= 2 <= 3 without 1 <= 3
            FinitePoset(
                [1, 2, 3], lambda a, b: a == b or (a, b) in {(1, 2), (2, 3)}
            )
        with pytest.raises(ValueError):
            FinitePoset([1, 2], lambda a, b: True)  # not antisymmetric

    def test_dot_and_json(self):
        p = FinitePoset(range(3), lambda a, b: a <= b)
        dot = p.to_dot()
        assert dot.startswith("digraph hasse {")
        assert dot.count("->") == len(p.covers())
        assert '"0" -> "1";' in dot
        data = json.loads(p.covers_json())
        assert data["elements"] == ["0", "1", "2"]
        assert data["covers"] == [["0", "1"], ["1", "2"]]


class TestWeakOrder:
    def test_weak_leq_examples(self):
        assert weak_leq((1, 2, 3), (3, 2, 1))
        assert weak_leq((2, 1, 3), (2, 3, 1))
        assert not weak_leq((2, 1, 3), (3, 1, 2))
        assert weak_leq((1, -2), (-1, -2), kind="B")
        assert not weak_leq((-1, -2), (1, -2), kind="B")
        assert weak_leq((1, 2), (2, 1), kind="A")

    def test_bottom_and_top(self):
        identity = (1, 2, 3)
        p = weak_poset(3, "A")
        assert all(p.le(identity, u) for u in p.elements)
        assert all(p.le(u, (3, 2, 1)) for u in p.elements)
        b = weak_poset(2, "B")
        assert all(b.le((1, 2), u) for u in b.elements)
        assert all(b.le(u, (-1, -2)) for u in b.elements)

    def test_weak_a3_covers(self):
        p = weak_poset(3, "A")
        assert len(p.covers()) == 6
        assert set(p.covers()) == {
            ((1, 2, 3), (2, 1, 3)),
            ((1, 2, 3), (1, 3, 2)),
            ((2, 1, 3), (2, 3, 1)),
            ((1, 3, 2), (3, 1, 2)),
            ((2, 3, 1), (3, 2, 1)),
            ((3, 1, 2), (3, 2, 1)),
        }

    @pytest.mark.parametrize(
        "kind, n", [("A", 3), ("A", 4), ("B", 2), ("B", 3), ("D", 2), ("D", 3)]
    )
    def test_lower_covers_count_descents(self, kind, n):
        p = weak_poset(n, kind)
        assert len(p) == len(list(enumerate_group(n, kind)))
        for u, count in p.lower_cover_counts().items():
            assert count == descent_count(u, kind)

    @pytest.mark.parametrize(
        "kind, n", [("A", 3), ("A", 4), ("B", 2), ("B", 3), ("D", 2), ("D", 3)]
    )
    def test_weak_orders_are_lattices(self, kind, n):
        assert weak_poset(n, kind).lattice_check().is_lattice

    @pytest.mark.parametrize(
        "kind, ns",
        [("A", (3, 4, 5)), ("B", (2, 3)), ("D", (2, 3))],
    )
    def test_join_irreducibles_are_one_descent_elements(self, kind, ns):
        for n in ns:
            p = weak_poset(n, kind)
            assert p.join_irreducible_count() == eulerian(n, 1, kind)


class TestThresholdOrder:
    def test_tg_order_leq(self):
        empty = ThresholdPair((1, 2), frozenset())
        full = ThresholdPair((2, 1), frozenset({(1, 2)}))
        assert tg_order_leq(empty, full)
        assert not tg_order_leq(full, empty)
        assert tg_order_leq(empty, empty)

    def test_tg2_is_a_grid(self):
        p = tg_poset(2)
        assert len(p) == 4
        assert p.lattice_check().is_lattice
        assert len(p.covers()) == 4
        assert p.join_irreducible_count() == 2

    @pytest.mark.parametrize("n", [2, 3])
    def test_isomorphic_to_weak_d(self, n):
        assert order_isomorphism_check(
            weak_poset(n, "D"), tg_poset(n), tg_pair
        )

    @pytest.mark.parametrize("n", [2, 3])
    def test_tg_lattice_and_irreducibles(self, n):
        p = tg_poset(n)
        assert p.lattice_check().is_lattice
        assert p.join_irreducible_count() == eulerian(n, 1, "D")


class TestIsomorphismCheck:
    def test_positive_example(self):
        p = FinitePoset([1, 2, 4, 8], divides)
        q = FinitePoset(range(4), lambda a, b: a <= b)
        assert order_isomorphism_check(p, q, {1: 0, 2: 1, 4: 2, 8: 3}.__getitem__)

    def test_rejects_non_bijection(self):
        p = FinitePoset([1, 2], divides)
        q = FinitePoset([1, 3], divides)
        assert not order_isomorphism_check(p, q, lambda e: 1)

    def test_rejects_size_mismatch(self):
        p = FinitePoset([1, 2, 4], divides)
        q = FinitePoset([1, 2], divides)
        assert not order_isomorphism_check(p, q, lambda e: e)

    def test_rejects_order_breaker(self):
        p = FinitePoset([1, 2, 3, 6], divides)
        q = FinitePoset(range(4), lambda a, b: a <= b)
        # bijective but collapses an antichain onto a chain
        assert not order_isomorphism_check(
            p, q, {1: 0, 2: 1, 3: 2, 6: 3}.__getitem__
        )

    def test_weak_b_not_isomorphic_to_tg(self):
        assert not order_isomorphism_check(
            weak_poset(2, "B"), tg_poset(2), tg_pair
        )
