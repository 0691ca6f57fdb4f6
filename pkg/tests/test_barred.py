"""Unit tests for barred permutations, psi, the descent formulas, and theta."""

import itertools
import math

import pytest
from hypothesis import given, strategies as st

from signedpaths.barred import (
    LooselyBarredPermutation,
    SimplyBarredPermutation,
    blocks,
    central_block,
    central_block_index,
    classify_sbp,
    descB_formula,
    descent_sum,
    enumerate_lbp,
    enumerate_sbp,
    format_sbp,
    parse_sbp,
    positive_descB_formula,
    psi,
    psi_inverse,
    theta,
    theta_inverse,
    upper_antidiagonal,
    xi,
    xi_preimages,
)
from signedpaths.eulerian import eulerian
from signedpaths.pathrep import east_south_turns, is_diagonal_symmetric
from signedpaths.sgnperm import (
    descent_count,
    descent_set,
    enumerate_group,
    is_smooth,
)

ANCHOR = SimplyBarredPermutation((7, 4, 2, 3, 1, 6, 5), frozenset({2, 3, 6}))
ANCHOR_IMAGE = (-2, 3, 1, 6, -4, -7, 5)


def subsets(ground):
    ground = list(ground)
    for r in range(len(ground) + 1):
        yield from map(frozenset, itertools.combinations(ground, r))


@st.composite
def barred_pairs(draw, max_n=7, loose=False):
    n = draw(st.integers(1, max_n))
    w = tuple(draw(st.permutations(range(1, n + 1))))
    lo = 0 if loose else 1
    bars = draw(st.frozensets(st.integers(lo, n)))
    cls = LooselyBarredPermutation if loose else SimplyBarredPermutation
    return cls(w, bars)


class TestConstruction:
    def test_bar_range_validation(self):
        with pytest.raises(ValueError):
            SimplyBarredPermutation((2, 1), frozenset({0}))
        with pytest.raises(ValueError):
            SimplyBarredPermutation((2, 1), frozenset({3}))
        with pytest.raises(ValueError):
            LooselyBarredPermutation((2, 1), frozenset({-1}))
        with pytest.raises(ValueError):
            LooselyBarredPermutation((2, 1), frozenset({3}))
        # position 0 is legal only for the loose flavour
        assert 0 in LooselyBarredPermutation((2, 1), frozenset({0})).bars

    def test_window_is_validated_and_normalized(self):
        with pytest.raises(ValueError):
            SimplyBarredPermutation((1, 1), frozenset())
        with pytest.raises(ValueError):
            SimplyBarredPermutation((0, 1), frozenset())
        sbp = SimplyBarredPermutation([2, 1], {1})
        assert sbp.w == (2, 1) and sbp.bars == frozenset({1})
        assert hash(sbp) == hash(SimplyBarredPermutation((2, 1), frozenset({1})))


class TestUpperAntidiagonal:
    def test_worked_examples(self):
        assert upper_antidiagonal({2, 3, 6}, 7) == "SEESSSESEEESSE"
        assert upper_antidiagonal((), 3) == "SSSEEE"
        assert upper_antidiagonal({1, 2, 3}, 3) == "ESESES"
        assert upper_antidiagonal({1}, 1) == "ES"
        assert upper_antidiagonal((), 0) == ""

    def test_rejects_out_of_range_bars(self):
        with pytest.raises(ValueError):
            upper_antidiagonal({0}, 3)
        with pytest.raises(ValueError):
            upper_antidiagonal({4}, 3)

    def test_symmetric_with_turns_at_bars(self):
        # Diagonal symmetry and East-South turn abscissas = the bar set.
        for n in range(6):
            for bars in subsets(range(1, n + 1)):
                path = upper_antidiagonal(bars, n)
                assert len(path) == 2 * n
                assert is_diagonal_symmetric(path)
                turns = east_south_turns(path)
                assert [x for x, _ in turns] == sorted(bars)
                # symmetry pairs each turn (x, y) with a turn at (y, x)
                assert sorted(y for _, y in turns) == sorted(bars)


class TestPsi:
    def test_worked_example(self):
        assert psi(ANCHOR) == ANCHOR_IMAGE
        assert psi_inverse(ANCHOR_IMAGE) == ANCHOR

    def test_no_bars_keeps_letters_positive(self):
        # the "SSSEEE" path has no cells below it, hence no negative letters
        image = psi(SimplyBarredPermutation((2, 3, 1), frozenset()))
        assert image == (2, 3, 1)

    def test_all_bars_flips_nothing_extra(self):
        image = psi(SimplyBarredPermutation((1, 2, 3), frozenset({1, 2, 3})))
        assert psi_inverse(image) == SimplyBarredPermutation(
            (1, 2, 3), frozenset({1, 2, 3})
        )

    @pytest.mark.parametrize("n", range(6))
    def test_round_trip_exhaustive(self, n):
        seen = set()
        for sbp in enumerate_sbp(n):
            u = psi(sbp)
            assert psi_inverse(u) == sbp
            seen.add(u)
        # surjectivity onto the full signed group
        assert seen == set(enumerate_group(n, "B"))

    @pytest.mark.parametrize("n", range(6))
    def test_inverse_then_forward(self, n):
        for u in enumerate_group(n, "B"):
            assert psi(psi_inverse(u)) == u

    def test_descent_formula_anchor(self):
        assert descB_formula(ANCHOR) == 4
        assert descent_count(ANCHOR_IMAGE, "B") == 4
        assert positive_descB_formula(ANCHOR) == 3

    def test_descent_formulas_exhaustive(self):
        for n in range(5):
            for sbp in enumerate_sbp(n):
                u = psi(sbp)
                dset = descent_set(u, "B")
                assert descB_formula(sbp) == len(dset)
                assert positive_descB_formula(sbp) == len(dset - {0})
                # 0 is a descent of the image iff the bar count is odd
                assert (0 in dset) == (len(sbp.bars) % 2 == 1)

    @given(barred_pairs())
    def test_round_trip_random(self, sbp):
        u = psi(sbp)
        assert psi_inverse(u) == sbp
        assert descB_formula(sbp) == descent_count(u, "B")


class TestXi:
    def test_worked_examples(self):
        assert xi({1, 3}, {0, 1}) == frozenset({3})
        assert xi(set(), {2, 3}) == frozenset({2, 3})
        assert xi({1, 2}, {1, 2}) == frozenset()
        assert xi({1}, {0}) == frozenset({1})

    def test_two_to_one_with_exact_preimages(self):
        for n in range(5):
            for d in subsets(range(1, n + 1)):
                fibers = {}
                for b in subsets(range(n + 1)):
                    fibers.setdefault(xi(d, b), set()).add(b)
                # every subset of [n] is hit exactly twice
                assert set(fibers) == set(subsets(range(1, n + 1)))
                for c, pre in fibers.items():
                    b1, b2 = xi_preimages(d, c)
                    assert pre == {b1, b2}
                    assert 0 not in b1 and 0 in b2

    def test_preimages_reject_zero_in_c(self):
        with pytest.raises(ValueError):
            xi_preimages({1}, {0, 2})


class TestTheta:
    def test_trivial_cases(self):
        w = (3, 1, 2)
        d = descent_set(w, "A")
        assert theta(LooselyBarredPermutation(w, frozenset())).bars == d
        assert theta(LooselyBarredPermutation(w, d)).bars == frozenset()

    def test_descent_sum(self):
        lbp = LooselyBarredPermutation((3, 1, 2), frozenset({0, 2}))
        assert descent_sum(lbp) == 1 + 2

    @pytest.mark.parametrize("n", range(1, 5))
    def test_graded_restrictions_are_bijections(self, n):
        # theta maps the descent-sum-2k slice bijectively onto the class
        # of bar diagrams with k type-B descents, and the (2k+1)-slice
        # onto those with k strictly positive descents.
        lbps = list(enumerate_lbp(n))
        sbps = list(enumerate_sbp(n))
        for k in range(n + 1):
            even_slice = [x for x in lbps if descent_sum(x) == 2 * k]
            image = [theta(x) for x in even_slice]
            target = {x for x in sbps if descB_formula(x) == k}
            assert len(image) == len(set(image)) == len(target)
            assert set(image) == target

            odd_slice = [x for x in lbps if descent_sum(x) == 2 * k + 1]
            image = [theta(x) for x in odd_slice]
            target = {x for x in sbps if positive_descB_formula(x) == k}
            assert len(image) == len(set(image)) == len(target)
            assert set(image) == target

    @pytest.mark.parametrize("n", range(1, 5))
    def test_inverse_round_trips(self, n):
        for sbp in enumerate_sbp(n):
            k_even = descB_formula(sbp)
            pre = theta_inverse(sbp, k_even, "even")
            assert theta(pre) == sbp
            assert descent_sum(pre) == 2 * k_even
            # preimage choice: bars avoid 0 iff the bar set has even size
            assert (0 not in pre.bars) == (len(sbp.bars) % 2 == 0)

            k_odd = positive_descB_formula(sbp)
            pre = theta_inverse(sbp, k_odd, "odd")
            assert theta(pre) == sbp
            assert descent_sum(pre) == 2 * k_odd + 1
            assert (0 in pre.bars) == (len(sbp.bars) % 2 == 0)

    def test_inverse_rejects_wrong_class(self):
        sbp = SimplyBarredPermutation((2, 1), frozenset())
        k = descB_formula(sbp)
        with pytest.raises(ValueError):
            theta_inverse(sbp, k + 1, "even")
        with pytest.raises(ValueError):
            theta_inverse(sbp, positive_descB_formula(sbp) + 1, "odd")
        with pytest.raises(ValueError):
            theta_inverse(sbp, k, "sideways")

    @pytest.mark.parametrize("n", range(1, 6))
    def test_descent_class_sizes(self, n):
        # |{(w,B) : descB_formula = k}| is the type-B Eulerian number,
        # and the loose slices are counted by the binomial convolution.
        by_desc = [0] * (n + 1)
        for sbp in enumerate_sbp(n):
            by_desc[descB_formula(sbp)] += 1
        assert by_desc == [eulerian(n, k, "B") for k in range(n + 1)]

        by_sum = [0] * (2 * n + 2)
        for lbp in enumerate_lbp(n):
            by_sum[descent_sum(lbp)] += 1
        for s in range(2 * n + 2):
            expected = sum(
                eulerian(n, i, "A") * math.comb(n + 1, s - i)
                for i in range(n)
                if 0 <= s - i <= n + 1
            )
            assert by_sum[s] == expected


class TestBlocks:
    def test_worked_example(self):
        assert blocks(ANCHOR) == [(7, 4), (2,), (3, 1, 6), (5,)]
        assert central_block_index(ANCHOR) == 2
        assert central_block(ANCHOR) == (2,)

    def test_degenerate_bars(self):
        w = (3, 1, 2)
        no_bars = SimplyBarredPermutation(w, frozenset())
        assert blocks(no_bars) == [w]
        assert central_block_index(no_bars) == 1
        trailing = SimplyBarredPermutation(w, frozenset({3}))
        assert blocks(trailing) == [w, ()]
        assert central_block_index(trailing) == 1
        assert central_block(trailing) == w

    @pytest.mark.parametrize("n", range(5))
    def test_block_structure_exhaustive(self, n):
        for sbp in enumerate_sbp(n):
            bs = blocks(sbp)
            assert len(bs) == len(sbp.bars) + 1
            assert tuple(itertools.chain.from_iterable(bs)) == sbp.w
            assert all(blk for blk in bs[:-1])
            assert central_block_index(sbp) == (len(sbp.bars) + 2) // 2


class TestClassification:
    def test_worked_examples(self):
        cls = classify_sbp(ANCHOR)
        assert not cls.normal and not cls.compatible
        nice = classify_sbp(SimplyBarredPermutation((1, 2, 3, 4), frozenset({2})))
        assert nice.normal and nice.compatible

    @pytest.mark.parametrize("n", range(1, 6))
    def test_compatible_iff_smooth_iff_big_central_block(self, n):
        for sbp in enumerate_sbp(n):
            cls = classify_sbp(sbp)
            assert cls.compatible == (len(central_block(sbp)) >= 2)
            if n >= 2:  # smoothness reads the first two letters
                assert cls.compatible == is_smooth(psi(sbp))

    def test_normal_means_increasing_blocks(self):
        assert classify_sbp(
            SimplyBarredPermutation((2, 4, 1, 3), frozenset({2}))
        ).normal
        assert not classify_sbp(
            SimplyBarredPermutation((4, 2, 1, 3), frozenset({2}))
        ).normal


class TestEnumerationAndText:
    @pytest.mark.parametrize("n", range(5))
    def test_counts(self, n):
        sbps = list(enumerate_sbp(n))
        assert len(sbps) == len(set(sbps)) == 2**n * math.factorial(n)
        lbps = list(enumerate_lbp(n))
        assert len(lbps) == len(set(lbps)) == 2 ** (n + 1) * math.factorial(n)

    def test_parse_and_format_anchor(self):
        assert parse_sbp("74|2|316|5") == ANCHOR
        assert format_sbp(ANCHOR) == "74|2|316|5"
        assert parse_sbp("7,4|2|3,1,6|5") == ANCHOR

    def test_trailing_bar_is_empty_last_block(self):
        sbp = parse_sbp("12|")
        assert sbp == SimplyBarredPermutation((1, 2), frozenset({2}))
        assert format_sbp(sbp) == "12|"
        assert parse_sbp("12") == SimplyBarredPermutation((1, 2), frozenset())

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_sbp("1||2")
        with pytest.raises(ValueError):
            parse_sbp("|12")
        with pytest.raises(ValueError):
            parse_sbp("1a2")
        with pytest.raises(ValueError):
            parse_sbp("14|2")  # not a permutation of [3]

    def test_round_trip_all_small(self):
        for sbp in enumerate_sbp(3):
            assert parse_sbp(format_sbp(sbp)) == sbp

    def test_two_digit_letters_use_commas(self):
        w = (10, 1, 2, 3, 4, 5, 6, 7, 8, 9)
        sbp = SimplyBarredPermutation(w, frozenset({3}))
        text = format_sbp(sbp)
        assert text == "10,1,2|3,4,5,6,7,8,9"
        assert parse_sbp(text) == sbp
