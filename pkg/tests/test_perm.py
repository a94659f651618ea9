from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weakfubini import perm as P
from weakfubini.errors import CapExceeded, DuplicateValue, IndexOutOfRange, InvalidPermutation, LengthMismatch
from weakfubini.perm import Permutation

from strategies import permutations_of


def pp(text):
    return Permutation.parse(text)


class TestConstruction:
    def test_from_one_line(self):
        assert P.from_one_line([2, 3, 1, 4]) == pp("2314")
        assert str(P.from_one_line([1])) == "1"

    def test_duplicate_rejected(self):
        with pytest.raises(DuplicateValue):
            P.from_one_line([1, 1, 2])

    @pytest.mark.parametrize("bad", [[], [0, 1], [1, 3], [2, 2.0]])
    def test_invalid_rejected(self, bad):
        with pytest.raises(InvalidPermutation):
            P.from_one_line(bad)

    def test_text_forms(self):
        big = Permutation((10,) + tuple(range(1, 10)))
        assert str(big) == "10,1,2,3,4,5,6,7,8,9"
        assert Permutation.parse(str(big)) == big
        assert Permutation.parse("(2,3,1)") == pp("231")

    def test_garbage_text(self):
        with pytest.raises(InvalidPermutation):
            Permutation.parse("12a")


class TestSimpleTransposition:
    @pytest.mark.parametrize("n,i,expected", [(4, 2, "1324"), (2, 1, "21"), (6, 5, "123465")])
    def test_examples(self, n, i, expected):
        assert P.simple_transposition(n, i) == pp(expected)

    @pytest.mark.parametrize("n,i", [(4, 0), (4, 4), (1, 1)])
    def test_out_of_range(self, n, i):
        with pytest.raises(IndexOutOfRange):
            P.simple_transposition(n, i)


class TestInverseCompose:
    @pytest.mark.parametrize("p,expected", [("412356", "234156"), ("451623", "356124"), ("12345", "12345")])
    def test_inverse(self, p, expected):
        assert P.inverse(pp(p)) == pp(expected)

    def test_compose_with_generator_swaps_positions(self):
        assert pp("2314") * P.s(4, 1) == pp("3214")

    def test_figure_interval_maximum(self):
        p = pp("451623")
        assert p * P.s(6, 1) * P.s(6, 3) * P.s(6, 5) == pp("546132")

    def test_identity_is_neutral(self):
        p = pp("35142")
        assert p * Permutation.identity(5) == p

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            P.compose(pp("12"), pp("123"))

    @given(permutations_of())
    def test_inverse_involution(self, p):
        assert P.inverse(P.inverse(p)) == p
        assert (p * P.inverse(p)).is_identity()

    @given(permutations_of(min_n=2), st.data())
    def test_right_generator_touches_two_positions(self, p, data):
        i = data.draw(st.integers(1, p.n - 1))
        q = p * P.s(p.n, i)
        changed = [j for j in range(1, p.n + 1) if p(j) != q(j)]
        assert changed == [i, i + 1]
        assert q == P.swap_positions(p, i)


class TestAscentsDescents:
    def test_ascent_examples(self):
        assert P.ascent_set(pp("412356")) == {2, 3, 4, 5}
        assert P.ascent_set(pp("451623")) == {1, 3, 5}
        assert P.ascent_set(pp("54321")) == set()

    def test_descent_examples(self):
        assert P.descent_set(pp("2314")) == {2}
        assert P.descent_set(pp("12345")) == set()
        assert P.descent_set(pp("321")) == {1, 2}

    def test_ascent_blocks(self):
        assert P.ascent_blocks(pp("412356")) == ((2, 3, 4, 5),)
        assert P.ascent_blocks(pp("1324")) == ((1,), (3,))
        assert P.ascent_blocks(pp("321")) == ()

    @given(permutations_of())
    def test_ascents_and_descents_partition(self, p):
        asc, des = P.ascent_set(p), P.descent_set(p)
        assert not asc & des
        assert asc | des == set(range(1, p.n))

    @given(permutations_of())
    def test_blocks_partition_ascents(self, p):
        blocks = P.ascent_blocks(p)
        flat = [i for b in blocks for i in b]
        assert flat == sorted(P.ascent_set(p))
        for b in blocks:
            assert list(b) == list(range(b[0], b[-1] + 1))
        for b, c in zip(blocks, blocks[1:]):
            assert c[0] >= b[-1] + 2


class TestEnumeration:
    def test_small(self):
        assert [str(p) for p in P.all_permutations(1)] == ["1"]
        assert [str(p) for p in P.all_permutations(3)] == ["123", "132", "213", "231", "312", "321"]
        assert sum(1 for _ in P.all_permutations(5)) == 120

    @pytest.mark.parametrize("n", range(1, 9))
    def test_counts_and_order(self, n):
        perms = list(P.all_permutations(n))
        assert len(perms) == len(set(perms)) == factorial(n)
        assert perms == sorted(perms)

    def test_cap(self):
        with pytest.raises(CapExceeded):
            next(P.all_permutations(21))


class TestNonconsecutiveSubsets:
    def test_paper_list(self):
        assert P.nonconsecutive_subsets({2, 3, 4, 5}) == [
            (), (2,), (3,), (4,), (5,), (2, 4), (2, 5), (3, 5),
        ]

    @pytest.mark.parametrize("m", range(0, 12))
    def test_against_bitmask_enumeration(self, m):
        items = list(range(1, m + 1))
        brute = []
        for mask in range(1 << m):
            if mask & (mask >> 1) == 0:
                brute.append(tuple(x for k, x in enumerate(items) if mask >> k & 1))
        got = P.nonconsecutive_subsets(items)
        assert sorted(got) == sorted(brute)
        assert len(got) == len(set(got))
