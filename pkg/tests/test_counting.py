from fractions import Fraction
from itertools import product
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weakfubini import counting as C
from weakfubini import oracle
from weakfubini import perm as P
from weakfubini.errors import IndexOutOfRange
from weakfubini.perm import Permutation

from strategies import permutations_of


def surjection_count(n, k):
    return sum(1 for f in product(range(k), repeat=n) if len(set(f)) == k)


class TestFibonacci:
    @pytest.mark.parametrize("ell,value", [(1, 1), (2, 1), (5, 5), (12, 144)])
    def test_values(self, ell, value):
        assert C.fibonacci(ell) == value

    def test_recurrence(self):
        for ell in range(3, 91):
            assert C.fibonacci(ell) == C.fibonacci(ell - 1) + C.fibonacci(ell - 2)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            C.fibonacci(0)


class TestStirling:
    def test_values(self):
        assert C.stirling2(3, 2) == 3
        assert C.stirling2(0, 0) == 1
        assert all(C.stirling2(n, n) == 1 for n in range(10))
        assert all(C.stirling2(n, 0) == 0 for n in range(1, 10))

    @pytest.mark.parametrize("n", range(0, 7))
    def test_against_surjections(self, n):
        for k in range(0, n + 1):
            assert C.stirling2(n, k) * factorial(k) == surjection_count(n, k)


class TestFubini:
    def test_values(self):
        assert C.fubini_number(1) == 1
        assert C.fubini_number(3) == 13
        assert C.fubini_number(5) == 541

    @pytest.mark.parametrize("n", range(1, 7))
    def test_against_brute_rankings(self, n):
        assert C.fubini_number(n) == sum(1 for _ in oracle.brute_tuples(n, "fubini"))


class TestClosedForm:
    def test_values(self):
        assert C.f_closed(4, 2) == 6
        assert C.f_closed(5, 1) == 240
        assert all(C.f_closed(n, 0) == factorial(n) for n in range(12))
        assert C.f_closed(5, 3) == 0

    @pytest.mark.parametrize("n", range(0, 26))
    def test_literal_formula(self, n):
        for k in range(0, n + 1):
            literal = Fraction(factorial(n), 2 ** k) * comb(n - k, k)
            assert literal.denominator == 1
            assert C.f_closed(n, k) == literal

    @pytest.mark.parametrize("n", range(0, 26))
    def test_row_sum_is_total(self, n):
        assert sum(C.f_closed(n, k) for k in range(n // 2 + 1)) == C.f_total(n)

    @pytest.mark.parametrize("n", range(2, 26))
    def test_low_rank_specialisations(self, n):
        assert C.f_closed(n, 1) == factorial(n) * (n - 1) // 2
        assert 8 * C.f_closed(n, 2) == factorial(n) * (n - 2) * (n - 3)

    def test_egf_coefficients(self):
        # 1/(1 - x - (q/2) x^2) = sum_n (x + (q/2) x^2)^n; compare x^n q^k coefficients times n!
        N = 12
        coeff = {(0, 0): Fraction(1)}
        power = {(0, 0): Fraction(1)}
        for _ in range(N):
            nxt = {}
            for (deg, k), c in power.items():
                for (d, dk, w) in ((1, 0, Fraction(1)), (2, 1, Fraction(1, 2))):
                    if deg + d <= N:
                        nxt[(deg + d, k + dk)] = nxt.get((deg + d, k + dk), 0) + c * w
            power = nxt
            for key, c in power.items():
                coeff[key] = coeff.get(key, 0) + c
        for n in range(N + 1):
            for k in range(n + 1):
                assert coeff.get((n, k), 0) * factorial(n) == C.f_closed(n, k)


class TestTotal:
    @pytest.mark.parametrize("n,value", [(0, 1), (1, 1), (2, 3), (3, 12), (7, 35280)])
    def test_values(self, n, value):
        assert C.f_total(n) == value


class TestFiberCounts:
    def brute(self, p):
        asc = sorted(P.ascent_set(p))
        return sum(
            1
            for mask in range(1 << len(asc))
            if all(
                not (mask >> a & 1 and mask >> b & 1) or asc[b] - asc[a] >= 2
                for a in range(len(asc))
                for b in range(a + 1, len(asc))
            )
        )

    def test_values(self):
        assert C.fiber_count(Permutation.parse("412356")) == 8
        assert C.fiber_count(Permutation.parse("4321")) == 1
        assert C.fiber_count(Permutation.parse("1324")) == 4
        assert C.fiber_count_nontrivial(Permutation.parse("412356")) == 7
        assert C.fiber_count_nontrivial(Permutation.parse("4321")) == 0

    @given(permutations_of(max_n=12))
    def test_against_subset_brute_force(self, p):
        assert C.fiber_count(p) == self.brute(p)

    @pytest.mark.parametrize("n", range(1, 20))
    def test_identity(self, n):
        assert C.fiber_count_nontrivial(Permutation.identity(n)) == C.fibonacci(n + 1) - 1

    def test_generator_values(self):
        assert C.generator_fiber_count(4, 2) == 4
        assert C.generator_fiber_count(6, 3) == 9
        assert all(C.generator_fiber_count(n, 1) == C.fibonacci(n) for n in range(2, 15))
        with pytest.raises(IndexOutOfRange):
            C.generator_fiber_count(4, 4)

    @given(st.integers(2, 30), st.data())
    def test_generator_matches_fiber_count(self, n, data):
        i = data.draw(st.integers(1, n - 1))
        assert C.generator_fiber_count(n, i) == C.fiber_count(P.simple_transposition(n, i))


def test_weakly_increasing_count():
    assert [C.weakly_increasing_ufr_count(n) for n in (1, 2, 6)] == [1, 2, 13]
