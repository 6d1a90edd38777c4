"""Sequence families: frozen values, signed indices, oracle equivalence."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibsums.scalars import DomainError, make_roots
from fibsums.sequences import (HoradamParams, SeqTable, fib, fib_table,
                               gibonacci, horadam_w, lucas, lucas_table,
                               lucas_u, lucas_v, neg_one, pell, pell_lucas)

# classic opening terms (textbook values)
FIB = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
LUCAS = [2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123]
PELL = [0, 1, 2, 5, 12, 29, 70]
PELL_LUCAS = [2, 2, 6, 14, 34, 82]


class TestNegOne:
    @pytest.mark.parametrize("e,sign", [(0, 1), (1, -1), (2, 1), (-3, -1),
                                        (-4, 1), (7, -1)])
    def test_parity_sign(self, e, sign):
        assert neg_one(e) == sign


class TestClassicFamilies:
    def test_fib_frozen(self):
        assert [fib(n) for n in range(11)] == FIB
        assert fib(10) == 55
        assert fib(50) == 12586269025
        assert fib(-4) == -3

    def test_lucas_frozen(self):
        assert [lucas(n) for n in range(11)] == LUCAS
        assert lucas(10) == 123
        assert lucas(-3) == -4
        assert lucas(-4) == 7

    def test_pell_frozen(self):
        assert [pell(n) for n in range(7)] == PELL
        assert pell(5) == 29
        assert pell(-2) == -2

    def test_pell_lucas_frozen(self):
        assert [pell_lucas(n) for n in range(6)] == PELL_LUCAS
        assert pell_lucas(4) == 34
        assert pell_lucas(-2) == 6
        assert pell_lucas(-3) == -14

    def test_reflection_rules(self):
        for n in range(61):
            assert fib(-n) == neg_one(n - 1) * fib(n)
            assert lucas(-n) == neg_one(n) * lucas(n)
            assert pell(-n) == neg_one(n - 1) * pell(n)
            assert pell_lucas(-n) == neg_one(n) * pell_lucas(n)

    def test_recurrence_through_zero(self):
        for n in range(-30, 30):
            assert fib(n + 2) == fib(n + 1) + fib(n)
            assert lucas(n + 2) == lucas(n + 1) + lucas(n)
            assert pell(n + 2) == 2 * pell(n + 1) + pell(n)
            assert pell_lucas(n + 2) == 2 * pell_lucas(n + 1) + pell_lucas(n)

    def test_integer_type(self):
        assert all(isinstance(fib(n), int) for n in range(-10, 11))
        assert all(isinstance(pell(n), int) for n in range(-10, 11))


class TestGibonacci:
    def test_frozen_values(self):
        assert gibonacci((2, 1), 4) == 7
        assert gibonacci((3, 5), 3) == 13
        assert gibonacci((2, 1), -3) == -4

    def test_specializes_to_fib_and_lucas(self):
        for n in range(-20, 21):
            assert gibonacci((0, 1), n) == fib(n)
            assert gibonacci((2, 1), n) == lucas(n)

    def test_recurrence(self):
        for n in range(-10, 10):
            assert gibonacci((4, -7), n + 2) == \
                gibonacci((4, -7), n + 1) + gibonacci((4, -7), n)


class TestHoradam:
    def test_specializes_to_fib(self):
        params = HoradamParams(0, 1, 1, -1)
        for n in range(-15, 16):
            value = horadam_w(params, n)
            assert value == fib(n)
            assert isinstance(value, int)

    def test_fractional_below_zero_frozen(self):
        params = HoradamParams(2, 3, 3, 2)     # w_n = 2^n + 1
        assert horadam_w(params, 4) == 17
        assert isinstance(horadam_w(params, 4), int)
        assert horadam_w(params, -1) == Fraction(3, 2)
        assert horadam_w(params, -2) == Fraction(5, 4)

    def test_lucas_sequences_frozen(self):
        # roots 2 and 1: u_n = 2^n - 1, v_n = 2^n + 1
        assert lucas_u(3, 2, 4) == 15
        assert lucas_v(3, 2, 2) == 5
        for n in range(13):
            assert lucas_u(3, 2, n) == 2 ** n - 1
            assert lucas_v(3, 2, n) == 2 ** n + 1

    def test_pell_is_a_lucas_sequence(self):
        for n in range(-8, 9):
            assert lucas_u(2, -1, n) == pell(n)
            assert lucas_v(2, -1, n) == pell_lucas(n)

    def test_degenerate_coefficients_rejected(self):
        with pytest.raises(DomainError):
            HoradamParams(0, 1, 0, 1)
        with pytest.raises(DomainError):
            HoradamParams(0, 1, 1, 0)

    def test_disc_and_roots(self):
        params = HoradamParams(1, 2, 3, 2)
        assert params.disc == 1
        assert params.roots().is_rational
        with pytest.raises(DomainError):
            HoradamParams(0, 1, 2, 1).roots()   # repeated root

    def test_matches_naive_oracle(self, naive_horadam):
        rng = random.Random(411)
        for _ in range(12):
            a, b = rng.randint(-5, 5), rng.randint(-5, 5)
            p = rng.choice([k for k in range(-5, 6) if k])
            q = rng.choice([k for k in range(-5, 6) if k])
            params = HoradamParams(a, b, p, q)
            for n in range(-40, 41):
                assert horadam_w(params, n) == naive_horadam(a, b, p, q, n), \
                    (a, b, p, q, n)

    @pytest.mark.parametrize("p,q", [(1, -1), (3, 2), (2, -1), (1, 1), (-2, -3)])
    def test_binet_forms(self, p, q):
        tau, sigma, delta = make_roots(p, q)
        for n in range(-10, 11):
            assert delta * lucas_u(p, q, n) == tau ** n - sigma ** n
            assert lucas_v(p, q, n) == tau ** n + sigma ** n

    @settings(max_examples=60)
    @given(a=st.integers(-6, 6), b=st.integers(-6, 6),
           p=st.integers(-4, 4).filter(bool), q=st.integers(-4, 4).filter(bool),
           n=st.integers(-25, 25))
    def test_recurrence_property(self, a, b, p, q, n):
        params = HoradamParams(a, b, p, q)
        assert horadam_w(params, n) == \
            p * horadam_w(params, n - 1) - q * horadam_w(params, n - 2)


class TestSeqTable:
    def test_matches_fib_and_lucas_in_any_access_order(self):
        indices = list(range(-25, 26))
        random.Random(7).shuffle(indices)
        ft, lt = fib_table(), lucas_table()
        for n in indices:
            assert ft(n) == fib(n)
            assert lt(n) == lucas(n)

    def test_matches_horadam_with_fractional_tail(self):
        table = SeqTable(2, 3, 3, 2)
        params = HoradamParams(2, 3, 3, 2)
        for n in range(-8, 9):
            assert table(n) == horadam_w(params, n)

    def test_values_are_cached(self):
        table = fib_table()
        assert table(30) is table(30)
