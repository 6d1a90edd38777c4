"""Shared fixtures: independent naive oracles used across test modules."""

from fractions import Fraction

import pytest


@pytest.fixture(scope="session")
def naive_horadam():
    """Plain-loop reference for w_n = p*w_{n-1} - q*w_{n-2}, exact Fractions.

    Deliberately the dumbest possible implementation (one recurrence step
    per index, no doubling, no matrices) so it is an independent oracle for
    the fast paths in fibsums.sequences.
    """

    def _naive(a, b, p, q, n):
        lo, hi = Fraction(a), Fraction(b)          # (w_0, w_1)
        if n >= 0:
            if n == 0:
                return lo
            for _ in range(n - 1):
                lo, hi = hi, p * hi - q * lo
            return hi
        for _ in range(-n):                        # w_{k-1} = (p*w_k - w_{k+1}) / q
            lo, hi = (p * lo - hi) / q, lo
        return lo

    return _naive
