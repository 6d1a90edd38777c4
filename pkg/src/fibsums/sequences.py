"""Second-order linear recurrence sequences at arbitrary signed index.

Families: Fibonacci F, Lucas L, Pell P, Pell companions Q, Gibonacci (free
integer seeds on the Fibonacci recurrence), and the general Horadam
w_n(a, b; p, q) with w_n = p*w_{n-1} - q*w_{n-2} plus its classical
specializations u = w(0,1), v = w(2,p).

Fast paths: fast doubling for F/L, 2x2 matrix binary exponentiation for
Horadam. Negative indices via the downward recurrence, which for |q| != 1
leaves the integers, hence Fraction results there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .scalars import CharRoots, DomainError, make_roots

SeqValue = Union[int, Fraction]


def neg_one(exponent: int) -> int:
    """(-1)**exponent via parity, valid for negative exponents too."""
    return -1 if exponent & 1 else 1


def _as_int(x: SeqValue) -> SeqValue:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


# ---------------------------------------------------------------------------
# Fibonacci / Lucas, fast doubling
# ---------------------------------------------------------------------------

def _fib_pair(n: int) -> tuple[int, int]:
    # (F_n, F_{n+1}) for n >= 0
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if n & 1:
        return d, c + d
    return c, d


def fib(n: int) -> int:
    """F_n for any integer n; F_{-n} = (-1)^(n-1) F_n."""
    if n >= 0:
        return _fib_pair(n)[0]
    return neg_one(-n - 1) * _fib_pair(-n)[0]


def lucas(n: int) -> int:
    """L_n for any integer n; L_{-n} = (-1)^n L_n."""
    m = abs(n)
    a, b = _fib_pair(m)
    ln = 2 * b - a
    if n >= 0:
        return ln
    return neg_one(m) * ln


# ---------------------------------------------------------------------------
# Horadam sequences
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HoradamParams:
    """Seeds and recurrence coefficients for w_n = p*w_{n-1} - q*w_{n-2}."""

    a: int
    b: int
    p: int
    q: int

    def __post_init__(self):
        if self.p == 0:
            raise DomainError("Horadam recurrence requires p != 0")
        if self.q == 0:
            raise DomainError("Horadam recurrence requires q != 0")

    @property
    def disc(self) -> int:
        return self.p * self.p - 4 * self.q

    def roots(self) -> CharRoots:
        """Characteristic roots; rejects the repeated-root case disc = 0."""
        return make_roots(self.p, self.q)


def _mat_mul(m, n):
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _mat_pow(m, e: int):
    r = (1, 0, 0, 1)
    while e:
        if e & 1:
            r = _mat_mul(r, m)
        m = _mat_mul(m, m)
        e >>= 1
    return r


def horadam_w(params: HoradamParams, n: int) -> SeqValue:
    """w_n exactly; integral for n >= 0, possibly fractional below zero.

    Computed as the bottom row of [[p,-q],[1,0]]^n applied to (w1, w0);
    negative n uses the exact inverse matrix, whose entries live in Z[1/q].
    """
    p, q = params.p, params.q
    if n >= 0:
        m = _mat_pow((p, -q, 1, 0), n)
    else:
        m = _mat_pow((Fraction(0), Fraction(1), Fraction(-1, q), Fraction(p, q)), -n)
    return _as_int(m[2] * params.b + m[3] * params.a)


def lucas_u(p: int, q: int, n: int) -> SeqValue:
    """First-kind Lucas sequence u_n(p,q) = w_n(0,1;p,q)."""
    return horadam_w(HoradamParams(0, 1, p, q), n)


def lucas_v(p: int, q: int, n: int) -> SeqValue:
    """Second-kind Lucas sequence v_n(p,q) = w_n(2,p;p,q)."""
    return horadam_w(HoradamParams(2, p, p, q), n)


def pell(n: int) -> int:
    """Pell numbers: seeds 0,1 on x_{k+1} = 2x_k + x_{k-1}, signed index."""
    return lucas_u(2, -1, n)


def pell_lucas(n: int) -> int:
    """Pell companions: seeds 2,2 on the Pell recurrence, signed index."""
    return lucas_v(2, -1, n)


def gibonacci(seed: tuple[int, int], n: int) -> int:
    """Fibonacci recurrence from arbitrary integer seeds (g0, g1).

    Uses g_n = g0*F_{n-1} + g1*F_n, exact for every signed n.
    """
    g0, g1 = seed
    return g0 * fib(n - 1) + g1 * fib(n)


# ---------------------------------------------------------------------------
# index-range tables for grid sweeps
# ---------------------------------------------------------------------------

class SeqTable:
    """Bidirectional value table for one recurrence, extended on demand.

    Grid sweeps hit the same indices thousands of times; walking the
    recurrence once per index range is far cheaper than per-call matrix
    powers and stays exact (Fractions appear below index 0 when |q| != 1).
    """

    __slots__ = ("p", "q", "_vals", "_lo", "_hi")

    def __init__(self, a: SeqValue, b: SeqValue, p: int, q: int):
        self.p = p
        self.q = q
        self._vals = {0: a, 1: b}
        self._lo = 0
        self._hi = 1

    def __call__(self, n: int) -> SeqValue:
        vals = self._vals
        if n > self._hi:
            p, q = self.p, self.q
            for k in range(self._hi + 1, n + 1):
                vals[k] = p * vals[k - 1] - q * vals[k - 2]
            self._hi = n
        elif n < self._lo:
            p, q = self.p, self.q
            for k in range(self._lo - 1, n - 1, -1):
                vals[k] = _as_int((p * vals[k + 1] - vals[k + 2]) / Fraction(q))
            self._lo = n
        return vals[n]


def fib_table() -> SeqTable:
    return SeqTable(0, 1, 1, -1)


def lucas_table() -> SeqTable:
    return SeqTable(2, 1, 1, -1)
