"""Exact scalar arithmetic: rationals and quadratic extensions Q(sqrt(D)).

Rationals are stdlib ``fractions.Fraction`` (already canonical: reduced,
positive denominator). ``QuadExt`` adds numbers of the form a + b*sqrt(D)
for a fixed non-square integer D; equality is componentwise, which is sound
precisely because sqrt(D) is irrational. Floating point is never used.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple, Union

RationalLike = Union[int, Fraction]


class DomainError(ArithmeticError):
    """An operation left its mathematical domain (zero divisor, mixed D, ...)."""


def _is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


# ---------------------------------------------------------------------------
# rational surface
# ---------------------------------------------------------------------------

def rat_op(kind: str, u: RationalLike, v: RationalLike) -> Fraction:
    """Apply one rational-arithmetic operation, always in canonical form.

    kind is one of add, sub, mul, div. Division by zero is a DomainError.
    """
    u, v = Fraction(u), Fraction(v)
    if kind == "add":
        return u + v
    if kind == "sub":
        return u - v
    if kind == "mul":
        return u * v
    if kind == "div":
        if v == 0:
            raise DomainError("rational division by zero")
        return u / v
    raise ValueError(f"unknown rational op {kind!r}")


# ---------------------------------------------------------------------------
# quadratic extension
# ---------------------------------------------------------------------------

class QuadExt:
    """a + b*sqrt(d) with Fraction components and fixed non-square integer d.

    Supports mixed arithmetic with int/Fraction (embedded as b = 0). Elements
    of different extensions never mix; that is a DomainError, not a coercion.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a: RationalLike, b: RationalLike, d: int):
        if d == 0 or _is_square(d):
            raise DomainError(f"QuadExt requires a non-square d, got {d}")
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise DomainError(f"mixed extensions sqrt({self.d}) and sqrt({other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self.d)
        return NotImplemented

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(o.a - self.a, o.b - self.b, self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.a * o.a + self.b * o.b * self.d,
                       self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o._inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self._inverse()

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self._inverse()
        result = QuadExt(1, 0, self.d)
        e = abs(n)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def _inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise DomainError("inverse of an element with zero norm")
        return QuadExt(self.a / n, -self.b / n, self.d)

    # structure ------------------------------------------------------------

    def conj(self) -> "QuadExt":
        """Galois conjugate a - b*sqrt(d)."""
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm a^2 - d*b^2 (self times its conjugate)."""
        return self.a * self.a - self.b * self.b * self.d

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                # distinct non-square extensions only share the rationals
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        return f"QuadExt({self.a!r}, {self.b!r}, {self.d})"

    def __str__(self):
        return render_scalar(self)


def quad_op(kind: str, u: QuadExt, v=None):
    """One QuadExt operation: add, sub, mul, div take two operands, conj one."""
    if kind == "conj":
        return u.conj()
    if v is None:
        raise ValueError(f"op {kind!r} needs a second operand")
    if kind == "add":
        return u + v
    if kind == "sub":
        return u - v
    if kind == "mul":
        return u * v
    if kind == "div":
        return u / v
    raise ValueError(f"unknown quadratic op {kind!r}")


def quad_pow(u: QuadExt, n: int) -> QuadExt:
    """u**n for any integer n; negative n needs nonzero norm."""
    return u ** n


# ---------------------------------------------------------------------------
# characteristic roots of x^2 - p x + q
# ---------------------------------------------------------------------------

class CharRoots(NamedTuple):
    """Roots tau, sigma and their difference delta = tau - sigma.

    All three are QuadExt over d = p^2 - 4q when that is not a perfect
    square, and plain Fractions when it is (sound componentwise equality
    would fail for a square d, so the rational representation is used).
    """

    tau: Union[QuadExt, Fraction]
    sigma: Union[QuadExt, Fraction]
    delta: Union[QuadExt, Fraction]

    @property
    def is_rational(self) -> bool:
        return isinstance(self.tau, Fraction)


def make_roots(p: int, q: int) -> CharRoots:
    """Roots of x^2 - p x + q = 0, exactly.

    Requires q != 0 and p^2 - 4q != 0 (distinct, invertible roots). The
    discriminant's sign does not matter: negative d gives an imaginary
    quadratic extension with the same componentwise arithmetic.
    """
    if q == 0:
        raise DomainError("q = 0 gives a degenerate recurrence (zero root)")
    d = p * p - 4 * q
    if d == 0:
        raise DomainError("repeated root: p^2 - 4q = 0")
    if _is_square(d):
        s = math.isqrt(d)
        return CharRoots(Fraction(p + s, 2), Fraction(p - s, 2), Fraction(s))
    tau = QuadExt(Fraction(p, 2), Fraction(1, 2), d)
    sigma = QuadExt(Fraction(p, 2), Fraction(-1, 2), d)
    return CharRoots(tau, sigma, QuadExt(0, 1, d))


def fib_roots() -> CharRoots:
    """alpha, beta, sqrt5: the classical golden-ratio pair over Q(sqrt 5)."""
    return make_roots(1, -1)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def render_scalar(value) -> str:
    """Exact text form: integers bare, fractions as num/den, QuadExt spelled out."""
    if isinstance(value, QuadExt):
        if value.b == 0:
            return render_scalar(value.a)
        a, b, d = value.a, value.b, value.d
        root = f"sqrt({d})"
        if b == 1:
            bs = root
        elif b == -1:
            bs = f"-{root}"
        else:
            bs = f"{render_scalar(b)}*{root}"
        if a == 0:
            return bs
        sign = "+" if b > 0 else "-"
        mag = bs.lstrip("-")
        return f"{render_scalar(a)} {sign} {mag}"
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"
