"""Catalog entries P01-P06: coefficient-level polynomial identities.

Sides here are canonical polynomials, so equality is decidable without
sampling. Two displays divide by x or by x*F_r(x); those entries verify
the sides multiplied through by that factor, which turns each into a
polynomial identity (recorded in the statement text).
"""

from __future__ import annotations

from fractions import Fraction

from ..polynomials import (POLY_ONE, POLY_X, cheb_T, cheb_U, fib_poly,
                           lucas_poly, poly_add, poly_mul, poly_pow,
                           poly_scale, poly_sub, poly_eval)
from ..scalars import QuadExt
from ..sequences import neg_one
from .engine import Entry, Guard, Outcome, Side, axis, irange

GUARD_N = Guard("n >= 0", ("n",), lambda ctx, b: b["n"] >= 0)


def _powers(base, count):
    # base^0 .. base^count, one multiplication per step
    out = [POLY_ONE]
    for _ in range(count):
        out.append(poly_mul(out[-1], base))
    return out


def _p01(ctx, b):
    n = b["n"]
    s1 = ()
    for j in range(n + 1):
        s1 = poly_add(s1, poly_scale(neg_one(j), lucas_poly(n - 2 * j)))
    s2 = ()
    xp = _powers(POLY_X, n)
    for j in range(n + 1):
        s2 = poly_add(s2, poly_scale(Fraction(1, 2 ** j),
                                     poly_mul(xp[j], lucas_poly(n - j))))
    s3 = poly_scale(2, fib_poly(n + 1))
    return Outcome(sides=[Side("alternating sum", s1), Side("halved sum", s2),
                          Side("closed form", s3)])


P01 = Entry(
    id="P01", kind="identity",
    statement="sum_{j=0..n} (-1)^j L_(n-2j)(x) "
              "= sum_{j=0..n} (x/2)^j L_(n-j)(x) = 2 F_(n+1)(x)",
    params=("n",), domain="n >= 0", guards=(GUARD_N,), evaluate=_p01,
    grid=(axis("n", irange(0, 15)),),
)


def _p02(ctx, b):
    n = b["n"]
    P, Q = ctx.u(2, -1), ctx.v(2, -1)
    s1 = sum(neg_one(j) * Q(n - 2 * j) for j in range(n + 1))
    s2 = sum(Q(n - j) for j in range(n + 1))      # (x/2)^j = 1 at x = 2
    s3 = 2 * P(n + 1)
    return Outcome(sides=[Side("alternating sum", s1), Side("unit-weight sum", s2),
                          Side("closed form", s3)])


P02 = Entry(
    id="P02", kind="identity",
    statement="sum_{j=0..n} (-1)^j Q_(n-2j) = sum_{j=0..n} Q_(n-j) = 2 P_(n+1) "
              "(Pell specialization of P01 at x = 2)",
    params=("n",), domain="n >= 0", guards=(GUARD_N,), evaluate=_p02,
    grid=(axis("n", irange(0, 15)),),
)


def _p03(ctx, b):
    n = b["n"]
    s1 = ()
    for j in range(n + 1):
        s1 = poly_add(s1, lucas_poly(2 * (n - 2 * j)))
    s1 = poly_mul(POLY_X, s1)
    w = (2, 0, 1)                                  # x^2 + 2
    wp = _powers(w, n)
    s2 = ()
    for j in range(n + 1):
        s2 = poly_add(s2, poly_scale(Fraction(1, 2 ** j),
                                     poly_mul(wp[j], lucas_poly(2 * (n - j)))))
    s2 = poly_mul(POLY_X, s2)
    s3 = poly_scale(2, fib_poly(2 * (n + 1)))
    return Outcome(sides=[Side("x * alternating-index sum", s1),
                          Side("x * halved sum", s2),
                          Side("closed form", s3)])


P03 = Entry(
    id="P03", kind="identity",
    statement="x sum_{j=0..n} L_(2(n-2j))(x) "
              "= x sum_{j=0..n} ((x^2+2)/2)^j L_(2(n-j))(x) = 2 F_(2(n+1))(x) "
              "(both sums multiplied by x; the display divides the closed form by x)",
    params=("n",), domain="n >= 0", guards=(GUARD_N,), evaluate=_p03,
    grid=(axis("n", irange(0, 15)),),
)


def _p04(ctx, b):
    r, n = b["r"], b["n"]
    fr1, fr_1 = fib_poly(r + 1), fib_poly(r - 1)
    lr, fr = lucas_poly(r), fib_poly(r)
    pw1, pw_1, pwl = _powers(fr1, n + 1), _powers(fr_1, n + 1), _powers(lr, n)
    s1 = ()
    for j in range(n + 1):
        s1 = poly_add(s1, poly_mul(pw_1[j], pw1[n - j]))
    s1 = poly_scale(2, poly_mul(poly_mul(POLY_X, fr), s1))
    s2 = ()
    for j in range(n + 1):
        s2 = poly_add(s2, poly_scale(Fraction(1, 2 ** j),
                                     poly_mul(pwl[j], poly_add(pw1[n - j], pw_1[n - j]))))
    s2 = poly_mul(poly_mul(POLY_X, fr), s2)
    s3 = poly_scale(2, poly_sub(pw1[n + 1], pw_1[n + 1]))
    return Outcome(sides=[Side("2 x F_r(x) * power sum", s1),
                          Side("x F_r(x) * halved sum", s2),
                          Side("closed form", s3)])


P04 = Entry(
    id="P04", kind="identity",
    statement="2 x F_r(x) sum_{j=0..n} F_(r-1)(x)^j F_(r+1)(x)^(n-j) "
              "= x F_r(x) sum_{j=0..n} (L_r(x)/2)^j (F_(r+1)(x)^(n-j) + F_(r-1)(x)^(n-j)) "
              "= 2 (F_(r+1)(x)^(n+1) - F_(r-1)(x)^(n+1)) "
              "(both sums multiplied by x F_r(x), which the display divides by)",
    params=("r", "n"), domain="r >= 1; n >= 0",
    guards=(GUARD_N, Guard("r >= 1", ("r",), lambda ctx, b: b["r"] >= 1)),
    evaluate=_p04,
    grid=(axis("r", irange(1, 6)), axis("n", irange(0, 15))),
)


def _p05(ctx, b):
    n = b["n"]
    s1 = ()
    for j in range(n + 1):
        s1 = poly_add(s1, cheb_T(n - 2 * j))
    xp = _powers(POLY_X, n)
    s2 = ()
    for j in range(n + 1):
        s2 = poly_add(s2, poly_mul(xp[j], cheb_T(n - j)))
    return Outcome(sides=[Side("folded sum", s1), Side("convolution sum", s2),
                          Side("closed form", cheb_U(n))])


P05 = Entry(
    id="P05", kind="identity",
    statement="sum_{j=0..n} T_(n-2j)(x) = sum_{j=0..n} x^j T_(n-j)(x) = U_n(x)",
    params=("n",), domain="n >= 0", guards=(GUARD_N,), evaluate=_p05,
    grid=(axis("n", irange(0, 20)),),
)


def _p06(ctx, b):
    r, n = b["r"], b["n"]
    F, L = ctx.fib(), ctx.luc()
    sides = []
    if r % 2:
        arg = L(r)
        sides.append(Side("L_n evaluated at L_r", poly_eval(lucas_poly(n), arg),
                          group="lucas-map"))
        sides.append(Side("L_(rn)", L(r * n), group="lucas-map"))
        sides.append(Side("F_r * F_n evaluated at L_r",
                          F(r) * poly_eval(fib_poly(n), arg), group="fib-map"))
        sides.append(Side("F_(rn)", F(r * n), group="fib-map"))
    else:
        # even r routes through the imaginary unit: argument i*L_r
        i = QuadExt(0, 1, -1)
        arg = i * L(r)
        sides.append(Side("L_n evaluated at i L_r", poly_eval(lucas_poly(n), arg),
                          group="lucas-map"))
        sides.append(Side("i^n L_(rn)", i ** n * L(r * n), group="lucas-map"))
        sides.append(Side("F_r * F_n evaluated at i L_r",
                          F(r) * poly_eval(fib_poly(n), arg), group="fib-map"))
        sides.append(Side("i^(n-1) F_(rn)", i ** (n - 1) * F(r * n), group="fib-map"))
    return Outcome(sides=sides)


P06 = Entry(
    id="P06", kind="identity",
    statement="odd r: L_n(L_r) = L_(rn) and F_r F_n(L_r) = F_(rn); "
              "even r: L_n(i L_r) = i^n L_(rn) and F_r F_n(i L_r) = i^(n-1) F_(rn) "
              "with i^2 = -1",
    params=("r", "n"), domain="r >= 1; n >= 0",
    guards=(GUARD_N, Guard("r >= 1", ("r",), lambda ctx, b: b["r"] >= 1)),
    evaluate=_p06,
    grid=(axis("r", irange(1, 6)), axis("n", irange(0, 15))),
)


POLY_ENTRIES = [P01, P02, P03, P04, P05, P06]
