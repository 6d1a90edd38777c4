"""Dense exact polynomials and the Fibonacci/Lucas/Chebyshev families.

A polynomial is a tuple of coefficients in ascending powers, trailing
zeros trimmed; the zero polynomial is the empty tuple. Coefficients are
ints, Fractions, or QuadExt elements (the Gaussian-argument checks put
sqrt(-1) into coefficients), all combinable through operator overloading.

Signed-index conventions extend the families beyond the usual n >= 0:
F_{-n}(x) = (-1)^(n-1) F_n(x), L_{-n}(x) = (-1)^n L_n(x), T_{-n} = T_n,
U_{-1} = 0 and U_{-n} = -U_{n-2}. These are forced by the Binet forms and
are exactly what the left sums with negative inner index require.
"""

from __future__ import annotations

from fractions import Fraction

from .sequences import neg_one

Poly = tuple

POLY_ZERO: Poly = ()
POLY_ONE: Poly = (1,)
POLY_X: Poly = (0, 1)


def _trim(coeffs) -> Poly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly(*coeffs) -> Poly:
    """Polynomial from ascending coefficients, canonicalized."""
    return _trim(coeffs)


def poly_add(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                 for i in range(n))


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, poly_scale(-1, b))


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return POLY_ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _trim(out)


def poly_scale(c, a: Poly) -> Poly:
    return _trim(c * x for x in a)


def poly_pow(a: Poly, n: int) -> Poly:
    if n < 0:
        raise ValueError("negative polynomial power")
    r: Poly = POLY_ONE
    base = a
    while n:
        if n & 1:
            r = poly_mul(r, base)
        base = poly_mul(base, base)
        n >>= 1
    return r


def poly_eval(p: Poly, x):
    """Horner evaluation; x may be int, Fraction, or QuadExt."""
    r = 0
    for c in reversed(p):
        r = r * x + c
    return r


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------

def fib_poly(n: int) -> Poly:
    """Fibonacci polynomial F_n(x): seeds 0, 1, recurrence x*prev + prev2."""
    if n < 0:
        return poly_scale(neg_one(-n - 1), fib_poly(-n))
    a, b = POLY_ZERO, POLY_ONE
    for _ in range(n):
        a, b = b, poly_add(poly_mul(POLY_X, b), a)
    return a


def lucas_poly(n: int) -> Poly:
    """Lucas polynomial L_n(x): seeds 2, x on the same recurrence."""
    if n < 0:
        return poly_scale(neg_one(n), lucas_poly(-n))
    a, b = (2,), POLY_X
    for _ in range(n):
        a, b = b, poly_add(poly_mul(POLY_X, b), a)
    return a


_TWO_X: Poly = (0, 2)


def cheb_T(n: int) -> Poly:
    """Chebyshev T_n(x): seeds 1, x, recurrence 2x*prev - prev2; T_{-n} = T_n."""
    n = abs(n)
    a, b = POLY_ONE, POLY_X
    for _ in range(n):
        a, b = b, poly_sub(poly_mul(_TWO_X, b), a)
    return a


def cheb_U(n: int) -> Poly:
    """Chebyshev U_n(x): seeds 1, 2x; U_{-1} = 0, U_{-n} = -U_{n-2}."""
    if n < 0:
        if n == -1:
            return POLY_ZERO
        return poly_scale(-1, cheb_U(-n - 2))
    a, b = POLY_ONE, _TWO_X
    for _ in range(n):
        a, b = b, poly_sub(poly_mul(_TWO_X, b), a)
    return a


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def render_poly(p: Poly) -> str:
    """Descending-power text with exact coefficients, e.g. '4x^2 - 1'."""
    from .scalars import render_scalar

    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        cs = render_scalar(c)
        neg = cs.startswith("-")
        mag = cs[1:] if neg else cs
        if k == 0:
            term = mag
        else:
            xk = "x" if k == 1 else f"x^{k}"
            term = xk if mag == "1" else f"{mag}{xk}"
        if not parts:
            parts.append(f"-{term}" if neg else term)
        else:
            parts.append(f"- {term}" if neg else f"+ {term}")
    return " ".join(parts)
