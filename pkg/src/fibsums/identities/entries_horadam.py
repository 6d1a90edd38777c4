"""Catalog entries LEM2-LEM6 and H01-H11: the general w_n(a,b;p,q) family.

The LEM entries check root-level identities with exact quadratic-extension
arithmetic (or exact rationals when the discriminant is a perfect square);
the H entries are the weighted-sum theorems and their corollaries. Default
grids keep the stated parameter ranges for every light entry; the five
heavy ones (H01, H04, H05, H06, H07) sweep curated seed and shift panels
instead of full Cartesian ranges so the whole catalog stays desk-scale.
"""

from __future__ import annotations

from fractions import Fraction

from ..sequences import neg_one
from .engine import Entry, Guard, Outcome, Side, axis, irange, joint

GUARD_N = Guard("n >= 0", ("n",), lambda ctx, b: b["n"] >= 0)
GUARD_PQ = Guard("p != 0 and q != 0", ("p", "q"),
                 lambda ctx, b: b["p"] != 0 and b["q"] != 0)
GUARD_DISC = Guard("p^2 - 4q != 0", ("p", "q"),
                   lambda ctx, b: b["p"] ** 2 - 4 * b["q"] != 0)
GUARD_UR = Guard("u_r != 0", ("p", "q", "r"),
                 lambda ctx, b: ctx.u(b["p"], b["q"])(b["r"]) != 0)
GUARD_VR = Guard("v_r != 0", ("p", "q", "r"),
                 lambda ctx, b: ctx.v(b["p"], b["q"])(b["r"]) != 0)

PQ_VALUES = [k for k in range(-4, 5) if k != 0]
SEED_PANEL = [(0, 1), (2, 1), (2, 3), (-1, 2)]


def _disc(b):
    return b["p"] ** 2 - 4 * b["q"]


# ---------------------------------------------------------------------------
# root-level lemmas
# ---------------------------------------------------------------------------

def _lem2(ctx, b):
    p, q, s = b["p"], b["q"], b["s"]
    delta = ctx.roots(p, q).delta
    u, v = ctx.u(p, q), ctx.v(p, q)
    tau_s, sig_s = ctx.root_pow(p, q, s)
    tau_2s, sig_2s = ctx.root_pow(p, q, 2 * s)
    qs = Fraction(q) ** s
    return Outcome(sides=[
        Side("q^s + tau^(2s)", qs + tau_2s, group="tau-plus"),
        Side("tau^s v_s", tau_s * v(s), group="tau-plus"),
        Side("q^s - tau^(2s)", qs - tau_2s, group="tau-minus"),
        Side("-Delta tau^s u_s", -(delta * tau_s * u(s)), group="tau-minus"),
        Side("q^s + sigma^(2s)", qs + sig_2s, group="sigma-plus"),
        Side("sigma^s v_s", sig_s * v(s), group="sigma-plus"),
        Side("q^s - sigma^(2s)", qs - sig_2s, group="sigma-minus"),
        Side("Delta sigma^s u_s", delta * sig_s * u(s), group="sigma-minus"),
    ])


LEM2 = Entry(
    id="LEM2", kind="identity",
    statement="q^s +- tau^(2s) = tau^s (v_s or -Delta u_s), "
              "q^s +- sigma^(2s) = sigma^s (v_s or Delta u_s)",
    params=("p", "q", "s"), domain="p, q != 0; p^2 - 4q != 0; any integer s",
    guards=(GUARD_PQ, GUARD_DISC), evaluate=_lem2,
    grid=(axis("p", PQ_VALUES), axis("q", PQ_VALUES), axis("s", irange(-4, 4))),
)


def _lem3(ctx, b):
    p, q, r, s = b["p"], b["q"], b["r"], b["s"]
    delta = ctx.roots(p, q).delta
    u, v = ctx.u(p, q), ctx.v(p, q)
    tau_r, sig_r = ctx.root_pow(p, q, r)
    tau_s, sig_s = ctx.root_pow(p, q, s)
    rt5 = ctx.roots(1, -1).delta
    al_r, be_r = ctx.root_pow(1, -1, r)
    al_s, be_s = ctx.root_pow(1, -1, s)
    F, L = ctx.fib(), ctx.luc()
    return Outcome(sides=[
        Side("v_(r+s) - tau^r v_s", v(r + s) - tau_r * v(s), group="v-tau"),
        Side("-Delta sigma^s u_r", -(delta * sig_s * u(r)), group="v-tau"),
        Side("v_(r+s) - sigma^r v_s", v(r + s) - sig_r * v(s), group="v-sigma"),
        Side("Delta tau^s u_r", delta * tau_s * u(r), group="v-sigma"),
        Side("u_(r+s) - tau^r u_s", u(r + s) - tau_r * u(s), group="u-tau"),
        Side("sigma^s u_r", sig_s * u(r), group="u-tau"),
        Side("u_(r+s) - sigma^r u_s", u(r + s) - sig_r * u(s), group="u-sigma"),
        Side("tau^s u_r", tau_s * u(r), group="u-sigma"),
        # Fibonacci specializations of the same four shapes
        Side("L_(r+s) - L_r alpha^s", L(r + s) - L(r) * al_s, group="L-alpha"),
        Side("-sqrt5 beta^r F_s", -(rt5 * be_r * F(s)), group="L-alpha"),
        Side("L_(r+s) - L_r beta^s", L(r + s) - L(r) * be_s, group="L-beta"),
        Side("sqrt5 alpha^r F_s", rt5 * al_r * F(s), group="L-beta"),
        Side("F_(r+s) - F_r alpha^s", F(r + s) - F(r) * al_s, group="F-alpha"),
        Side("beta^r F_s", be_r * F(s), group="F-alpha"),
        Side("F_(r+s) - F_r beta^s", F(r + s) - F(r) * be_s, group="F-beta"),
        Side("alpha^r F_s", al_r * F(s), group="F-beta"),
    ])


LEM3 = Entry(
    id="LEM3", kind="identity",
    statement="v_(r+s) - tau^r v_s = -Delta sigma^s u_r (and the sigma, u, and "
              "Fibonacci/Lucas alpha-beta counterparts)",
    params=("p", "q", "r", "s"), domain="p, q != 0; p^2 - 4q != 0",
    guards=(GUARD_PQ, GUARD_DISC), evaluate=_lem3,
    grid=(axis("p", PQ_VALUES), axis("q", PQ_VALUES),
          axis("r", irange(-4, 4)), axis("s", irange(-4, 4))),
)


def _lem4(ctx, b):
    p, q, a, bb, n = b["p"], b["q"], b["a"], b["b"], b["n"]
    tau, sig, delta = ctx.roots(p, q)
    w = ctx.w(a, bb, p, q)
    tau_n, sig_n = ctx.root_pow(p, q, n)
    A = (bb - a * sig) / delta
    B = (a * tau - bb) / delta
    return Outcome(sides=[
        Side("A tau^n - B sigma^n", A * tau_n - B * sig_n, group="difference"),
        Side("(w_(n+1) - q w_(n-1)) / Delta", (w(n + 1) - q * w(n - 1)) / delta,
             group="difference"),
        Side("A sigma^n + B tau^n", A * sig_n + B * tau_n, group="swapped"),
        Side("q^n w_(-n)", Fraction(q) ** n * w(-n), group="swapped"),
    ])


LEM4 = Entry(
    id="LEM4", kind="identity",
    statement="with A = (b - a sigma)/Delta, B = (a tau - b)/Delta: "
              "A tau^n - B sigma^n = (w_(n+1) - q w_(n-1))/Delta and "
              "A sigma^n + B tau^n = q^n w_(-n)",
    params=("p", "q", "a", "b", "n"), domain="p, q != 0; p^2 - 4q != 0",
    guards=(GUARD_PQ, GUARD_DISC), evaluate=_lem4,
    grid=(axis("p", PQ_VALUES), axis("q", PQ_VALUES),
          axis("a", irange(-3, 3)), axis("b", irange(-3, 3)),
          axis("n", irange(0, 6))),
)


def _lem5(ctx, b):
    p, q, r, m, s = b["p"], b["q"], b["r"], b["m"], b["s"]
    delta = ctx.roots(p, q).delta
    u, v = ctx.u(p, q), ctx.v(p, q)
    tau_r, sig_r = ctx.root_pow(p, q, r)
    tau_m, sig_m = ctx.root_pow(p, q, m)
    tau_s, sig_s = ctx.root_pow(p, q, s)
    qms = Fraction(q) ** (m - s)
    return Outcome(sides=[
        Side("tau^r u_(m-s)", tau_r * u(m - s), group="u-tau"),
        Side("tau^m u_(r-s) - q^(m-s) tau^s u_(r-m)",
             tau_m * u(r - s) - qms * tau_s * u(r - m), group="u-tau"),
        Side("sigma^r u_(m-s)", sig_r * u(m - s), group="u-sigma"),
        Side("sigma^m u_(r-s) - q^(m-s) sigma^s u_(r-m)",
             sig_m * u(r - s) - qms * sig_s * u(r - m), group="u-sigma"),
        Side("Delta tau^r u_(m-s)", tau_r * u(m - s) * delta, group="v-tau"),
        Side("tau^m v_(r-s) - q^(m-s) tau^s v_(r-m)",
             tau_m * v(r - s) - qms * tau_s * v(r - m), group="v-tau"),
        Side("Delta sigma^r u_(m-s)", sig_r * u(m - s) * delta, group="v-sigma"),
        Side("-sigma^m v_(r-s) + q^(m-s) sigma^s v_(r-m)",
             -(sig_m * v(r - s)) + qms * sig_s * v(r - m), group="v-sigma"),
    ])


LEM5 = Entry(
    id="LEM5", kind="identity",
    statement="tau^r u_(m-s) = tau^m u_(r-s) - q^(m-s) tau^s u_(r-m) "
              "(and the sigma and v-weighted counterparts)",
    params=("p", "q", "r", "m", "s"), domain="p, q != 0; p^2 - 4q != 0",
    guards=(GUARD_PQ, GUARD_DISC), evaluate=_lem5,
    grid=(axis("p", PQ_VALUES), axis("q", PQ_VALUES),
          axis("r", irange(-4, 4)), axis("m", irange(-4, 4)),
          axis("s", irange(-4, 4))),
)


def _lem6(ctx, b):
    p, q, n, m = b["p"], b["q"], b["n"], b["m"]
    u, v = ctx.u(p, q), ctx.v(p, q)
    qm = Fraction(q) ** m
    d = _disc(b)
    return Outcome(sides=[
        Side("u_(n+m) - q^m u_(n-m)", u(n + m) - qm * u(n - m), group="u-minus"),
        Side("u_m v_n", u(m) * v(n), group="u-minus"),
        Side("v_(n+m) - q^m v_(n-m)", v(n + m) - qm * v(n - m), group="v-minus"),
        Side("Delta^2 u_m u_n", d * u(m) * u(n), group="v-minus"),
        Side("u_(n+m) + q^m u_(n-m)", u(n + m) + qm * u(n - m), group="u-plus"),
        Side("v_m u_n", v(m) * u(n), group="u-plus"),
        Side("v_(n+m) + q^m v_(n-m)", v(n + m) + qm * v(n - m), group="v-plus"),
        Side("v_m v_n", v(m) * v(n), group="v-plus"),
    ])


LEM6 = Entry(
    id="LEM6", kind="identity",
    statement="u_(n+m) -+ q^m u_(n-m) = u_m v_n or v_m u_n; "
              "v_(n+m) -+ q^m v_(n-m) = Delta^2 u_m u_n or v_m v_n",
    params=("p", "q", "n", "m"),
    domain="p, q != 0 (the repeated-root case is included: no root appears)",
    guards=(GUARD_PQ,), evaluate=_lem6,
    grid=(axis("p", PQ_VALUES), axis("q", PQ_VALUES),
          axis("n", irange(-4, 4)), axis("m", irange(-4, 4))),
)


# ---------------------------------------------------------------------------
# H01-H05: the main weighted-sum theorems
# ---------------------------------------------------------------------------

def _h01(ctx, b):
    p, q, a, bb, r, t, n = (b["p"], b["q"], b["a"], b["b"], b["r"], b["t"], b["n"])
    w, u, v = ctx.w(a, bb, p, q), ctx.u(p, q), ctx.v(p, q)
    qf = Fraction(q)
    s1 = sum(qf ** (r * j) * w(r * (n - 2 * j) + t) for j in range(n + 1))
    s2 = w(t) * sum(Fraction(1, 2 ** (j + 1)) * v(r) ** j * v(r * (n - j))
                    for j in range(n + 1))
    M = r * (n + 1)
    num = (w(t + 1 + M) - qf ** M * w(t + 1 - M)
           - q * (w(t - 1 + M) - qf ** M * w(t - 1 - M)))
    s3 = num / (u(r) * _disc(b))
    return Outcome(sides=[Side("left sum", s1), Side("middle sum", s2),
                          Side("closed form", s3)])


H01 = Entry(
    id="H01", kind="identity",
    statement="sum_{j=0..n} q^(rj) w_(r(n-2j)+t) "
              "= w_t sum_{j=0..n} v_r^j v_(r(n-j)) / 2^(j+1) "
              "= (w_(t+1+r(n+1)) - q^(r(n+1)) w_(t+1-r(n+1)) "
              "- q (w_(t-1+r(n+1)) - q^(r(n+1)) w_(t-1-r(n+1)))) / (u_r Delta^2)",
    params=("p", "q", "a", "b", "r", "t", "n"),
    domain="p, q != 0; u_r != 0; p^2 - 4q != 0; n >= 0",
    guards=(GUARD_N, GUARD_PQ, GUARD_UR, GUARD_DISC), evaluate=_h01,
    grid=(axis("p", PQ_VALUES), axis("q", PQ_VALUES),
          joint(("a", "b"), SEED_PANEL),
          axis("r", irange(-4, 4)), axis("t", irange(-4, 4)),
          axis("n", irange(0, 6))),
)


def _h02(ctx, b):
    p, q, r, n = b["p"], b["q"], b["r"], b["n"]
    u = ctx.u(p, q)
    qf = Fraction(q)
    s = sum(qf ** (r * j) * u(r * (n - 2 * j)) for j in range(n + 1))
    return Outcome(sides=[Side("sum", s), Side("zero", Fraction(0))])


H02 = Entry(
    id="H02", kind="identity",
    statement="sum_{j=0..n} q^(rj) u_(r(n-2j)) = 0",
    params=("p", "q", "r", "n"),
    domain="p, q != 0; n >= 0 (repeated root included)",
    guards=(GUARD_N, GUARD_PQ), evaluate=_h02,
    grid=(axis("p", PQ_VALUES), axis("q", PQ_VALUES),
          axis("r", irange(-4, 4)), axis("n", irange(0, 6))),
)


def _h03(ctx, b):
    p, q, n = b["p"], b["q"], b["n"]
    u, v = ctx.u(p, q), ctx.v(p, q)
    qf = Fraction(q)
    s1 = sum(qf ** j * v(n - 2 * j) for j in range(n + 1))
    s2 = sum(Fraction(p, 2) ** j * v(n - j) for j in range(n + 1))
    return Outcome(sides=[Side("left sum", s1), Side("middle sum", s2),
                          Side("closed form", 2 * u(n + 1))])


H03 = Entry(
    id="H03", kind="identity",
    statement="sum_{j=0..n} q^j v_(n-2j) = sum_{j=0..n} (p/2)^j v_(n-j) = 2 u_(n+1)",
    params=("p", "q", "n"),
    domain="p, q != 0; n >= 0 (repeated root included)",
    guards=(GUARD_N, GUARD_PQ), evaluate=_h03,
    grid=(axis("p", PQ_VALUES), axis("q", PQ_VALUES), axis("n", irange(0, 6))),
)


def _h04(ctx, b):
    p, q, a, bb, r, t, n = (b["p"], b["q"], b["a"], b["b"], b["r"], b["t"], b["n"])
    w, u, v = ctx.w(a, bb, p, q), ctx.u(p, q), ctx.v(p, q)
    qf = Fraction(q)
    s1 = 2 * sum(qf ** (r * (n - j)) * w(2 * r * j + t) for j in range(n + 1))
    s2 = sum(Fraction(1, 2 ** j) * v(r) ** j
             * (w(r * (2 * n - j) + t) + qf ** (r * (n - j)) * w(r * j + t))
             for j in range(n + 1))
    num = 2 * (w(r * (2 * n + 1) + t + 1) - q * w(r * (2 * n + 1) + t - 1)
               - qf ** (r * (n + 1)) * (w(t - r + 1) - q * w(t - r - 1)))
    s3 = num / (u(r) * _disc(b))
    return Outcome(sides=[Side("left sum", s1), Side("middle sum", s2),
                          Side("closed form", s3)])


H04 = Entry(
    id="H04", kind="identity",
    statement="2 sum_{j=0..n} q^(r(n-j)) w_(2rj+t) "
              "= sum_{j=0..n} (v_r/2)^j (w_(r(2n-j)+t) + q^(r(n-j)) w_(rj+t)) "
              "= 2 (w_(r(2n+1)+t+1) - q w_(r(2n+1)+t-1) "
              "- q^(r(n+1)) (w_(t-r+1) - q w_(t-r-1))) / (u_r Delta^2)",
    params=("p", "q", "a", "b", "r", "t", "n"),
    domain="p, q != 0; u_r != 0; p^2 - 4q != 0; n >= 0",
    guards=(GUARD_N, GUARD_PQ, GUARD_UR, GUARD_DISC), evaluate=_h04,
    grid=(axis("p", PQ_VALUES), axis("q", PQ_VALUES),
          joint(("a", "b"), SEED_PANEL),
          axis("r", irange(-4, 4)), axis("t", irange(-4, 4)),
          axis("n", irange(0, 6))),
)


def _h05_x0(ctx, b):
    u, v = ctx.u(b["p"], b["q"]), ctx.v(b["p"], b["q"])
    m, s, r = b["m"], b["s"], b["r"]
    return (u(r - s) ** 2 + Fraction(b["q"]) ** (m - s) * u(r - m) ** 2
            + u(r - s) * u(r - m) * v(m - s))


def _h05(ctx, b):
    p, q, a, bb = b["p"], b["q"], b["a"], b["b"]
    m, s, r, t, n = b["m"], b["s"], b["r"], b["t"], b["n"]
    w, u = ctx.w(a, bb, p, q), ctx.u(p, q)
    qf = Fraction(q)
    s1 = sum(neg_one(j) * qf ** ((m - s) * j) * u(r - s) ** (n - j) * u(r - m) ** j
             * w((s - m) * j + m * n + t) for j in range(n + 1))
    s2 = sum(Fraction(1, 2 ** (j + 1)) * u(m - s) ** j
             * (u(r - s) ** (n - j) * w((r - m) * j + m * n + t)
                + neg_one(n - j) * qf ** ((m - s) * (n - j)) * u(r - m) ** (n - j)
                * w(s * (n - j) + t + r * j))
             for j in range(n + 1))
    x0 = Fraction(_h05_x0(ctx, b))
    s3 = ((u(r - s) ** (n + 2) * w(m * n + t)
           + u(r - s) ** (n + 1) * u(r - m) * w(m * n + m + t - s)) / x0
          + neg_one(n) * u(r - m) ** (n + 1)
          * (qf ** ((m - s) * (n + 1) + m) * u(r - s) * w(s * n + s + t - m)
             + qf ** ((m - s) * (n + 2) + s) * u(r - m) * w(s * n + t))
          / (qf ** m * x0))
    return Outcome(sides=[Side("left sum", s1), Side("middle sum", s2),
                          Side("closed form", s3)])


H05 = Entry(
    id="H05", kind="identity",
    statement="sum_{j=0..n} (-1)^j q^((m-s)j) u_(r-s)^(n-j) u_(r-m)^j w_((s-m)j+mn+t) "
              "= sum_{j=0..n} u_(m-s)^j / 2^(j+1) (u_(r-s)^(n-j) w_((r-m)j+mn+t) "
              "+ (-1)^(n-j) q^((m-s)(n-j)) u_(r-m)^(n-j) w_(s(n-j)+t+rj)) "
              "= (u_(r-s)^(n+2) w_(mn+t) + u_(r-s)^(n+1) u_(r-m) w_(mn+m+t-s)) / X0 "
              "+ (-1)^n u_(r-m)^(n+1) (q^((m-s)(n+1)+m) u_(r-s) w_(sn+s+t-m) "
              "+ q^((m-s)(n+2)+s) u_(r-m) w_(sn+t)) / (q^m X0), "
              "X0 = u_(r-s)^2 + q^(m-s) u_(r-m)^2 + u_(r-s) u_(r-m) v_(m-s)",
    params=("p", "q", "a", "b", "m", "s", "r", "t", "n"),
    domain="p, q != 0; X0 != 0; n >= 0 (repeated root included)",
    guards=(GUARD_N, GUARD_PQ,
            Guard("X0 != 0", ("p", "q", "m", "s", "r"),
                  lambda ctx, b: _h05_x0(ctx, b) != 0)),
    evaluate=_h05,
    grid=(axis("p", PQ_VALUES), axis("q", PQ_VALUES),
          joint(("a", "b"), [(0, 1), (2, 3)]),
          joint(("m", "s", "r"),
                [(1, 0, 2), (2, 1, 3), (0, 0, 1), (2, -1, -2), (-1, -2, 0),
                 (3, 1, 1), (4, 2, -3), (-2, -4, 3), (2, 2, 2), (1, -3, -1)]),
          axis("t", irange(-2, 2)), axis("n", irange(0, 6))),
)


# ---------------------------------------------------------------------------
# H06/H07 and the final corollary H08-H11
# ---------------------------------------------------------------------------

GUARD_H06 = Guard("n = 0 or u_r != 0", ("p", "q", "r", "n"),
                  lambda ctx, b: b["n"] == 0 or ctx.u(b["p"], b["q"])(b["r"]) != 0)
GUARD_H07 = Guard("n = 0 or (u_r != 0 and p^2 - 4q != 0)", ("p", "q", "r", "n"),
                  lambda ctx, b: b["n"] == 0
                  or (ctx.u(b["p"], b["q"])(b["r"]) != 0 and _disc(b) != 0))


def _growth(ctx, b):
    # the squared-root weight (u_r Delta / 2)^2 shared by H06-H11 middles
    return Fraction(_disc(b), 4) * ctx.u(b["p"], b["q"])(b["r"]) ** 2


def _h06(ctx, b):
    p, q, a, bb, r, t, n = (b["p"], b["q"], b["a"], b["b"], b["r"], b["t"], b["n"])
    w, u, v = ctx.w(a, bb, p, q), ctx.u(p, q), ctx.v(p, q)
    qf = Fraction(q)
    g = _growth(ctx, b)
    s1 = sum(neg_one(j) * qf ** (r * j) * w(2 * r * (n - j) + t)
             for j in range(2 * n + 1))
    s2 = Fraction(1, 2) * w(t) * sum(g ** j * v(2 * r * (n - j)) for j in range(n + 1))
    if n >= 1:
        s2 += w(t) * sum(g ** j * u(r * (2 * n - 2 * j + 1)) for j in range(1, n + 1)) \
            / Fraction(u(r))
    s3 = w(t) * v(r * (2 * n + 1)) / Fraction(v(r))
    return Outcome(sides=[Side("left sum", s1), Side("middle sum", s2),
                          Side("closed form", s3)])


H06 = Entry(
    id="H06", kind="identity",
    statement="sum_{j=0..2n} (-1)^j q^(rj) w_(2r(n-j)+t) "
              "= w_t/2 sum_{j=0..n} (u_r^2 Delta^2/4)^j v_(2r(n-j)) "
              "+ w_t/u_r sum_{j=1..n} (u_r^2 Delta^2/4)^j u_(r(2n-2j+1)) "
              "= w_t v_(r(2n+1)) / v_r",
    params=("p", "q", "a", "b", "r", "t", "n"),
    domain="p, q != 0; v_r != 0; u_r != 0 unless n = 0; n >= 0",
    guards=(GUARD_N, GUARD_PQ, GUARD_VR, GUARD_H06), evaluate=_h06,
    grid=(axis("p", PQ_VALUES), axis("q", PQ_VALUES),
          joint(("a", "b"), SEED_PANEL),
          axis("r", irange(-4, 4)), axis("t", irange(-4, 4)),
          axis("n", irange(0, 6))),
)


def _h07(ctx, b):
    p, q, a, bb, r, t, n = (b["p"], b["q"], b["a"], b["b"], b["r"], b["t"], b["n"])
    w, u, v = ctx.w(a, bb, p, q), ctx.u(p, q), ctx.v(p, q)
    qf = Fraction(q)
    g = _growth(ctx, b)
    c = w(t + 1) - q * w(t - 1)
    s1 = sum(neg_one(j) * qf ** (r * j) * w(r * (2 * n - 1 - 2 * j) + t)
             for j in range(2 * n))
    s2 = Fraction(1, 2) * c * sum(g ** j * u(r * (2 * n - 2 * j - 1)) for j in range(n))
    if n >= 1:
        s2 += c * sum(g ** j * v(r * (2 * n - 2 * j)) for j in range(1, n + 1)) \
            / Fraction(u(r) * _disc(b))
    s3 = (w(t + 2 * r * n) - qf ** (2 * r * n) * w(t - 2 * r * n)) / Fraction(v(r))
    return Outcome(sides=[Side("left sum", s1), Side("middle sum", s2),
                          Side("closed form", s3)])


H07 = Entry(
    id="H07", kind="identity",
    statement="sum_{j=0..2n-1} (-1)^j q^(rj) w_(r(2n-1-2j)+t) "
              "= (w_(t+1) - q w_(t-1))/2 sum_{j=0..n-1} (u_r^2 Delta^2/4)^j u_(r(2n-2j-1)) "
              "+ (w_(t+1) - q w_(t-1))/(u_r Delta^2) "
              "sum_{j=1..n} (u_r^2 Delta^2/4)^j v_(r(2n-2j)) "
              "= (w_(t+2rn) - q^(2rn) w_(t-2rn)) / v_r",
    params=("p", "q", "a", "b", "r", "t", "n"),
    domain="p, q != 0; v_r != 0; u_r != 0 and p^2 - 4q != 0 unless n = 0; n >= 0",
    guards=(GUARD_N, GUARD_PQ, GUARD_VR, GUARD_H07), evaluate=_h07,
    grid=(axis("p", PQ_VALUES), axis("q", PQ_VALUES),
          joint(("a", "b"), SEED_PANEL),
          axis("r", irange(-4, 4)), axis("t", irange(-4, 4)),
          axis("n", irange(0, 6))),
)


def _h08(ctx, b):
    p, q, r, n = b["p"], b["q"], b["r"], b["n"]
    u = ctx.u(p, q)
    qf = Fraction(q)
    s = sum(neg_one(j) * qf ** (r * j) * u(2 * r * (n - j)) for j in range(2 * n + 1))
    return Outcome(sides=[Side("sum", s), Side("zero", Fraction(0))])


H08 = Entry(
    id="H08", kind="identity",
    statement="sum_{j=0..2n} (-1)^j q^(rj) u_(2r(n-j)) = 0",
    params=("p", "q", "r", "n"),
    domain="p, q != 0; n >= 0 (no other constraint: the sum telescopes to zero)",
    guards=(GUARD_N, GUARD_PQ), evaluate=_h08,
    grid=(axis("p", PQ_VALUES), axis("q", PQ_VALUES),
          axis("r", irange(-4, 4)), axis("n", irange(0, 6))),
)


def _h09(ctx, b):
    p, q, r, n = b["p"], b["q"], b["r"], b["n"]
    v = ctx.v(p, q)
    qf = Fraction(q)
    s = sum(neg_one(j) * qf ** (r * j) * v(r * (2 * n - 1 - 2 * j)) for j in range(2 * n))
    return Outcome(sides=[Side("sum", s), Side("zero", Fraction(0))])


H09 = Entry(
    id="H09", kind="identity",
    statement="sum_{j=0..2n-1} (-1)^j q^(rj) v_(r(2n-1-2j)) = 0",
    params=("p", "q", "r", "n"),
    domain="p, q != 0; n >= 0",
    guards=(GUARD_N, GUARD_PQ), evaluate=_h09,
    grid=(axis("p", PQ_VALUES), axis("q", PQ_VALUES),
          axis("r", irange(-4, 4)), axis("n", irange(0, 6))),
)


def _h10(ctx, b):
    p, q, r, t, n = b["p"], b["q"], b["r"], b["t"], b["n"]
    u, v = ctx.u(p, q), ctx.v(p, q)
    qf = Fraction(q)
    g = _growth(ctx, b)
    left_printed = sum(neg_one(j) * qf ** (r * j) * u(r * (2 * n - 1 - 2 * j) + t)
                       for j in range(2 * n))
    left = sum(neg_one(j) * qf ** (r * j) * u(r * (2 * n - 1 - 2 * j))
               for j in range(2 * n))
    mid = sum(g ** j * u(r * (2 * n - 2 * j - 1)) for j in range(n))
    if n >= 1:
        mid += 2 * sum(g ** j * v(r * (2 * n - 2 * j)) for j in range(1, n + 1)) \
            / Fraction(u(r) * _disc(b))
    s3 = 2 * u(2 * r * n) / Fraction(v(r))
    return Outcome(sides=[
        Side("left sum with displayed shift t", left_printed, variant="as-printed"),
        Side("left sum without shift", left, variant="as-proved"),
        Side("middle sum", mid),
        Side("closed form", s3),
    ])


H10 = Entry(
    id="H10", kind="identity",
    statement="sum_{j=0..2n-1} (-1)^j q^(rj) u_(r(2n-1-2j)) "
              "= sum_{j=0..n-1} (u_r^2 Delta^2/4)^j u_(r(2n-2j-1)) "
              "+ 2/(u_r Delta^2) sum_{j=1..n} (u_r^2 Delta^2/4)^j v_(r(2n-2j)) "
              "= 2 u_(2rn) / v_r",
    params=("p", "q", "r", "t", "n"),
    domain="p, q != 0; v_r != 0; u_r != 0 and p^2 - 4q != 0 unless n = 0; n >= 0",
    guards=(GUARD_N, GUARD_PQ, GUARD_VR, GUARD_H07), evaluate=_h10,
    grid=(axis("p", PQ_VALUES), axis("q", PQ_VALUES),
          axis("r", irange(-4, 4)), axis("t", irange(-2, 2)),
          axis("n", irange(0, 6))),
    variants=("as-printed", "as-proved"), primary="as-proved",
    notes=("The display carries a '+t' inside the left sum that the t-free "
           "middle and closed sides contradict for t != 0; the parent theorem "
           "specializes to t = 0 here, so the shift-free left sum verifies.",),
)


def _h11(ctx, b):
    p, q, r, n = b["p"], b["q"], b["r"], b["n"]
    u, v = ctx.u(p, q), ctx.v(p, q)
    qf = Fraction(q)
    g = _growth(ctx, b)
    s1 = sum(neg_one(j) * qf ** (r * j) * v(2 * r * (n - j)) for j in range(2 * n + 1))
    s2 = sum(g ** j * v(2 * r * (n - j)) for j in range(n + 1))
    if n >= 1:
        s2 += 2 * sum(g ** j * u(r * (2 * n - 2 * j + 1)) for j in range(1, n + 1)) \
            / Fraction(u(r))
    s3 = 2 * v(r * (2 * n + 1)) / Fraction(v(r))
    return Outcome(sides=[Side("left sum", s1), Side("middle sum", s2),
                          Side("closed form", s3)])


H11 = Entry(
    id="H11", kind="identity",
    statement="sum_{j=0..2n} (-1)^j q^(rj) v_(2r(n-j)) "
              "= sum_{j=0..n} (u_r^2 Delta^2/4)^j v_(2r(n-j)) "
              "+ 2/u_r sum_{j=1..n} (u_r^2 Delta^2/4)^j u_(r(2n-2j+1)) "
              "= 2 v_(r(2n+1)) / v_r",
    params=("p", "q", "r", "n"),
    domain="p, q != 0; v_r != 0; u_r != 0 unless n = 0; n >= 0",
    guards=(GUARD_N, GUARD_PQ, GUARD_VR, GUARD_H06), evaluate=_h11,
    grid=(axis("p", PQ_VALUES), axis("q", PQ_VALUES),
          axis("r", irange(-4, 4)), axis("n", irange(0, 6))),
)


HORADAM_ENTRIES = [LEM2, LEM3, LEM4, LEM5, LEM6,
                   H01, H02, H03, H04, H05, H06, H07, H08, H09, H10, H11]
