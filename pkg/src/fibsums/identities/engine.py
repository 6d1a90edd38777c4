"""Catalog machinery: entries, guarded exact evaluation, grid sweeps.

An Entry bundles one catalog statement with its parameter names, domain
guards, a default sweep grid, and an evaluate function returning the exact
value of every stated side plus any divisibility witnesses. Where a printed
formula admits two readings, the entry carries both as named variants and
the verdict is computed against the reading its proof implies; sweep
reports tally every variant so exactly one should verify in full.

Everything here is pure and deterministic: sweeps iterate grids in
declaration order, failures are collected exhaustively in that order, and
no timing or environment data enters a report.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Union

from ..scalars import CharRoots, make_roots
from ..sequences import SeqTable


class UsageError(ValueError):
    """Malformed request: unknown entry, unknown or missing parameter."""


class RejectedInstance(Exception):
    """Bindings fall outside an entry's domain; names the violated predicate."""

    def __init__(self, entry_id: str, predicate: str, bindings: dict):
        self.entry_id = entry_id
        self.predicate = predicate
        self.bindings = dict(bindings)
        super().__init__(f"{entry_id}: rejected ({predicate}) at {bindings}")


@dataclass(frozen=True)
class Side:
    """One exactly evaluated expression. Sides sharing a group must agree.

    variant None means the side is common to every reading of the entry;
    otherwise it belongs to the named reading only.
    """

    label: str
    value: object
    group: str = "eq"
    variant: Optional[str] = None


@dataclass(frozen=True)
class Witness:
    """Exact divisibility certificate: divisor * quotient == dividend."""

    label: str
    divisor: int
    dividend: int
    quotient: Optional[int]
    residue: Optional[int]

    @property
    def ok(self) -> bool:
        return self.quotient is not None


def make_witness(label: str, divisor, dividend) -> Witness:
    divisor = _to_int(divisor)
    dividend = _to_int(dividend)
    if divisor == 0:
        raise ZeroDivisionError(f"witness {label!r} with zero divisor")
    q, r = divmod(dividend, divisor)
    if r == 0:
        return Witness(label, divisor, dividend, q, None)
    return Witness(label, divisor, dividend, None, r)


def _to_int(x) -> int:
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise ValueError(f"expected an integer value, got {x}")
        return x.numerator
    return x


@dataclass
class Outcome:
    """Raw product of an entry's evaluate function."""

    sides: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)


@dataclass(frozen=True)
class Guard:
    """Domain predicate; only checked when all `needs` parameters are bound."""

    text: str
    needs: tuple
    holds: Callable


@dataclass(frozen=True)
class Axis:
    """One sweep dimension: a tuple of names bound jointly from value rows."""

    names: tuple
    values: tuple


def axis(name: str, values) -> Axis:
    return Axis((name,), tuple((v,) for v in values))


def joint(names, rows) -> Axis:
    return Axis(tuple(names), tuple(tuple(r) for r in rows))


def irange(lo: int, hi: int) -> list:
    return list(range(lo, hi + 1))


@dataclass(frozen=True)
class Entry:
    id: str
    kind: str                      # "identity" | "divisibility"
    statement: str                 # ASCII rendering of what is asserted
    params: tuple
    domain: str
    guards: tuple
    evaluate: Callable             # (Context, bindings) -> Outcome
    grid: tuple                    # default Axis tuple covering params
    required: Optional[tuple] = None   # params that must be bound; None = all
    variants: tuple = ("as-stated",)
    primary: Optional[str] = None      # reading the verdict is computed against
    notes: tuple = ()

    @property
    def flagged(self) -> bool:
        return len(self.variants) > 1

    @property
    def primary_variant(self) -> str:
        return self.primary if self.primary is not None else self.variants[0]

    @property
    def required_params(self) -> tuple:
        return self.params if self.required is None else self.required


@dataclass
class Evaluation:
    """One entry at one binding: sides, witnesses, per-variant verdicts."""

    entry_id: str
    bindings: dict
    sides: list
    witnesses: list
    notes: list
    variant_ok: dict
    ok: bool
    first_diff: Optional[tuple]    # (label, label) of first unequal pair


@dataclass
class SweepReport:
    entry: Entry
    axes: list
    checked: int
    rejected: int
    variant_verified: dict         # variant -> count of fully-ok instances
    failures: list                 # Evaluations failing the primary reading

    @property
    def verified(self) -> bool:
        """No failures; flagged entries must single out one verifying reading."""
        if self.failures:
            return False
        if self.checked and self.entry.flagged:
            full = sum(1 for v in self.entry.variants
                       if self.variant_verified[v] == self.checked)
            return full == 1
        return True


# ---------------------------------------------------------------------------
# evaluation context: shared recurrence tables and cached roots
# ---------------------------------------------------------------------------

class Context:
    """Caches per-parameter sequence tables across a sweep.

    Sweeps iterate (p, q) on the outermost axes, so every inner binding
    reuses the same few tables; memory stays bounded by the index ranges
    the formulas actually touch.
    """

    __slots__ = ("_tables", "_roots", "_root_pows")

    def __init__(self):
        self._tables = {}
        self._roots = {}
        self._root_pows = {}

    def table(self, a, b, p, q) -> SeqTable:
        key = (a, b, p, q)
        t = self._tables.get(key)
        if t is None:
            t = self._tables[key] = SeqTable(a, b, p, q)
        return t

    def fib(self) -> SeqTable:
        return self.table(0, 1, 1, -1)

    def luc(self) -> SeqTable:
        return self.table(2, 1, 1, -1)

    def u(self, p: int, q: int) -> SeqTable:
        return self.table(0, 1, p, q)

    def v(self, p: int, q: int) -> SeqTable:
        return self.table(2, p, p, q)

    def w(self, a, b, p: int, q: int) -> SeqTable:
        return self.table(a, b, p, q)

    def gib(self, g0: int, g1: int) -> SeqTable:
        return self.table(g0, g1, 1, -1)

    def roots(self, p: int, q: int) -> CharRoots:
        key = (p, q)
        r = self._roots.get(key)
        if r is None:
            r = self._roots[key] = make_roots(p, q)
        return r

    def root_pow(self, p: int, q: int, e: int):
        """(tau^e, sigma^e), memoized: root-level sweeps reuse few exponents."""
        key = (p, q, e)
        pair = self._root_pows.get(key)
        if pair is None:
            tau, sigma, _ = self.roots(p, q)
            pair = self._root_pows[key] = (tau ** e, sigma ** e)
        return pair


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------

def _sides_agree(sides, variant: str) -> Optional[tuple]:
    """First unequal (label, label) pair for the given reading, else None."""
    groups = {}
    for s in sides:
        if s.variant is None or s.variant == variant:
            groups.setdefault(s.group, []).append(s)
    for members in groups.values():
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                if members[i].value != members[j].value:
                    return members[i].label, members[j].label
    return None


def _finish(entry: Entry, bindings: dict, out: Outcome) -> Evaluation:
    wit_ok = all(w.ok for w in out.witnesses)
    variant_ok = {}
    primary_diff = None
    for v in entry.variants:
        diff = _sides_agree(out.sides, v)
        variant_ok[v] = diff is None and wit_ok
        if v == entry.primary_variant:
            primary_diff = diff
    if primary_diff is None and not wit_ok:
        bad = next(w for w in out.witnesses if not w.ok)
        primary_diff = (bad.label, "remainder != 0")
    return Evaluation(entry.id, dict(bindings), out.sides, out.witnesses,
                      list(out.notes), variant_ok,
                      variant_ok[entry.primary_variant], primary_diff)


def _first_violated_guard(entry: Entry, ctx: Context, b: dict) -> Optional[str]:
    for g in entry.guards:
        if all(name in b for name in g.needs) and not g.holds(ctx, b):
            return g.text
    return None


# ---------------------------------------------------------------------------
# public evaluation API
# ---------------------------------------------------------------------------

def _check_bindings(entry: Entry, bindings: dict):
    unknown = sorted(set(bindings) - set(entry.params))
    if unknown:
        raise UsageError(f"{entry.id}: unknown parameter(s) {', '.join(unknown)}")
    missing = [p for p in entry.required_params if p not in bindings]
    if missing:
        raise UsageError(f"{entry.id}: missing parameter(s) {', '.join(missing)}")


def evaluate_entry(entry: Entry, bindings: dict, ctx: Optional[Context] = None) -> Evaluation:
    """Evaluate one instance; domain violations raise RejectedInstance."""
    ctx = ctx if ctx is not None else Context()
    _check_bindings(entry, bindings)
    violated = _first_violated_guard(entry, ctx, bindings)
    if violated is not None:
        raise RejectedInstance(entry.id, violated, bindings)
    return _finish(entry, bindings, entry.evaluate(ctx, bindings))


def resolve_axes(entry: Entry, overrides: Optional[dict]) -> list:
    """Default grid, or, when any explicit ranges are given, exactly those.

    Explicit mode binds only the parameters the caller named (entries that
    declare optional parameters may then run a subset of their checks); the
    entry's required parameters must all be covered.
    """
    if not overrides:
        return list(entry.grid)
    unknown = sorted(set(overrides) - set(entry.params))
    if unknown:
        raise UsageError(f"{entry.id}: unknown parameter(s) {', '.join(unknown)}")
    missing = [p for p in entry.required_params if p not in overrides]
    if missing:
        raise UsageError(f"{entry.id}: missing parameter(s) {', '.join(missing)}")
    return [axis(p, overrides[p]) for p in entry.params if p in overrides]


def sweep(entry: Entry, overrides: Optional[dict] = None,
          ctx: Optional[Context] = None,
          on_result: Optional[Callable] = None) -> SweepReport:
    """Evaluate the entry over a grid; collect all primary-reading failures.

    ``on_result`` (if given) receives every checked Evaluation in grid order,
    letting callers stream per-instance rows (witness tables) without the
    sweep retaining them all.
    """
    axes = resolve_axes(entry, overrides)
    ctx = ctx if ctx is not None else Context()
    names = [n for ax in axes for n in ax.names]
    checked = rejected = 0
    variant_verified = {v: 0 for v in entry.variants}
    failures = []
    for combo in itertools.product(*(ax.values for ax in axes)):
        b = dict(zip(names, (x for row in combo for x in row)))
        if _first_violated_guard(entry, ctx, b) is not None:
            rejected += 1
            continue
        ev = _finish(entry, b, entry.evaluate(ctx, b))
        checked += 1
        for v, ok in ev.variant_ok.items():
            if ok:
                variant_verified[v] += 1
        if not ev.ok:
            failures.append(ev)
        if on_result is not None:
            on_result(ev)
    return SweepReport(entry, axes, checked, rejected, variant_verified, failures)
