"""Command-line front end.

Subcommands: ``seq`` (exact sequence terms), ``verify`` (grid sweeps of
catalog identities), ``div`` (divisibility witness tables), ``catalog``
(the entry listing). Exit codes: 0 success, 1 a sweep found a failing
instance, 2 usage error. Output is deterministic: identical invocations
produce byte-identical bytes on stdout.
"""

from __future__ import annotations

import argparse
import re
import sys

from .identities import Context, UsageError, catalog, get_entry, irange, sweep
from .reports import (div_csv, document, sweep_payload, to_json, verify_csv,
                      witness_row)
from .scalars import DomainError, render_scalar
from .sequences import (HoradamParams, fib, horadam_w, lucas, lucas_u,
                        lucas_v, pell, pell_lucas)

_RANGE = re.compile(r"^--([A-Za-z][A-Za-z0-9_]*)=(-?\d+)(?:\.\.(-?\d+))?$")


def _parse_ranges(extras: list[str]) -> dict[str, list[int]]:
    """Turn ``--r=-6..6 --n=0`` style flags into value lists."""
    ranges = {}
    for token in extras:
        m = _RANGE.match(token)
        if m is None:
            raise UsageError(
                f"unrecognized argument {token!r} "
                "(parameter ranges look like --r=-6..6 or --n=0)")
        name, lo, hi = m.group(1), int(m.group(2)), m.group(3)
        if name in ranges:
            raise UsageError(f"duplicate range for parameter {name!r}")
        ranges[name] = irange(lo, int(hi)) if hi is not None else [lo]
    return ranges


def _catalog_text() -> str:
    lines = []
    for e in catalog():
        flag = "  [two displayed readings]" if e.flagged else ""
        lines.append(f"{e.id:<5} {e.kind:<13} ({', '.join(e.params)})  "
                     f"{e.domain}{flag}")
    return "\n".join(lines) + "\n"


def _catalog_payload() -> list[dict]:
    return [{"identity": e.id, "kind": e.kind, "params": list(e.params),
             "domain": e.domain, "statement": e.statement,
             "variants": list(e.variants), "primary_variant": e.primary_variant,
             "notes": list(e.notes)} for e in catalog()]


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _fail_unknown_id(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    print("known catalog entries:", file=sys.stderr)
    sys.stderr.write(_catalog_text())
    return 2


# ---------------------------------------------------------------------------
# seq
# ---------------------------------------------------------------------------

_SEQ_NEEDS = {"fib": (), "lucas": (), "pell": (), "pell_lucas": (),
              "horadam": ("a", "b", "p", "q"), "u": ("p", "q"), "v": ("p", "q")}


def _cmd_seq(args) -> int:
    needs = _SEQ_NEEDS[args.family]
    given = {k: getattr(args, k) for k in ("a", "b", "p", "q")
             if getattr(args, k) is not None}
    missing = [k for k in needs if k not in given]
    extra = sorted(set(given) - set(needs))
    if missing:
        return _fail_usage(f"seq {args.family} requires -{' -'.join(missing)}")
    if extra:
        return _fail_usage(f"seq {args.family} does not take -{' -'.join(extra)}")
    try:
        if args.family == "fib":
            value = fib(args.n)
        elif args.family == "lucas":
            value = lucas(args.n)
        elif args.family == "pell":
            value = pell(args.n)
        elif args.family == "pell_lucas":
            value = pell_lucas(args.n)
        elif args.family == "horadam":
            value = horadam_w(HoradamParams(given["a"], given["b"],
                                            given["p"], given["q"]), args.n)
        elif args.family == "u":
            value = lucas_u(given["p"], given["q"], args.n)
        else:
            value = lucas_v(given["p"], given["q"], args.n)
    except DomainError as exc:
        return _fail_usage(str(exc))
    print(render_scalar(value))
    return 0


# ---------------------------------------------------------------------------
# verify / div
# ---------------------------------------------------------------------------

def _cmd_verify(args, ranges) -> int:
    if args.all_entries and args.id is not None:
        return _fail_usage("give an identity id or --all, not both")
    if args.all_entries and ranges:
        return _fail_usage("parameter ranges apply to a single identity, "
                           "not --all")
    if not args.all_entries and args.id is None:
        return _fail_usage("verify needs an identity id or --all")

    try:
        entries = list(catalog()) if args.all_entries else [get_entry(args.id)]
        ctx = Context()
        reports = [sweep(e, ranges or None, ctx) for e in entries]
    except UsageError as exc:
        return _fail_unknown_id(str(exc))

    if args.format == "csv":
        sys.stdout.write(verify_csv(reports))
    else:
        doc = document("verify", [sweep_payload(r) for r in reports])
        sys.stdout.write(to_json(doc))
    return 0 if all(r.verified for r in reports) else 1


def _cmd_div(args, ranges) -> int:
    try:
        entry = get_entry(args.id)
    except UsageError as exc:
        return _fail_unknown_id(str(exc))
    if entry.kind != "divisibility":
        return _fail_usage(f"{entry.id} is not a divisibility entry "
                           "(use `verify` for identities)")
    rows: list[dict] = []
    try:
        rep = sweep(entry, ranges or None, Context(),
                    on_result=lambda ev: rows.append(witness_row(ev)))
    except UsageError as exc:
        return _fail_usage(str(exc))

    if args.format == "csv":
        sys.stdout.write(div_csv(entry.params, rows))
    else:
        doc = document("div", [sweep_payload(rep, rows=rows)])
        sys.stdout.write(to_json(doc))
    return 0 if rep.verified else 1


def _cmd_catalog(args) -> int:
    if args.format == "csv":
        import csv as _csv
        import io
        buf = io.StringIO()
        writer = _csv.writer(buf, lineterminator="\n")
        writer.writerow(["identity", "kind", "params", "domain", "statement"])
        for e in catalog():
            writer.writerow([e.id, e.kind, " ".join(e.params), e.domain,
                             e.statement])
        sys.stdout.write(buf.getvalue())
    elif args.format == "json":
        sys.stdout.write(to_json(document("catalog", _catalog_payload())))
    else:
        sys.stdout.write(_catalog_text())
    return 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibsums",
        description="Exact verification of weighted Fibonacci/Lucas-family "
                    "sum identities and their divisibility corollaries.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_seq = sub.add_parser("seq", help="print one exact sequence term")
    p_seq.add_argument("family", choices=sorted(_SEQ_NEEDS))
    p_seq.add_argument("-n", type=int, required=True, help="term index")
    for flag in ("a", "b", "p", "q"):
        p_seq.add_argument(f"-{flag}", type=int, help=f"parameter {flag}")

    p_ver = sub.add_parser("verify", help="sweep identities over grids")
    p_ver.add_argument("id", nargs="?", help="catalog id, e.g. I07")
    p_ver.add_argument("--all", action="store_true", dest="all_entries",
                       help="sweep every catalog entry on its default grid")
    p_ver.add_argument("--format", choices=["json", "csv"], default="json")

    p_div = sub.add_parser("div", help="divisibility witness tables")
    p_div.add_argument("id", help="divisibility id, e.g. D01")
    p_div.add_argument("--format", choices=["json", "csv"], default="json")

    p_cat = sub.add_parser("catalog", help="list every catalog entry")
    p_cat.add_argument("--format", choices=["json", "csv", "text"],
                       default="text")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args, extras = parser.parse_known_args(argv)
    try:
        ranges = _parse_ranges(extras)
    except UsageError as exc:
        return _fail_usage(str(exc))
    if ranges and args.command not in ("verify", "div"):
        return _fail_usage(f"{args.command} does not take parameter ranges")

    if args.command == "seq":
        return _cmd_seq(args)
    if args.command == "verify":
        return _cmd_verify(args, ranges)
    if args.command == "div":
        return _cmd_div(args, ranges)
    return _cmd_catalog(args)


if __name__ == "__main__":
    sys.exit(main())
