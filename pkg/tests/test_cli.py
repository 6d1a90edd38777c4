"""Command-line interface: frozen outputs, exit codes, report schema."""

import csv
import io
import json

import jsonschema
import pytest

from fibsums.cli import main

DOCUMENT_SCHEMA = {
    "type": "object",
    "required": ["format", "generator", "command", "reports"],
    "additionalProperties": False,
    "properties": {
        "format": {"const": 1},
        "generator": {"type": "string", "pattern": "^fibsums "},
        "command": {"type": "string"},
        "reports": {"type": "array", "items": {
            "type": "object",
            "required": ["identity", "kind", "statement", "domain", "params",
                         "grid", "pass", "rejected", "failure_count",
                         "verified", "primary_variant", "variant_pass",
                         "notes", "failures"],
            "properties": {
                "identity": {"type": "string"},
                "kind": {"enum": ["identity", "divisibility"]},
                "statement": {"type": "string"},
                "domain": {"type": "string"},
                "params": {"type": "array", "items": {"type": "string"}},
                "grid": {"type": "array", "items": {
                    "type": "object",
                    "required": ["params", "values"],
                }},
                "pass": {"type": "integer", "minimum": 0},
                "rejected": {"type": "integer", "minimum": 0},
                "failure_count": {"type": "integer", "minimum": 0},
                "verified": {"type": "boolean"},
                "primary_variant": {"type": "string"},
                "variant_pass": {
                    "type": "object",
                    "additionalProperties": {"type": "integer"},
                },
                "notes": {"type": "array", "items": {"type": "string"}},
                "failures": {"type": "array"},
                "rows": {"type": "array", "items": {
                    "type": "object",
                    "required": ["bindings", "witnesses"],
                }},
            },
        }},
    },
}


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    doc = json.loads(out)
    jsonschema.validate(doc, DOCUMENT_SCHEMA)
    return code, doc, err


class TestSeq:
    @pytest.mark.parametrize("argv,expected", [
        (("seq", "fib", "-n", "10"), "55"),
        (("seq", "fib", "-n", "-4"), "-3"),
        (("seq", "lucas", "-n", "-3"), "-4"),
        (("seq", "pell", "-n", "5"), "29"),
        (("seq", "pell_lucas", "-n", "4"), "34"),
        (("seq", "horadam", "-a", "2", "-b", "3", "-p", "3", "-q", "2",
          "-n", "-2"), "5/4"),
        (("seq", "u", "-p", "3", "-q", "2", "-n", "4"), "15"),
        (("seq", "v", "-p", "3", "-q", "2", "-n", "2"), "5"),
    ])
    def test_frozen_terms(self, capsys, argv, expected):
        assert run_cli(capsys, *argv) == (0, expected + "\n", "")

    def test_missing_parameters(self, capsys):
        code, out, err = run_cli(capsys, "seq", "horadam", "-n", "3")
        assert code == 2 and out == "" and err.startswith("error:")
        code, _, err = run_cli(capsys, "seq", "u", "-p", "3", "-n", "1")
        assert code == 2 and "-q" in err

    def test_extra_parameters(self, capsys):
        code, _, err = run_cli(capsys, "seq", "fib", "-n", "3", "-p", "1")
        assert code == 2 and "does not take" in err

    def test_degenerate_recurrence(self, capsys):
        # u/v need no distinct roots: u_n(2,1) = n is well-defined
        code, out, _ = run_cli(capsys, "seq", "u", "-p", "2", "-q", "1",
                               "-n", "3")
        assert code == 0 and out.strip() == "3"
        code, _, err = run_cli(capsys, "seq", "horadam", "-a", "0", "-b", "1",
                               "-p", "0", "-q", "1", "-n", "3")
        assert code == 2 and "p != 0" in err

    def test_argparse_level_errors_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["seq", "tribonacci", "-n", "1"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2


class TestVerify:
    def test_single_entry_json(self, capsys):
        code, doc, err = run_json(capsys, "verify", "I07",
                                  "--r=-1..1", "--n=0..5")
        assert code == 0 and err == ""
        assert doc["command"] == "verify"
        (rep,) = doc["reports"]
        assert rep["identity"] == "I07" and rep["kind"] == "identity"
        assert rep["pass"] == 12 and rep["rejected"] == 6
        assert rep["failure_count"] == 0 and rep["verified"] is True
        assert rep["variant_pass"] == {"as-stated": 12}
        assert rep["primary_variant"] == "as-stated"
        assert rep["grid"] == [
            {"params": ["r"], "values": [["-1"], ["0"], ["1"]]},
            {"params": ["n"],
             "values": [["0"], ["1"], ["2"], ["3"], ["4"], ["5"]]},
        ]

    def test_single_point_range(self, capsys):
        code, doc, _ = run_json(capsys, "verify", "I07", "--r=2", "--n=0")
        assert code == 0
        assert doc["reports"][0]["pass"] == 1

    def test_csv_summary(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "I07", "--format", "csv",
                               "--r=-1..1", "--n=0..5")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["identity", "kind", "pass", "rejected", "failures",
                           "verified", "primary_variant"]
        assert rows[1] == ["I07", "identity", "12", "6", "0", "True",
                           "as-stated"]

    def test_unknown_id_prints_catalog_to_stderr(self, capsys):
        code, out, err = run_cli(capsys, "verify", "BOGUS")
        assert code == 2 and out == ""
        assert "unknown catalog id 'BOGUS'" in err
        assert "known catalog entries:" in err
        assert "I01" in err and "D22" in err

    def test_id_and_all_are_exclusive(self, capsys):
        code, _, err = run_cli(capsys, "verify", "I07", "--all")
        assert code == 2 and "not both" in err

    def test_all_refuses_ranges(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--all", "--r=1..2")
        assert code == 2 and "single identity" in err

    def test_verify_needs_a_target(self, capsys):
        code, _, err = run_cli(capsys, "verify")
        assert code == 2 and "id or --all" in err

    def test_unknown_range_parameter(self, capsys):
        code, _, err = run_cli(capsys, "verify", "I07", "--z=1..2")
        assert code == 2 and "unknown parameter" in err

    def test_malformed_and_duplicate_ranges(self, capsys):
        code, _, err = run_cli(capsys, "verify", "I07", "--r=1..x")
        assert code == 2 and "unrecognized argument" in err
        code, _, err = run_cli(capsys, "verify", "I07", "--r=1..2", "--r=3")
        assert code == 2 and "duplicate range" in err

    def test_ranges_only_for_verify_and_div(self, capsys):
        code, _, err = run_cli(capsys, "catalog", "--r=1..2")
        assert code == 2 and "does not take parameter ranges" in err
        code, _, err = run_cli(capsys, "seq", "fib", "-n", "1", "--r=1..2")
        assert code == 2

    def test_failing_entry_exits_1(self, capsys, monkeypatch):
        from fibsums import identities
        from fibsums.identities import Entry, Outcome, Side, axis

        bad = Entry(
            id="XBAD", kind="identity", statement="zero equals one",
            params=("n",), domain="n >= 0", guards=(),
            evaluate=lambda ctx, b: Outcome(
                sides=[Side("left", 0), Side("right", 1)]),
            grid=(axis("n", [0, 1]),))
        monkeypatch.setitem(identities._BY_ID, "XBAD", bad)

        code, doc, _ = run_json(capsys, "verify", "XBAD")
        assert code == 1
        (rep,) = doc["reports"]
        assert rep["verified"] is False
        assert rep["failure_count"] == 2 and rep["pass"] == 0
        failure = rep["failures"][0]
        assert failure["first_difference"] == ["left", "right"]
        assert failure["equal"] is False
        assert failure["sides"][0]["value"] == "0"


class TestDiv:
    def test_fully_rejected_grid_exits_0(self, capsys):
        code, doc, _ = run_json(capsys, "div", "D01", "--r=0..0", "--m=1..1")
        assert code == 0
        (rep,) = doc["reports"]
        assert rep["pass"] == 0 and rep["rejected"] == 1
        assert rep["verified"] is True and rep["rows"] == []

    def test_witness_rows_json(self, capsys):
        code, doc, _ = run_json(capsys, "div", "D01", "--r=3..3", "--m=3..3")
        assert code == 0
        (rep,) = doc["reports"]
        assert rep["rows"] == [{
            "bindings": {"r": "3", "m": "3"},
            "witnesses": [{"label": "F_r | F_(mr)", "divisor": "2",
                           "dividend": "34", "quotient": "17",
                           "residue": None}],
        }]

    def test_witness_rows_csv(self, capsys):
        code, out, _ = run_cli(capsys, "div", "D01", "--format", "csv",
                               "--r=3..3", "--m=2..3")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["r", "m", "label", "divisor", "dividend",
                           "quotient", "residue"]
        assert rows[1] == ["3", "2", "F_r | F_(mr)", "2", "8", "4", ""]
        assert rows[2] == ["3", "3", "F_r | F_(mr)", "2", "34", "17", ""]

    def test_identity_entries_are_refused(self, capsys):
        code, _, err = run_cli(capsys, "div", "I07")
        assert code == 2 and "not a divisibility entry" in err

    def test_unknown_id(self, capsys):
        code, _, err = run_cli(capsys, "div", "NOPE")
        assert code == 2 and "known catalog entries:" in err

    def test_failing_witness_exits_1(self, capsys, monkeypatch):
        from fibsums import identities
        from fibsums.identities import Entry, Outcome, axis, make_witness

        bad = Entry(
            id="XDIV", kind="divisibility", statement="three divides ten",
            params=("n",), domain="n >= 0", guards=(),
            evaluate=lambda ctx, b: Outcome(
                witnesses=[make_witness("3 | 10", 3, 10)]),
            grid=(axis("n", [0]),))
        monkeypatch.setitem(identities._BY_ID, "XDIV", bad)

        code, doc, _ = run_json(capsys, "div", "XDIV")
        assert code == 1
        (rep,) = doc["reports"]
        assert rep["verified"] is False
        witness = rep["rows"][0]["witnesses"][0]
        assert witness["quotient"] is None and witness["residue"] == "1"


class TestCatalogCommand:
    def test_text_listing(self, capsys):
        code, out, err = run_cli(capsys, "catalog")
        assert code == 0 and err == ""
        lines = out.splitlines()
        assert len(lines) == 62
        assert lines[0].startswith("I01")
        flagged = [ln for ln in lines if "[two displayed readings]" in ln]
        assert sorted(ln.split()[0] for ln in flagged) \
            == ["H10", "I10", "I11", "I16", "I17"]

    def test_json_listing(self, capsys):
        code, out, _ = run_cli(capsys, "catalog", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["command"] == "catalog" and len(doc["reports"]) == 62
        first = doc["reports"][0]
        assert first["identity"] == "I01" and first["params"]

    def test_csv_listing(self, capsys):
        code, out, _ = run_cli(capsys, "catalog", "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert len(rows) == 63
        assert rows[0] == ["identity", "kind", "params", "domain", "statement"]


class TestDeterminism:
    @pytest.mark.parametrize("argv", [
        ("verify", "I16", "--r=2..3", "--t=0..1", "--n=0..2"),
        ("div", "D16", "--r=1..2", "--k=0..1", "--s=0..1", "--n=0..2"),
        ("catalog", "--format", "json"),
    ])
    def test_repeated_runs_are_byte_identical(self, capsys, argv):
        first = run_cli(capsys, *argv)
        second = run_cli(capsys, *argv)
        assert first == second
        assert first[0] == 0
