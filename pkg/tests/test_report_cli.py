import json
import subprocess
import sys
from importlib.resources import files

import pytest

from fuzzyconn import generate_report
from fuzzyconn.cli import main
from fuzzyconn.document import load_document, parse_document
from fuzzyconn.report import render_json, render_text, report_to_dict

SAMPLE = str(files("fuzzyconn") / "data" / "sample.fsc")
NONTRANSITIVE = str(files("fuzzyconn") / "data" / "nontransitive.fsc")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# --- report


def _pair(report, a, b):
    (entry,) = [p for p in report.pairs if (p.source, p.target) == (a, b)]
    return entry.value


def test_chd_report(chd):
    report = generate_report(chd.graph, chd.subgraphs, chd.roles)
    value = _pair(report, "@H_A", "@H_D")
    assert value.value == 0.55
    assert value.witness.vertices == ("a2", "d4")
    claims = {d.claim: d for d in report.discrepancies}
    assert claims["CONN(H_A,H_D)"].published == "0.6"
    assert claims["CONN(H_A,H_D)"].computed == "0.55"


def test_report_json_schema(chd):
    data = report_to_dict(generate_report(chd.graph, chd.subgraphs, chd.roles))
    assert set(data) == {"summary", "pairs", "bridges", "strongest_path", "checks", "discrepancies"}
    assert data["summary"] == {"vertices": 13, "edges": 9, "r": "0.3", "d": "0.9", "kappa": "0.9"}
    assert data["strongest_path"] == {"path": ["c4", "d3"], "strength": "0.9"}
    assert json.loads(render_json(generate_report(chd.graph, chd.subgraphs, chd.roles))) == data


def test_report_without_subgraphs_uses_roles(chd):
    doc = chd.document()
    report = generate_report(doc.graph, {}, doc.roles)
    names = {p.source for p in report.pairs if p.source.startswith("@")}
    assert names == {"@uncontrollable", "@indicator"}


def test_report_sample_flags_vertex_claim():
    doc = load_document(SAMPLE)
    report = generate_report(doc.graph, doc.subgraphs, pairs=[("H1", "H2")])
    assert _pair(report, "@H1", "@H2").value == 0.4
    claims = {d.claim: d for d in report.discrepancies}
    assert claims["CONN(e,H)"].published == "0.4"
    assert claims["CONN(e,H)"].computed == "0.3"
    assert "CONN(e,H): published 0.4, computed 0.3" in render_text(report)


def test_report_t_equivalence():
    doc = load_document(NONTRANSITIVE)
    report = generate_report(doc.graph, doc.subgraphs, t=0.25)
    (eq,) = [c.check for c in report.checks if c.check.name == "t_equivalence"]
    assert not eq.holds
    assert eq.details["classes"] == [["@H1", "@H2", "@H3"]]
    assert eq.details["violations"] == [["@H1", "@H2", "@H3"]]


# --- CLI


def test_cli_chd_text(capsys):
    code, out, _ = run(capsys, "chd")
    assert code == 0
    assert "CONN(H_A,H_D) [path] = 0.55  via a2-d4" in out
    assert "CONN(H_A,H_D): published 0.6, computed 0.55" in out


def test_cli_chd_fsc_round_trip(capsys, chd):
    code, out, _ = run(capsys, "chd", "--format", "fsc")
    assert code == 0
    assert parse_document(out) == chd.document()


def test_cli_validate(capsys):
    code, out, _ = run(capsys, "validate", SAMPLE)
    assert code == 0
    assert "5 vertices" in out and "6 edges" in out


def test_cli_conn_vertex_to_subgraph(capsys):
    code, out, _ = run(capsys, "conn", SAMPLE, "--from", "a", "--to", "@H", "--witness")
    assert code == 0
    assert out.splitlines() == ["0.9", "witness: a-d"]


def test_cli_conn_notes_published_value(capsys):
    code, out, _ = run(capsys, "conn", SAMPLE, "--from", "e", "--to", "@H")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "0.3"
    assert "published value for CONN(e,H) is 0.4; computed 0.3" in lines[1]


def test_cli_conn_semantics(capsys):
    assert run(capsys, "conn", SAMPLE, "--from", "@H1", "--to", "@H2")[1] == "0.4\n"
    assert run(capsys, "conn", SAMPLE, "--from", "@H1", "--to", "@H2", "--semantics", "xmin")[1] == "0.1\n"
    assert run(capsys, "conn", SAMPLE, "--from", "a", "--to", "c")[1] == "0.15\n"


def test_cli_conn_no_crossing_edge(capsys):
    code, _, err = run(capsys, "conn", NONTRANSITIVE, "--from", "@H2", "--to", "@H3", "--semantics", "xmin")
    assert code == 1
    assert "error:" in err


def test_cli_bridges_verify(capsys):
    code, out, _ = run(capsys, "bridges", SAMPLE, "--verify")
    assert code == 0
    assert out.startswith("4 fuzzy bridge(s)")
    assert "verify: matches" in out


def test_cli_check(capsys):
    code, out, _ = run(capsys, "check", SAMPLE, "--pairs", "@H1", "@H2", "--t", "0.4")
    assert code == 0
    assert "bounds: holds" in out
    assert out.splitlines()[-1] == "t-connected (t=0.4, tolerance=0.0): yes"


def test_cli_check_tolerance(capsys):
    code, out, _ = run(capsys, "check", SAMPLE, "--pairs", "@H1", "@H2", "--t", "0.45", "--tolerance", "0.05")
    assert code == 0
    assert out.splitlines()[-1].endswith("yes")


def test_cli_report_json(capsys):
    code, out, _ = run(capsys, "report", NONTRANSITIVE, "--format", "json", "--t", "0.25")
    assert code == 0
    data = json.loads(out)
    (eq,) = [c for c in data["checks"] if c["name"] == "t_equivalence"]
    assert eq["holds"] is False


def test_cli_report_pairs(capsys):
    code, out, _ = run(capsys, "report", SAMPLE, "--pairs", "@H1", "@H2")
    assert code == 0
    assert "CONN(H1,H2) [path] = 0.4" in out


def test_cli_bad_file(capsys, tmp_path):
    bad = tmp_path / "bad.fsc"
    bad.write_text("fsc 1\nv a 1.0\nv b 1.0\ne a b 1.2\n")
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 1
    assert f"{bad}:4:" in err
    assert "MembershipOutOfRange" in err


def test_cli_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "validate", str(tmp_path / "nope.fsc"))
    assert code == 1
    assert "cannot read" in err


def test_cli_unknown_subgraph(capsys):
    code, _, err = run(capsys, "conn", SAMPLE, "--from", "a", "--to", "@Z")
    assert code == 1
    assert "no subgraph named 'Z'" in err


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["conn", SAMPLE, "--from", "a"],
        ["conn", SAMPLE, "--from", "a", "--to", "b", "--semantics", "avg"],
        ["check", SAMPLE, "--pairs", "@H1", "@H2", "--t", "1.5"],
    ],
)
def test_cli_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fuzzyconn", "conn", SAMPLE, "--from", "a", "--to", "@H"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "0.9\n"
