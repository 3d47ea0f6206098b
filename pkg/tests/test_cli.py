import csv
import io
import json

import pytest

from gradedpi.catalog import build
from gradedpi.cli import run
from gradedpi.io import save


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_codim_commutative_totals(capsys):
    code, out, _ = call(capsys, "codim", "--algebra", "catalog:A2(3)@Z3", "--n", "4", "--out", "json")
    assert code == 0
    reps = json.loads(out)
    assert [r["totals"]["c"] for r in reps] == [3, 9, 27, 81]
    assert set(reps[0]["tuples"][0]) == {"tuple", "c", "cz", "cdelta"}


def test_codim_csv_columns(capsys):
    code, out, _ = call(capsys, "codim", "--algebra", "catalog:A6(g,1,g)@Z2", "--n", "2", "--out", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == ["n", "tuple", "c", "cz", "cdelta"]
    assert len(rows) == 1 + 2 + 4


def test_reports_are_byte_stable(capsys):
    args = ("codim", "--algebra", "catalog:E_trivial", "--n", "4", "--crosscheck", "3", "--seed", "11")
    first = call(capsys, *args)
    second = call(capsys, *args)
    assert first == second and first[0] == 0
    assert all(c["agree"] for c in json.loads(first[1])["oracle"])


def test_algebra_file(tmp_path, capsys):
    path = tmp_path / "a.json"
    save(build("A1(g,1)@Z2").body, path)
    code, out, _ = call(capsys, "codim", "--algebra", str(path), "--n", "3")
    assert code == 0 and [r["totals"]["c"] for r in json.loads(out)] == [2, 7, 28]


def test_report_file(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, out, _ = call(capsys, "catalog", "list", "--report", str(path))
    assert code == 0 and out == ""
    assert any(r["id"] == "A6" for r in json.loads(path.read_text()))


def test_exponent_template(capsys):
    code, out, _ = call(capsys, "exponent", "--algebra", "catalog:A6(g,1,g)@Z2", "--delta",
                        "--mode", "template", "--max-degree", "6")
    rep = json.loads(out)
    assert code == 0 and rep["exp_G"] == 3 and rep["delta_exact"] == 3


def test_classify_with_label_map(tmp_path, capsys):
    labels = tmp_path / "labels.json"
    labels.write_text('{"t": [1]}')
    code, out, _ = call(capsys, "classify", "--algebra", "catalog:A3@Z4", "--labels", str(labels),
                        "--poly", "[x1:t,x2:t]")
    assert code == 0 and json.loads(out)["verdict"] == "identity"


def test_verify_suite(capsys):
    code, out, _ = call(capsys, "verify", "--suite", "lemma3.2", "--max-degree", "3")
    assert code == 0 and json.loads(out)["passed"]


@pytest.mark.parametrize("argv", [
    ("codim", "--algebra", "catalog:Q7(g)@Z2", "--n", "2"),
    ("codim", "--n", "2"),
    ("codim", "--algebra", "missing.json", "--n", "2"),
    ("codim", "--algebra", "catalog:A2(2)@Z2", "--n", "0"),
    ("classify", "--algebra", "catalog:A2(2)@Z2", "--poly", "x1:1 +"),
    ("verify", "--suite", "nosuch"),
    ("exponent", "--algebra", "catalog:A2(2)@Z2", "--out", "csv"),
    ("frobnicate",),
])
def test_usage_errors(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2 and err


def test_malformed_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"name": "x", "group": {"orders": [2]}}')
    code, _, err = call(capsys, "codim", "--algebra", str(path), "--n", "2")
    assert code == 2 and "missing field" in err


def test_budget_refusals(capsys, monkeypatch):
    code, _, err = call(capsys, "codim", "--algebra", "catalog:A2(2)@Z2", "--n", "8")
    assert code == 3 and "budget" in err
    monkeypatch.setenv("GPI_BUDGET_MS", "1")
    code, _, _ = call(capsys, "codim", "--algebra", "catalog:A6(g,1,g)@Z2", "--n", "5")
    assert code == 3
