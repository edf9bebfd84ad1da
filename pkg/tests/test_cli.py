import csv
import io
import json

import pytest

from bowditch.cli import main
from conftest import MODULAR_A, MODULAR_B


@pytest.fixture
def write(tmp_path):
    def _write(name, doc):
        path = tmp_path / name
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(path)

    return _write


MODULAR = {"backend": "plane", "A": MODULAR_A, "B": MODULAR_B}
PARABOLIC = {"backend": "plane", "A": [["1", "1"], ["0", "1"]], "B": [["2", "1"], ["1", "1"]]}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_certify_modular_heuristic(write, capsys, tmp_path):
    path = write("rep.json", MODULAR)
    code, out, err = run(capsys, "certify", "--input", path, "--c-override", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "heuristic-bowditch" and doc["mode"] == "heuristic"
    assert doc["budget"]["used"] > 0
    assert "wall time" in err and "wall time" not in out
    csv_path = tmp_path / "levels.csv"
    code, _, _ = run(capsys, "--command", "certify", "--input", path, "--c-override", "5", "--format", "csv", "--output", str(csv_path))
    assert code == 0
    rows = list(csv.reader(io.StringIO(csv_path.read_text())))
    assert rows[0][:3] == ["slope", "word", "length"]
    assert {"1/0", "0/1", "1/1", "-1/1"} <= {r[0] for r in rows[1:]}


def test_certify_parabolic(write, capsys):
    code, out, _ = run(capsys, "certify", "--input", write("p.json", PARABOLIC))
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "not-bowditch"
    assert doc["witness"]["kind"] == "non-hyperbolic-primitive" and doc["witness"]["slope"] == "1/0"


@pytest.mark.parametrize(
    "doc",
    [
        "{not json",
        {"backend": "hyperbolic-4", "A": MODULAR_A, "B": MODULAR_B},
        {"backend": "plane", "A": [["2", "1"], ["1", "2"]], "B": MODULAR_B},
        {"backend": "plane", "A": MODULAR_A},
        {"backend": "cayley_tree", "A": "axb", "B": "b"},
    ],
)
def test_bad_input_exits_2(write, capsys, doc):
    code, _, err = run(capsys, "certify", "--input", write("bad.json", doc))
    assert code == 2
    assert err.startswith("bowditch:")


def test_missing_file_and_command(capsys, tmp_path):
    assert run(capsys, "certify", "--input", str(tmp_path / "nope.json"))[0] == 2
    assert run(capsys, "--input", str(tmp_path / "nope.json"))[0] == 2


def test_report_is_deterministic(write, capsys):
    path = write("rep.json", MODULAR)
    first = run(capsys, "certify", "--input", path, "--c-override", "5")[1]
    second = run(capsys, "certify", "--input", path, "--c-override", "5")[1]
    assert first == second


def test_verify_certificate_round_trip(write, capsys, tmp_path):
    path = write("rep.json", MODULAR)
    cert = tmp_path / "cert.json"
    assert run(capsys, "certify", "--input", path, "--c-override", "5", "--output", str(cert))[0] == 0
    code, out, _ = run(capsys, "verify-certificate", "--input", path, "--certificate", str(cert))
    assert code == 0 and json.loads(out)["passed"]

    doc = json.loads(cert.read_text())
    doc["certificate"]["regions"] = doc["certificate"]["regions"][:-1]
    tampered = write("tampered.json", doc)
    code, out, _ = run(capsys, "verify-certificate", "--input", path, "--certificate", tampered)
    assert code == 1 and not json.loads(out)["passed"]

    assert run(capsys, "verify-certificate", "--input", path)[0] == 2


def test_tree_certify(write, capsys):
    code, out, _ = run(capsys, "certify", "--input", write("t.json", {"backend": "cayley_tree", "A": "a", "B": "b"}))
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "certified-bowditch" and doc["certificate"]["kind"] == "sink"


def test_scan_grid(write, capsys):
    grid = {"backend": "plane", "grid": {"trA": ["3", "4", 2], "trB": ["3", "3", 1], "trAB": "3"}}
    code, out, _ = run(capsys, "scan", "--input", write("g.json", grid), "--c-override", "5", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["trA", "trB", "trAB", "verdict", "detail"]
    assert len(rows) == 3
    assert rows[1][3] == "heuristic-bowditch"
    assert run(capsys, "scan", "--input", write("g2.json", {"backend": "plane"}))[0] == 2


def test_oracle_command(write, capsys):
    code, out, _ = run(capsys, "oracle", "--input", write("rep.json", MODULAR), "--c-override", "5", "--max-length", "6")
    assert code == 0
    doc = json.loads(out)
    assert doc["max_word_length"] == 6


def test_dump_tree_and_levelset(write, capsys):
    path = write("rep.json", MODULAR)
    code, out, _ = run(capsys, "dump-tree", "--input", path, "--c-override", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["finite"] and doc["edges"]
    code, out, _ = run(capsys, "dump-levelset", "--input", path, "--c-override", "5")
    assert code == 0
    rows = json.loads(out)["regions"]
    assert {"1/0", "0/1"} <= {r["slope"] for r in rows}


def test_check_identities(write, capsys):
    code, out, _ = run(capsys, "check-identities", "--input", write("rep.json", MODULAR))
    assert code == 0
    doc = json.loads(out)
    assert float(doc["edge_residual"]) < 1e-9 and float(doc["vertex_residual"]) < 1e-9
    assert abs(float(doc["traces"]["[A,B]"]) + 2) < 1e-9
    tree = write("t.json", {"backend": "cayley_tree", "A": "a", "B": "b"})
    assert run(capsys, "check-identities", "--input", tree)[0] == 2
