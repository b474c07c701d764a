import json
from pathlib import Path
import subprocess
import sys

import pytest

from tilez.cli import main
from tilez.corpus import corpus
from tilez.documents import dumps, loads
from test_box import GAPPY_RADIUS


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_decide_domino_grid(capsys):
    code, out, _ = run(capsys, "decide", "--grid", "##")
    doc = json.loads(out)
    assert code == 0 and doc["verdict"] == "tiles"
    lat = doc["lattice"]
    assert lat["p"] * lat["r"] == 2


def test_decide_tromino_file(tmp_path, capsys):
    path = tmp_path / "tromino.json"
    path.write_text(json.dumps({"name": "L", "grid": ["#.", "##"]}))
    cert = tmp_path / "cert.json"
    code, out, _ = run(capsys, "decide", str(path), "--emit-cert", str(cert))
    assert code == 0 and "index=3" in out
    doc = loads(cert.read_text())
    assert doc["tile"]["name"] == "L"
    assert run(capsys, "verify", str(cert))[0] == 0


def test_decide_gappy(capsys):
    code, out, _ = run(capsys, "decide", "--cells", "0,0 1,0 3,0")
    doc = json.loads(out)
    assert code == 1 and doc["radius"] == GAPPY_RADIUS


def test_decide_inconclusive(tmp_path, capsys):
    cert = tmp_path / "c.json"
    code, out, _ = run(capsys, "decide", "--cells", "0,0 1,0 3,0", "--max-index", "3",
                       "--max-box", "1", "--emit-cert", str(cert))
    assert code == 2 and "inconclusive" in out and not cert.exists()
    code, out, _ = run(capsys, "decide", "--cells", "0,0 1,0 3,0", "--max-index", "3", "--max-box", "1")
    assert code == 2
    path = tmp_path / "inc.json"
    path.write_text(out)
    code, _, err = run(capsys, "verify", str(path))
    assert code == 64 and "NotVerifiable" in err


def test_grid_and_cells_same_output(capsys):
    a = run(capsys, "decide", "--grid", "#./##")
    b = run(capsys, "decide", "--cells", "0,0 1,0 0,1")
    assert a == b


@pytest.mark.parametrize("argv", [
    ["decide"],
    ["decide", "--grid", "#x"],
    ["decide", "--grid", "##", "--cells", "0,0"],
    ["decide", "--grid", "##", "--schedule", "nope"],
    ["decide", "--grid", "##", "--max-index", "-"],
    ["decide", "/nonexistent/tile.json"],
    ["frobnicate"],
    ["render", "/nonexistent.json"],
])
def test_usage_errors(argv, capsys):
    assert run(capsys, *argv)[0] == 64


def test_threads_env(monkeypatch, capsys):
    monkeypatch.setenv("TILEZ_THREADS", "2")
    assert run(capsys, "decide", "--grid", "##")[0] == 0
    monkeypatch.setenv("TILEZ_THREADS", "many")
    assert run(capsys, "decide", "--grid", "##")[0] == 64


def test_verify_tampered(tmp_path, capsys):
    cert = tmp_path / "cert.json"
    run(capsys, "decide", "--cells", "0,0 1,0", "--max-index", "2", "--emit-cert", str(cert))
    doc = loads(cert.read_text())
    doc["reps"].append([1, 0])
    cert.write_text(dumps(doc))
    code, out, _ = run(capsys, "verify", str(cert))
    assert code == 1 and "INVALID" in out
    cert.write_text("{")
    assert run(capsys, "verify", str(cert))[0] == 64


def test_periodize_builtin(tmp_path, capsys):
    cert = tmp_path / "p.json"
    code, _, _ = run(capsys, "periodize", "--grid", "##", "--oracle", "random-rows:42",
                     "--h", "2,0", "--emit-cert", str(cert))
    assert code == 0
    assert run(capsys, "verify", str(cert))[0] == 0
    code, out, _ = run(capsys, "periodize", "--grid", "#", "--oracle", "brick")
    assert code == 0 and json.loads(out)["verdict"] == "tiles"
    code, out, _ = run(capsys, "periodize", "--grid", "#/#", "--oracle", "random-rows", "--seed", "5")
    assert code == 0


def test_periodize_failures(tmp_path, capsys):
    rows = {str(y): [0] for y in range(8)}
    rows["1"] = [0, 1]
    rows["5"] = [0, 1]
    table = tmp_path / "bad.json"
    table.write_text(json.dumps({"m": 2, "y_range": [0, 7], "rows": rows}))
    code, _, err = run(capsys, "periodize", "--grid", "##", "--oracle", str(table))
    assert code == 3 and "PromiseViolated" in err
    code, _, err = run(capsys, "periodize", "--grid", "####", "--oracle", "brick")
    assert code == 3 and "BudgetExceeded" in err
    short = tmp_path / "short.json"
    short.write_text(json.dumps({"m": 2, "y_range": [0, 3], "rows": {"0": [0], "1": [1]}}))
    code, _, err = run(capsys, "periodize", "--grid", "##", "--oracle", str(short))
    assert code == 3 and "WindowOutOfRange" in err
    assert run(capsys, "periodize", "--grid", "#./##", "--oracle", "brick")[0] == 64


def test_periodize_window_table(tmp_path, capsys):
    rows = {str(y): [y % 2] for y in range(0, 40)}
    table = tmp_path / "ok.json"
    table.write_text(json.dumps({"m": 2, "y_range": [0, 39], "rows": rows}))
    cert = tmp_path / "c.json"
    code, _, _ = run(capsys, "periodize", "--grid", "##", "--oracle", str(table), "--emit-cert", str(cert))
    assert code == 0 and run(capsys, "verify", str(cert))[0] == 0


def test_render(tmp_path, capsys):
    cert = tmp_path / "d.json"
    run(capsys, "decide", "--grid", "##", "--emit-cert", str(cert))
    code, out, _ = run(capsys, "render", str(cert), "--width", "4", "--height", "2")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2 and all(len(line) == 4 for line in lines)
    assert len(set(out) - {"\n"}) == 4
    bad = tmp_path / "b.json"
    run(capsys, "decide", "--cells", "0,0 1,0 3,0", "--emit-cert", str(bad))
    assert run(capsys, "render", str(bad))[0] == 64
    assert run(capsys, "render", str(cert), "--width", "0")[0] == 64


def test_decide_line(capsys):
    code, out, _ = run(capsys, "decide-line", "0", "2")
    assert code == 0 and json.loads(out)["period"] == 4
    code, out, _ = run(capsys, "decide-line", "0", "1", "3")
    assert code == 1 and json.loads(out)["verdict"] == "does_not_tile"


def test_oracle_subcommand(capsys):
    code, out, _ = run(capsys, "oracle", "box", "--cells", "0,0 1,0 3,0")
    assert code == 0 and json.loads(out)["oracle_answer"] == GAPPY_RADIUS
    code, out, _ = run(capsys, "oracle", "torus", "--grid", "#./##", "--lattice", "3", "1", "1")
    assert json.loads(out)["oracle_answer"] == [[0, 0]]
    code, out, _ = run(capsys, "oracle", "line", "0", "2")
    assert json.loads(out)["oracle_answer"] == [4, [0, 1]]


def test_shipped_corpus_matches_enumerator(capsys):
    shipped = Path(__file__).resolve().parent.parent / "corpus" / "polyominoes_le5.json"
    docs = loads(shipped.read_text())
    assert len(docs) == 91
    assert [tuple(map(tuple, d["cells"])) for d in docs] == [t.cells for t in corpus(5)]
    code, out, _ = run(capsys, "corpus")
    assert out == shipped.read_text()


def test_console_script_entry():
    proc = subprocess.run([sys.executable, "-m", "tilez.cli", "decide", "--grid", "#"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.endswith("\n")
