import json
import subprocess
import sys

import pytest

from quiverdegen.cli import fixture_path, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_decide_yes_writes_witness(capsys, tmp_path):
    out_path = tmp_path / "verdict.json"
    code, out, _ = run(capsys, "decide", "--quiver", "a2.json", "--m", "p.json", "--n", "s1s2.json",
                       "--bound", "4", "--seed", "0", "--json", str(out_path))
    assert code == 0
    verdict = json.loads(out)
    assert verdict["status"] == "yes" and verdict["witness"]["kind"] == "rz"
    assert json.loads(out_path.read_text()) == verdict


def test_decide_no_and_dimension_mismatch(capsys):
    code, out, _ = run(capsys, "decide", "--m", "s1s2.json", "--n", "p.json")
    assert code == 1 and json.loads(out)["obstruction"]["X"] == "S1"
    code, out, err = run(capsys, "decide", "--m", "p.json", "--n", "p_wrongdims.json")
    assert code == 1 and "dimension vector mismatch" in out + err


def test_dvr_commands(capsys, tmp_path):
    code, _, _ = run(capsys, "dvr-check", "--quiver", "a2.json", "--m", "p.json", "--n", "s1s2.json",
                     "--family", "t.json")
    assert code == 0
    code, _, _ = run(capsys, "dvr-check", "--m", "s1s2.json", "--n", "p.json", "--family", "t.json")
    assert code == 1
    code, out, _ = run(capsys, "decide", "--m", "p.json", "--n", "s1s2.json")
    w = tmp_path / "w.json"
    w.write_text(out)
    code, out, _ = run(capsys, "rz-to-family", "--witness", str(w))
    assert code == 0 and "family" in json.loads(out)


def test_zwara_and_delta(capsys):
    code, out, _ = run(capsys, "zwara-search", "--m", "p.json", "--n", "s1s2.json", "--bound", "2")
    assert code == 0
    code, out, _ = run(capsys, "delta-check", "--complex-m", "s2_to_p.json", "--complex-n", "s1.json")
    assert code == 0 and json.loads(out)["status"] == "yes"
    code, out, _ = run(capsys, "delta-check", "--complex-m", "s1s2.json", "--complex-n", "p.json")
    assert code == 1


def test_small_queries(capsys):
    code, out, _ = run(capsys, "decompose", "--m", "s1s2.json")
    assert code == 0 and len(json.loads(out)["summands"]) == 2
    code, out, _ = run(capsys, "orbit-dim", "--m", "p.json")
    assert code == 0 and json.loads(out)["orbit_dimension"] == 1
    code, out, _ = run(capsys, "hom-table", "--quiver", "a2.json", "--field", "p=5", "--max-dim", "1,1")
    assert code == 0
    code, out, _ = run(capsys, "enumerate", "--quiver", "a2.json", "--field", "p=2", "--max-dim", "1,1")
    assert code == 0 and len(json.loads(out)["indecomposables"]) == 3
    code, out, _ = run(capsys, "enumerate", "--quiver", "a2.json", "--field", "p=2", "--dims", "2,2")
    assert code == 0 and len(json.loads(out)["modules"]) == 3


def test_hasse_dot(capsys, tmp_path):
    dot = tmp_path / "h.dot"
    code, out, _ = run(capsys, "hasse", "--quiver", "a2.json", "--field", "p=3", "--dims", "2,2", "--dot", str(dot))
    assert code == 0
    assert "digraph" in dot.read_text()
    assert json.loads(out)["unknown"] == []


def test_input_errors(capsys, tmp_path):
    assert run(capsys, "decide", "--m", "missing.json", "--n", "p.json")[0] == 3
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "decide", "--m", str(bad), "--n", "p.json")[0] == 3
    assert run(capsys, "decide", "--m", "p.json")[0] == 3
    assert run(capsys, "no-such-command")[0] == 3
    assert run(capsys, "enumerate", "--quiver", "a2.json", "--field", "p=7", "--max-dim", "1,1")[0] == 3


def test_tampered_witness_fails(capsys, tmp_path):
    code, out, _ = run(capsys, "decide", "--m", "p.json", "--n", "s1s2.json")
    w = json.loads(out)["witness"]
    w["v"] = {k: [["1" for _ in row] for row in rows] for k, rows in w["v"].items()}
    path = tmp_path / "w.json"
    path.write_text(json.dumps(w))
    code, out, _ = run(capsys, "verify-witness", "--witness", str(path))
    assert code == 1 and json.loads(out)["valid"] is False


@pytest.mark.parametrize("argv", [["decide", "--m", "p.json", "--n", "s1s2.json"],
                                  ["hasse", "--quiver", "a2.json", "--field", "p=5", "--dims", "1,1"]])
def test_fresh_process_determinism(tmp_path, argv):
    cmd = [sys.executable, "-m", "quiverdegen", *argv]
    first = subprocess.run(cmd, capture_output=True, text=True, cwd=tmp_path)
    second = subprocess.run(cmd, capture_output=True, text=True, cwd=tmp_path)
    assert first.returncode == 0 and first.stdout == second.stdout
    if argv[0] == "decide":
        w = tmp_path / "w.json"
        w.write_text(first.stdout)
        check = subprocess.run([sys.executable, "-m", "quiverdegen", "verify-witness", str(w)],
                               capture_output=True, text=True)
        assert check.returncode == 0


def test_fixtures_ship_with_package():
    for name in ("a1", "a2", "a3", "d4", "p", "s1", "s2", "s1s2", "t", "constant", "one_plus_t", "s2_to_p"):
        assert fixture_path(f"{name}.json").exists()
