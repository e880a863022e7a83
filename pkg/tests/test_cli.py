import json

import pytest

from chordal1p.cli import EXIT_CODES, main, run
from chordal1p.embedding import from_json, validate
from chordal1p.families import g0, two_simplicial_k_tree
from chordal1p.graph import complete_graph, format_edge_list


def _write_graph(path, g):
    path.write_text(format_edge_list(g))
    return str(path)


def _out(capsys, argv):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


@pytest.fixture
def k5_drawing(tmp_path, capsys):
    assert main(["--raw", "generate", "catalog", "--name", "K5", "--drawing"]) == 0
    p = tmp_path / "k5.drawing.json"
    p.write_text(capsys.readouterr().out)
    return p


def test_recognize(tmp_path, capsys):
    code, out = _out(capsys, ["recognize", _write_graph(tmp_path / "k5.txt", complete_graph(5))])
    assert code == 0 and out["status"] == "ok"
    r = out["result"]
    assert r["chordal"] and r["kappa"] == 4 and r["k_tree"]["4"] and r["toughness"] == "inf"


def test_recognize_reports_a_hole(tmp_path, capsys):
    (tmp_path / "c5.txt").write_text("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    _, out = _out(capsys, ["recognize", str(tmp_path / "c5.txt")])
    assert not out["result"]["chordal"] and sorted(out["result"]["hole"]) == [0, 1, 2, 3, 4]


def test_hampath_modes(tmp_path, capsys):
    g = two_simplicial_k_tree(10, 4, 3)
    f = _write_graph(tmp_path / "t.txt", g)
    for mode in ("theorem", "ktree", "oracle"):
        code, out = _out(capsys, ["hampath", f, "0", "9", "--mode", mode])
        seq = out["result"]
        assert code == 0 and sorted(seq) == list(range(10)) and (seq[0], seq[-1]) == (0, 9)
        assert all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def test_hampath_not_applicable(tmp_path, capsys):
    g, _ = g0()
    code, out = _out(capsys, ["hampath", _write_graph(tmp_path / "g0.txt", g), "1", "2"])
    assert code == EXIT_CODES["not_applicable"] == 2
    assert out["status"] == "not_applicable" and "connectivity 3" in out["result"]["reason"]
    code, out = _out(capsys, ["hampath", str(tmp_path / "g0.txt"), "1", "2", "--mode", "ktree"])
    assert code == 2 and "not a 4-tree" in out["result"]["reason"]


def test_hamconn(tmp_path, capsys):
    (tmp_path / "c6.txt").write_text("6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n")
    _, out = _out(capsys, ["hamconn", str(tmp_path / "c6.txt")])
    assert out["result"] == {"hamiltonian_connected": False, "failing_pair": [0, 2]}


def test_drawing_verbs(k5_drawing, capsys):
    f = str(k5_drawing)
    code, out = _out(capsys, ["drawing", "validate", f])
    assert code == 0 and out["result"] == {"valid": True, "crossings": 1}
    _, out = _out(capsys, ["drawing", "faces", f])
    assert len(out["result"]) == 8
    _, a = _out(capsys, ["drawing", "code", f])
    _, b = _out(capsys, ["drawing", "code", f])
    assert a == b


def test_invalid_drawing_is_a_violation(k5_drawing, capsys):
    data = json.loads(k5_drawing.read_text())
    order = data["rotation"]["order"]
    order[0][0], order[0][1] = order[0][1], order[0][0]
    assert validate(from_json(json.dumps(data))) is not True
    k5_drawing.write_text(json.dumps(data))
    code, out = _out(capsys, ["drawing", "validate", str(k5_drawing)])
    assert code == EXIT_CODES["violation"] == 3 and out["status"] == "violation"
    assert out["result"]["kind"]


def test_scale_exceeded(tmp_path, capsys):
    code, out = _out(capsys, ["hamconn", _write_graph(tmp_path / "k13.txt", complete_graph(13))])
    assert code == EXIT_CODES["scale_exceeded"] == 4 and "n <= 12" in out["result"]["reason"]
    code, _ = _out(capsys, ["generate", "twosimp", "--n", "9", "--k", "3", "--seed", "1"])
    assert code == 0


def test_one_planar(tmp_path, capsys):
    code, out = _out(capsys, ["oneplanar", _write_graph(tmp_path / "k7.txt", complete_graph(7))])
    assert code == 0 and out["result"]["verdict"] == "impossible"
    code, out = _out(capsys, ["oneplanar", _write_graph(tmp_path / "k6.txt", complete_graph(6))])
    assert code == 0 and out["result"]["verdict"] == "drawing"
    assert validate(from_json(json.dumps(out["result"]["drawing"]))) is True
    g, _ = g0()
    code, out = _out(capsys, ["oneplanar", _write_graph(tmp_path / "g0.txt", g), "--budget", "1"])
    assert code == EXIT_CODES["scale_exceeded"] and out["result"]["verdict"] == "exhausted"


@pytest.mark.parametrize("argv", [
    [],
    ["recognize"],
    ["recognize", "/nonexistent/file.txt"],
    ["hampath", "x.txt", "0"],
    ["generate", "catalog", "--name", "nope"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 1


def test_same_ends_is_usage_error(tmp_path):
    assert main(["hampath", _write_graph(tmp_path / "k5.txt", complete_graph(5)), "1", "1"]) == 1


def test_raw_round_trip(tmp_path, capsys):
    assert main(["--raw", "generate", "g0", "--drawing"]) == 0
    p = tmp_path / "g0.drawing.json"
    p.write_text(capsys.readouterr().out)
    d = from_json(p.read_text())
    assert d.graph == g0()[0] and validate(d) is True
    code, out = _out(capsys, ["drawing", "membership", str(p)])
    assert code == 0 and out["result"]["accepted"] is False


def test_generate(capsys):
    _, out = _out(capsys, ["generate", "alltrees", "--n", "8", "--k", "4"])
    assert len(out["result"]) == 5
    _, out = _out(capsys, ["generate", "glued", "--depth", "1"])
    assert out["result"]["n"] == 23 and len(out["result"]["cut"]) == 5
    _, out = _out(capsys, ["generate", "phi", "--order", "9"])
    assert out["result"]["counts"] == {"7": 2, "8": 3, "9": 6}
    _, a = _out(capsys, ["generate", "ktree", "--n", "11", "--seed", "5"])
    _, b = _out(capsys, ["generate", "ktree", "--n", "11", "--seed", "5"])
    assert a == b


def test_run_returns_structured_result():
    res = run(["generate", "catalog", "--name", "K6"])
    assert res.status == "ok" and res.payload["n"] == 6 and len(res.payload["edges"]) == 15
