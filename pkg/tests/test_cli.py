import json
import subprocess
import sys

from alontarsi.cli import main
from alontarsi.graph import MOSER_SPINDLE, SPLIT_G2, Graph, cycle_graph
from alontarsi.graph6 import emit_graph6


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_complete(capsys):
    code, out, _ = _run(capsys, "classify", "C~", "--x", "0")
    res = json.loads(out)
    assert code == 0 and res["at"] is False and res["case"] == "complete"


def test_classify_cycle(capsys):
    code, out, _ = _run(capsys, "classify", emit_graph6(cycle_graph(5)), "--x", "0", "--oracle")
    res = json.loads(out)
    assert code == 0 and res["case"] == "degree_two_gallai" and res["oracle_at"] is False


def test_classify_spindle_certificate(capsys, tmp_path):
    g, x = MOSER_SPINDLE
    out_file = tmp_path / "res.json"
    code, out, _ = _run(capsys, "classify", emit_graph6(g), "--x", str(x), "--certify",
                        "--output", str(out_file))
    res = json.loads(out)
    assert code == 0 and res["case"] == "in_family"
    assert res["certificate"]["lists"] == [[1, 2, 3]] * 7
    assert json.loads(out_file.read_text()) == res
    cert = tmp_path / "cert.json"
    cert.write_text(json.dumps(res["certificate"]))
    code, out, _ = _run(capsys, "verify-lists", str(cert))
    assert code == 0 and out.startswith("ACCEPTED")


def test_classify_at_certificate_round_trip(capsys, tmp_path):
    code, out, _ = _run(capsys, "classify", "C^", "--x", "2", "--certify")
    res = json.loads(out)
    assert code == 0 and res["at"] is True
    cert = tmp_path / "cert.json"
    cert.write_text(json.dumps(res["certificate"]))
    code, out, _ = _run(capsys, "verify-certificate", str(cert))
    assert code == 0 and out.startswith("ACCEPTED")
    tampered = dict(res["certificate"])
    bits = tampered["orientation"]
    tampered["orientation"] = ("1" if bits[0] == "0" else "0") + bits[1:]
    cert.write_text(json.dumps(tampered))
    code, out, _ = _run(capsys, "verify-certificate", str(cert))
    assert code == 1 and out.startswith("REJECTED")


def test_classify_two_marked(capsys):
    g, (x, y) = SPLIT_G2
    code, out, _ = _run(capsys, "classify", emit_graph6(g), "--x", str(x), "--y", str(y), "--certify")
    res = json.loads(out)
    assert code == 0 and res["at"] is False and res["case"] == "oracle_only"
    assert res["certificate"] is None  # choosable, so no bad lists exist


def test_classify_input_file(capsys, tmp_path):
    k4e = Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    inp = tmp_path / "graphs.g6"
    inp.write_text("# comment\nC~\n" + emit_graph6(k4e) + "\n")
    code, out, _ = _run(capsys, "classify", "--input", str(inp), "--x", "2")
    res = json.loads(out)
    assert code == 0 and [r["at"] for r in res] == [False, True]


def test_usage_errors(capsys):
    assert _run(capsys, "classify", "C~")[0] == 2
    assert _run(capsys, "classify", "!!", "--x", "0")[0] == 2
    assert _run(capsys, "classify", "C~", "--x", "9")[0] == 2
    assert _run(capsys, "classify", "--x", "0")[0] == 2
    assert _run(capsys, "frobnicate")[0] == 2
    assert _run(capsys, "verify-certificate", "/nonexistent/cert.json")[0] == 2
    # disconnected input
    assert _run(capsys, "classify", "C?", "--x", "0")[0] == 2


def test_bad_certificate_json(capsys, tmp_path):
    f = tmp_path / "c.json"
    f.write_text("{not json")
    assert _run(capsys, "verify-certificate", str(f))[0] == 2
    f.write_text(json.dumps({"kind": "mystery"}))
    assert _run(capsys, "verify-certificate", str(f))[0] == 2


def test_guard_refusals(capsys):
    code, _, err = _run(capsys, "verify", "--scope", "hx_equivalence", "--n", "7")
    assert code == 3 and "refused" in err
    assert _run(capsys, "search", "--n", "8")[0] == 3


def test_verify_and_search(capsys, tmp_path):
    out_file = tmp_path / "rep.json"
    code, out, _ = _run(capsys, "verify", "--scope", "degree_at", "--n", "4", "--output", str(out_file))
    assert code == 0 and json.loads(out_file.read_text())["ok"]
    code, out, _ = _run(capsys, "search", "--n", "5", "--mode", "at")
    res = json.loads(out)
    assert code == 0 and res["totals"]["pair_orbits"] == len(res["entries"])


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "alontarsi", "classify", "C~", "--x", "0"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["case"] == "complete"
