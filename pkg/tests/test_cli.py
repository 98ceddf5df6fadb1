import io
import json
import subprocess
import sys

from hcsuper import verify
from hcsuper.cli import main
from hcsuper.rootsys import build_root_system, from_json, parse_family


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    assert code == 0, text
    return json.loads(text)


def test_roots_b01():
    data = run_json("roots", "--family", "B", "--m", "0", "--n", "1")
    even = {tuple(r["coords"]) for r in data["roots"] if r["parity"] == "even"}
    odd = {tuple(r["coords"]) for r in data["roots"] if r["parity"] == "odd"}
    assert even == {("2",), ("-2",)} and odd == {("1",), ("-1",)}


def test_roots_round_trip():
    data = run_json("roots", "--family", "D21a", "--alpha", "1/2")
    assert from_json(data) == build_root_system(parse_family("D21a", alpha="1/2"))


def test_components_d21a():
    assert run_json("components", "--family", "D21a", "--alpha", "1/2", "--form", "sl2x3") == {"components_p1": 4}
    code, text = run("components", "--family", "D21a", "--alpha", "1/2", "--form", "sl2x3", "--format", "text")
    assert code == 0 and text.strip() == "4"


def test_character_b01():
    data = run_json("character", "--family", "B", "--m", "0", "--n", "1", "--lambda", "5", "--depth", "3")
    assert [t["mult"] for t in data["terms"]] == [1, 1, 1, 1]
    assert [t["mu"] for t in data["terms"]] == [["5"], ["4"], ["3"], ["2"]]
    brute = run_json("character", "--family", "B", "--m", "0", "--n", "1", "--lambda", "5", "--depth", "3",
                     "--method", "bruteforce")
    assert brute == data


def test_admissible_report():
    data = run_json("admissible", "--family", "A", "--m", "2", "--n", "1", "--p", "2", "--r", "1")
    assert data["admissible"] is True
    assert data["components_p1"] == 4
    assert set(data) >= {"P_k", "P_n0", "P_n1", "admissible", "components_p1"}


def test_admissible_enumerate_and_flip():
    data = run_json("admissible", "--family", "B", "--m", "0", "--n", "1", "--enumerate")
    assert len(data["admissible_systems"]) == 2
    flipped = run_json("admissible", "--family", "B", "--m", "0", "--n", "1", "--flip")
    assert flipped["P_n1"] == [["-1"]]


def test_irreducible():
    data = run_json("irreducible", "--family", "B", "--m", "0", "--n", "1", "--lambda", "0", "--depth", "4")
    assert data["criterion"] is False and data["depth"] == 4
    assert [s["mu"] for s in data["singular_vectors"]] == [["-1"]]
    data = run_json("irreducible", "--family", "B", "--m", "0", "--n", "1", "--lambda", "-2", "--depth", "4")
    assert data == {"criterion": True, "depth": 4, "singular_vectors": []}
    data = run_json("irreducible", "--family", "G3", "--lambda", "0,0,0", "--depth", "2")
    assert data["singular_vectors"] is None


def test_linkage_and_typical():
    data = run_json("linkage", "--family", "B", "--m", "0", "--n", "1", "--lambda", "1/2", "--mu=-3/2")
    assert data["linked"] is True
    data = run_json("linkage", "--family", "B", "--m", "0", "--n", "1", "--lambda", "1/2", "--mu", "3/2")
    assert data["linked"] is False
    data = run_json("typical", "--family", "A", "--m", "1", "--n", "0", "--p", "2", "--lambda", "3,0,0")
    assert data["typical"] is False
    code, _ = run("linkage", "--family", "A", "--m", "1", "--n", "0", "--p", "2", "--lambda", "3,0,0", "--mu", "3,0,0")
    assert code == 2


def test_table_a():
    data = run_json("table", "--family", "A", "--m", "1", "--n", "0")
    assert len(data["rows"]) == 3 * 2
    assert all(r["admissible"] for r in data["rows"])


def test_usage_errors():
    assert run("roots", "--family", "A", "--m", "1", "--n", "1")[0] == 2
    assert run("roots", "--family", "Q")[0] == 2
    assert run("character", "--family", "B", "--n", "1", "--lambda", "x", "--depth", "1")[0] == 2
    assert run("character", "--family", "B", "--n", "1", "--lambda", "0", "--depth", "-1")[0] == 2
    assert run("components", "--family", "B", "--m", "2", "--n", "1", "--form", "bogus")[0] == 2
    assert run("character", "--family", "A", "--m", "1", "--p", "2", "--lambda", "0,1,0", "--depth", "1")[0] == 2
    assert run()[0] == 2


def test_deterministic_output():
    argv = ["admissible", "--family", "C", "--n", "3", "--enumerate"]
    assert run(*argv) == run(*argv)


def test_verify_exit_code(monkeypatch):
    monkeypatch.setattr(verify, "run", lambda seed=0: [("a", True, 0.0), ("b", False, 0.0)])
    code, text = run("verify")
    assert code == 1
    assert json.loads(text)["failed"] == 1
    monkeypatch.setattr(verify, "run", lambda seed=0: [("a", True, 0.0)])
    assert run("verify")[0] == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hcsuper", "components", "--family", "G3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"components_p1": 1}


def test_verify_suite_passes():
    results = verify.run(seed=0)
    assert results
    assert [n for n, ok, _ in results if not ok] == []
