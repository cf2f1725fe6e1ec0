import json
import subprocess
import sys

import pytest

from hikers.cli import run


def invoke(capsys, *argv):
    code = run([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


def doc(out):
    return json.loads(out)


@pytest.fixture
def parity_file(tmp_path, capsys):
    path = tmp_path / "parity4.krt"
    code, out = invoke(capsys, "gen", "--kind", "parity", "--size", 4, "--tuple", 2, "--colors", 2, "--out", path)
    assert code == 0 and doc(out)["status"] == "ok"
    return path


def test_gen_writes_krt(parity_file):
    assert parity_file.read_text() == "krt 1 N=4 t=2 r=2\n1 0 1 1 0 1\n"


def test_track(capsys, parity_file):
    code, out = invoke(capsys, "track", "--coloring", parity_file, "--dest", 3)
    payload = doc(out)["payload"]
    assert code == 0
    assert payload["points"] == [0, 1, 3] and payload["delta"] == 2
    assert payload["map"]["entries"] == [1, 0]


def test_check_sequence_violation(capsys, parity_file):
    code, out = invoke(capsys, "check", "--coloring", parity_file, "--seq", "0,1,2")
    d = doc(out)
    assert code == 0
    assert d["status"] == "property-false" and d["payload"]["violation"] == [0, 1, 2]


def test_check_set(capsys, parity_file):
    code, out = invoke(capsys, "check", "--coloring", parity_file, "--set", "0,2")
    assert code == 0 and doc(out)["payload"]["color"] == 0
    code, out = invoke(capsys, "check", "--coloring", parity_file, "--set", "1")
    assert doc(out)["payload"]["vacuous"] is True


def test_extract_and_trie(capsys, tmp_path):
    path = tmp_path / "p6.krt"
    invoke(capsys, "gen", "--kind", "parity", "--size", 6, "--tuple", 2, "--colors", 2, "--out", path)
    _, out = invoke(capsys, "extract", "--coloring", path)
    assert doc(out)["payload"] == {"color": 0, "members": [1, 3], "size": 2, "verified": True}
    _, out = invoke(capsys, "trie", "--coloring", path, "--dump")
    payload = doc(out)["payload"]
    assert (payload["depth"], payload["node_count"]) == (3, 6)
    assert payload["trie"] == {"0": {"1": {"3": {"5": {}}}, "2": {"4": {}}}}


def test_pnum_and_bound(capsys):
    code, out = invoke(capsys, "pnum", "-k", 3, "-r", 1, "-n", 2)
    payload = doc(out)["payload"]
    assert code == 0 and payload["p"] == 4 and payload["bound"] == "8"
    assert "elapsed_ms" not in payload
    _, out = invoke(capsys, "pnum", "-k", 3, "-r", 1, "-n", 2, "--variant", "seq", "--timing")
    assert doc(out)["payload"]["variant"] == "sequence" and "elapsed_ms" in doc(out)["payload"]
    code, out = invoke(capsys, "bound", "-k", 4, "-r", 2, "-n", 2)
    assert doc(out)["payload"]["bound"] == "77"


def test_grid_emits_json_lines(capsys):
    code, out = invoke(capsys, "grid", "--cells", "3:1:3,4:2:2,3:0:2")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert [(r["p"], r["bound"], r["ok"]) for r in rows] == [(5, "14", True), (5, "77", True), (5, "n/a (r=0)", None)]


def test_exit_codes(capsys, tmp_path, parity_file):
    assert run(["nonsense"]) == 2
    assert run(["bound", "-k", "3", "-r", "0", "-n", "2"]) == 2
    assert run(["pnum", "-k", "5", "-r", "1", "-n", "2", "--budget", "100"]) == 3
    assert run(["grid", "--cells", "3:1:2,5:1:2", "--budget", "100"]) == 3
    bad = tmp_path / "bad.krt"
    bad.write_text("krt 1 N=3 t=2 r=2\n0 1\n")
    assert run(["track", "--coloring", str(bad), "--dest", "1"]) == 4
    assert run(["extract", "--coloring", str(tmp_path / "missing.krt")]) == 4
    assert run(["track", "--coloring", str(parity_file), "--dest", "9"]) == 2
    assert run(["check", "--coloring", str(parity_file), "--seq", "2,1"]) == 2
    capsys.readouterr()


def test_gen_output_accepted_everywhere(capsys, tmp_path):
    for i, (kind, extra) in enumerate([("constant", ["--const", "1"]), ("parity", []), ("random", ["--seed", "5"])]):
        path = tmp_path / f"{kind}.krt"
        assert run(["gen", "--kind", kind, "--size", "7", "--tuple", "3", "--colors", "3", "--out", str(path)] + extra) == 0
        for argv in (["track", "--dest", "6"], ["extract"], ["trie"], ["check", "--seq", "0,1,2,3"],
                     ["check", "--set", "0,1,2,3"]):
            assert run(argv[:1] + ["--coloring", str(path)] + argv[1:]) == 0
    capsys.readouterr()


def test_subprocess_output_is_byte_identical(tmp_path):
    cmds = [
        ["gen", "--kind", "random", "--size", "8", "--tuple", "2", "--colors", "3", "--seed", "42", "--out", "r.krt"],
        ["extract", "--coloring", "r.krt"],
        ["pnum", "-k", "3", "-r", "1", "-n", "3", "--workers", "1"],
        ["grid", "--cells", "3:1:2,3:0:2"],
    ]
    for argv in cmds:
        runs = [subprocess.run([sys.executable, "-m", "hikers", *argv], cwd=tmp_path, capture_output=True, check=True)
                for _ in range(2)]
        assert runs[0].stdout == runs[1].stdout and runs[0].stdout
