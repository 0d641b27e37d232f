import json
import subprocess
import sys

import pytest

from chordbook.cli import run_command

UNKNOT = '{"slices":[{"w":0,"ev":["cup",1]},{"w":2,"ev":["cap",1]}]}'
HOPF = ('{"slices":[{"w":0,"ev":["cup",1]},{"w":2,"ev":["cup",1]},{"w":4,"ev":["xg",2,1,2,"ccw"]},'
        '{"w":4,"ev":["cap",1]},{"w":2,"ev":["cap",1]}],"orient":["+","-"]}')
BOOK = {"q": 2, "N": 2, "terms": [{"c": [1, 1, 0, 1], "b": [{"q": 2, "N": 2, "e": [[3, 4, 1]]}]}]}


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in (("unknot", UNKNOT), ("hopf", HOPF), ("book", json.dumps(BOOK))):
        p = tmp_path / f"{name}.json"
        p.write_text(text)
        out[name] = str(p)
    return out


def run(argv, capsys):
    code = run_command(argv)
    return code, capsys.readouterr()


def test_encode(files, capsys):
    code, out = run(["encode", files["unknot"]], capsys)
    assert code == 0
    obj = json.loads(out.out)
    assert obj["N"] == 4 and obj["booksum"]["terms"][0]["b"][0]["e"] == [[2, 3, 1]]


def test_linking(files, capsys):
    code, out = run(["linking", files["hopf"]], capsys)
    assert code == 0 and json.loads(out.out) == [[0, 1], [1, 0]]


def test_bandsum(files, capsys):
    code, out = run(["bandsum", files["book"], "-i", "1", "-j", "2"], capsys)
    assert code == 0
    assert len(json.loads(out.out)["terms"]) == 4


def test_bandsum_bad_component(files, capsys):
    code, out = run(["bandsum", files["book"], "-i", "1", "-j", "5"], capsys)
    assert code == 2 and "error" in out.err


def test_orient(files, capsys):
    code, out = run(["orient", files["book"], "-r", "2"], capsys)
    assert code == 0
    assert json.loads(out.out)["terms"][0]["b"][0]["e"] == [[3, 4, 1]]


def test_reid_strip_add(files, capsys):
    code, out = run(["reid", files["book"], "--move", "strip-add", "-n", "0"], capsys)
    assert code == 0
    obj = json.loads(out.out)
    assert obj["N"] == 3 and obj["terms"][0]["b"][0]["e"] == [[5, 6, 1]]


def test_reid_too_small(files, capsys):
    code, _ = run(["reid", files["book"], "--move", "o1f", "-n", "1"], capsys)
    assert code == 2


def test_compare_oracle(files, capsys):
    code, out = run(["compare-oracle", files["hopf"], "-i", "1", "-j", "2"], capsys)
    assert code == 0 and json.loads(out.out)["equal"] is True


def test_xcoeff(capsys):
    code, out = run(["xcoeff", "-m", "2"], capsys)
    assert code == 0 and json.loads(out.out) == {"re": 0.125, "im": 0.0}
    code, out = run(["xcoeff", "-m", "2", "-l", "2.0", "--numeric"], capsys)
    assert code == 0


def test_detect(tmp_path, capsys):
    p = tmp_path / "prof.json"
    p.write_text(json.dumps({"groups": [[1, 1]], "t": [0, 1], "sep": [[0, 1], [1, 1]]}))
    code, out = run(["detect", "--profile", str(p)], capsys)
    assert code == 0 and json.loads(out.out) == {"re": 0.0, "im": 0.0}


def test_thread(files, capsys):
    code, out = run(["thread", files["book"], "--steps", "2"], capsys)
    obj = json.loads(out.out)
    assert code == 0 and obj["components"] == 1 and obj["booksum"]["q"] == 4


def test_plat(tmp_path, capsys):
    p = tmp_path / "t.json"
    p.write_text(json.dumps({"strands": 3, "pairs": [[1, 2, 0.0, 1, 2], [1, 3, 0.0, 1, 2], [2, 3, 0.0, 1, 1]]}))
    code, out = run(["plat", str(p)], capsys)
    assert code == 0 and json.loads(out.out) == {"permutation": [3, 1, 2]}


def test_plat_inconsistent(tmp_path, capsys):
    p = tmp_path / "t.json"
    p.write_text(json.dumps({"strands": 3, "pairs": [[1, 3, 0.0, 1, 2]]}))
    assert run(["plat", str(p)], capsys)[0] == 1


def test_bad_json(tmp_path, capsys):
    p = tmp_path / "x.json"
    p.write_text("{")
    assert run(["linking", str(p)], capsys)[0] == 1


def test_stdin_entry_point():
    r = subprocess.run([sys.executable, "-m", "chordbook.cli", "linking", "-"], input=UNKNOT,
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "[[0]]"
