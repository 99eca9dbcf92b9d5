import io
import json

import pytest

from mixedhom.cli import run
from mixedhom.fileformat import serialize, write


def call(argv, monkeypatch=None, stdin=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = run(argv, out)
    return code, out.getvalue()


def js(argv, **kw):
    code, text = call(argv + ["--json"], **kw)
    return code, json.loads(text)


@pytest.fixture
def t3_file(tmp_path, t3):
    p = tmp_path / "t3.mng"
    write(t3, p)
    return str(p)


@pytest.fixture
def c3_file(tmp_path, c3):
    p = tmp_path / "c3.mng"
    write(c3, p)
    return str(p)


def test_simple_clique_on_generated_cayley(monkeypatch):
    _, text = call(["gen", "cayley-oriented", "5"])
    code, out = js(["simple-clique", "-"], monkeypatch=monkeypatch, stdin=text)
    assert code == 0 and out["answer"] is True and out["command"] == "simple-clique"


def test_chi_s_complete_t3(t3_file):
    code, out = js(["chi-s", t3_file, "--complete"])
    assert code == 0 and out["value"] == 2 and out["partition"] == [[0, 1], [2]]


def test_chi_s_modes_agree(t3_file, c3_file):
    for f in (t3_file, c3_file):
        assert js(["chi-s", f, "--brute"])[1]["value"] == js(["chi-s", f, "--complete"])[1]["value"]


def test_strict_exit_codes(t3_file, c3_file):
    assert call(["chi-s-2", c3_file, "--strict"])[0] == 1
    assert call(["chi-s-2", t3_file, "--strict"])[0] == 0
    assert call(["chi-s-2", c3_file])[0] == 0
    assert call(["simple-clique", t3_file, "--strict"])[0] == 1


def test_errors_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.mng"
    bad.write_text("mng 1\nm 1\nn 0\nvertices 2\na 2 0 1\n")
    assert call(["validate", str(bad)])[0] == 2
    assert "line 5: arc colour 2 exceeds m=1" in capsys.readouterr().err
    assert call(["validate", str(tmp_path / "missing")])[0] == 2
    assert call(["nonsense"])[0] == 2
    assert call(["gen", "nope", "1"])[0] == 2
    assert call(["gen", "cayley-oriented", "6"])[0] == 2


def test_other_commands(t3_file, c3_file):
    assert js(["validate", c3_file])[1]["vertices"] == 3
    assert js(["clique", c3_file])[1]["answer"] is True
    assert js(["chi", t3_file])[1]["value"] == 3
    assert js(["hull", c3_file, "--set", "0,1"])[1]["hull"] == [0, 1, 2]
    assert js(["underlying", c3_file])[0] == 0
    assert js(["hom", t3_file, c3_file])[1]["answer"] is False
    out = js(["hom", c3_file, c3_file])[1]
    assert out["answer"] is True and len(out["map"]) == 3
    assert js(["hom", c3_file, t3_file, "--simple"])[1]["answer"] is False


def test_gen_and_colour_2tree(tmp_path):
    path = tmp_path / "tree.mng"
    assert call(["gen", "2tree", "40", "oriented", "5", "-o", str(path)])[0] == 0
    out = js(["colour-2tree", str(path)])[1]
    assert out["colours"] <= 3 and len(out["map"]) == 40


def test_gen_families_parse():
    for fam, params in (("h", ["3"]), ("g", ["4"]), ("tournament", ["3"]), ("cycle", ["4"]), ("cayley-2ec", ["5"]), ("random", ["1", "1", "6", "0.5", "2"])):
        code, text = call(["gen", fam, *params])
        assert code == 0 and text.startswith("mng 1\n")


def test_experiment_reproducible_and_plots(tmp_path):
    argv = ["experiment", "--m", "1", "--n", "0", "--v", "10", "--p", "1.0", "--samples", "100", "--seed", "7"]
    a, b = call(argv), call(argv)
    assert a == b and a[0] == 0
    assert a[1].splitlines()[1] == "1,0,10,1.0,100,7,85,100,5,0.850000,1.000000,0.050000"
    png, csv = tmp_path / "f.png", tmp_path / "f.csv"
    assert call(argv[:-4] + ["--samples", "20", "--seed", "7", "--plot", str(png), "--out", str(csv)])[0] == 0
    assert png.read_bytes()[:4] == b"\x89PNG" and csv.read_text().startswith("m,n,v")
