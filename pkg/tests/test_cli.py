import json

import pytest

from qsymp import serialize as ser
from qsymp.cli import main
from qsymp.pathalg import ARROWS
from qsymp.reps import cm_point

from helpers import necklace


@pytest.fixture
def point_file(tmp_path, sample_point):
    p = tmp_path / "point.json"
    p.write_text(json.dumps(ser.point_to_json(sample_point)))
    return str(p)


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def test_verify_is_byte_stable(capsys):
    args = ["verify", "--suite", "t_opt", "--trials", "3", "--json"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first
    report = json.loads(first)[0]
    assert report["passed"] and report["checks"] == 3 and "elapsed" not in report


def test_verify_failure_exit_code(capsys):
    assert main(["verify", "--suite", "lie_morphism", "--trials", "5"]) == 1
    assert capsys.readouterr().out.startswith("FAIL lie_morphism")


def test_unknown_suite(capsys):
    assert main(["verify", "--suite", "nope"]) == 2
    assert "unknown suite" in capsys.readouterr().err


def test_bad_arguments():
    assert main([]) == 2
    assert main(["cm-point", "--n", "2", "--x", "0 1", "--p", "1 abc"]) == 2


def test_cm_point(capsys):
    assert main(["cm-point", "--n", "2", "--x", "0 1", "--p", "3 4"]) == 0
    out = ser.point_from_json(json.loads(capsys.readouterr().out))
    assert out == cm_point(2, 1, [0, 1], [3, 4])
    assert main(["cm-point", "--n", "2", "--x", "1 1", "--p", "3 4"]) == 2


def test_factor(tmp_path, capsys):
    path = write(tmp_path, "m.json", [[["1"], ["0", "1"]], [["0"], ["1"]]])
    assert main(["factor", path]) == 0
    word = ser.nagao_word_from_json(json.loads(capsys.readouterr().out))
    assert [tag for tag, _ in word] == ["C", "B", "C"]
    bad = write(tmp_path, "bad.json", [[["0", "1"], ["0"]], [["0"], ["1"]]])
    assert main(["factor", bad]) == 2


def test_malformed_json(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    assert main(["factor", str(p)]) == 2
    assert main(["factor", str(tmp_path / "missing.json")]) == 2


def test_flow_and_bracket(tmp_path, point_file, capsys):
    ham = write(tmp_path, "h.json", ser.hamspec_to_json(
        ser.hamspec_from_json({"kind": "H", "f": {"terms": [{"coeff": "1", "word": "aab"}]}})))
    assert main(["flow", "--ham", ham, "--time", "1/2", "--point", point_file]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["B"] == [["1", "5/2"], ["-1", "2"]]
    hp = write(tmp_path, "hp.json", {"kind": "Hp", "f": {"terms": [{"coeff": "1", "word": "a*b*"}]}})
    assert main(["bracket", "--h1", ham, "--h2", hp, "--point", point_file]) == 0
    assert json.loads(capsys.readouterr().out) == {"value": "66"}
    j = write(tmp_path, "j.json", {"kind": "J", "k": 1, "alpha": [["1", "0"], ["0", "0"]]})
    assert main(["flow", "--ham", j, "--time", "1", "--point", point_file]) == 2


def test_act_and_normalize(tmp_path, point_file, capsys):
    word = [{"kind": "tri", "f": ser.necklace_to_json(necklace({"ab": 1}))}]
    wpath = write(tmp_path, "w.json", word)
    assert main(["act", "--word", wpath, "--point", point_file]) == 0
    moved = json.loads(capsys.readouterr().out)
    assert main(["act", "--word", wpath, "--point", point_file, "--compiled"]) == 0
    assert set(json.loads(capsys.readouterr().out)) == set(ARROWS)
    moved_path = write(tmp_path, "moved.json", moved)
    assert main(["normalize", "--point", moved_path]) == 0
    res = json.loads(capsys.readouterr().out)
    assert res["result"]["X2"] == [["0"], ["0"]] and res["result"]["Y1"] == [["0", "0"]]


def test_imap(tmp_path, capsys):
    path = write(tmp_path, "g.json", {"p": ["0", "1"], "M": [[["1"], ["0"]], [["0"], ["1"]]]})
    assert main(["imap", path]) == 0
    images = json.loads(capsys.readouterr().out)
    # p = z translates the loop a by -e1
    assert images["a"] == [{"coeff": "1", "word": ["a"]}, {"coeff": "-1", "word": ["e1"]}]
