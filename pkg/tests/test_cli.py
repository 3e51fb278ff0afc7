import io
import json

import pytest

import pyjbox
from pyjcsf.fixtures import poset_n
from pyjcsf.suites import SuiteResult


def run(capsys, *argv):
    exit_code = pyjbox.main(["pyjbox", *argv])
    captured = capsys.readouterr()
    return exit_code, captured.out, captured.err


def test_pyjbox_usage(capsys):
    exit_code, out, err = run(capsys)
    assert exit_code == 2
    assert "pyjxg" in err and out == ""
    exit_code, out, err = run(capsys, "pyjnothing")
    assert exit_code == 2


def test_xg_monomial(capsys):
    exit_code, out, err = run(capsys, "pyjxg", "graph:K2")
    assert exit_code == 0
    assert json.loads(out) == {"basis": "m", "terms": [{"partition": [1, 1], "num": "2", "den": "1"}]}
    assert out.endswith("\n")


def test_xg_short_script_name(capsys):
    assert run(capsys, "xg", "graph:K2")[1] == run(capsys, "pyjxg", "graph:K2")[1]


def test_xg_output_is_deterministic(capsys):
    first = run(capsys, "pyjxg", "graph:C5", "--basis", "s")[1]
    assert first == run(capsys, "pyjxg", "graph:C5", "--basis", "s")[1]
    assert first == json.dumps(json.loads(first), sort_keys=True) + "\n"


def test_xg_fundamental_and_xi(capsys):
    exit_code, out, err = run(capsys, "pyjxg", "graph:K2", "--basis", "Q")
    assert json.loads(out) == {"basis": "fundamental", "terms": [{"d": 2, "S": [1], "num": "2", "den": "1"}]}
    exit_code, out, err = run(capsys, "pyjxg", "graph:K3", "--basis", "xi")
    assert json.loads(out) == {"basis": "xi", "terms": [{"partition": [1, 1, 1], "num": "6", "den": "1"}]}
    exit_code, out, err = run(capsys, "pyjxg", "poset:N", "--basis", "xi")
    assert all(u["den"] == "1" and int(u["num"]) > 0 for u in json.loads(out)["terms"])


def test_xg_human(capsys):
    exit_code, out, err = run(capsys, "pyjxg", "graph:K2", "--human")
    assert out == "2  m[1,1]\n"


def test_xg_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("graph 2\na b\n"))
    exit_code, out, err = run(capsys, "pyjxg")
    assert exit_code == 0
    assert json.loads(out)["terms"] == [{"partition": [1, 1], "num": "2", "den": "1"}]


def test_xg_errors(capsys, tmp_path):
    exit_code, out, err = run(capsys, "pyjxg", "graph:K9")
    assert exit_code == 2 and "Unknown fixture" in err
    exit_code, out, err = run(capsys, "pyjxg", "graph:K5", "--max-vertices", "4")
    assert exit_code == 3 and out == ""
    a_file = tmp_path / "bad.txt"
    a_file.write_text("graph 1\na b\n")
    assert run(capsys, "pyjxg", str(a_file))[0] == 2
    with pytest.raises(SystemExit) as e:
        run(capsys, "pyjxg", "graph:K2", "--basis", "q")
    assert e.value.code == 2


def test_chrompoly(capsys):
    assert run(capsys, "pyjchrompoly", "graph:C4", "--n", "3")[1] == "18\n"
    assert run(capsys, "pyjchrompoly", "graph:K3", "--n", "2")[1] == "0\n"
    assert json.loads(run(capsys, "pyjchrompoly", "graph:K3")[1]) == {"coefficients": [0, 2, -3, 1]}
    assert run(capsys, "pyjchrompoly", "graph:K3", "--human")[1] == "1*n^3 + -3*n^2 + 2*n^1\n"
    with pytest.raises(SystemExit):
        run(capsys, "pyjchrompoly", "graph:K3", "--n", "-1")


def test_sww_on_poset_n(capsys):
    exit_code, out, err = run(capsys, "pyjsww", "poset:N", "--sequencing", "d,a,c,b")
    assert exit_code == 0
    result = json.loads(out)
    assert result["insertion"] == [["c", "b"], ["a"], ["d"]]
    assert result["recording"] == [[1, 4], [2], [3]]
    assert result["shape"] == [2, 1, 1]
    assert result["descents"] == result["recording_descents"] == [1, 2]
    assert [u["element"] for u in result["trace"]] == ["d", "a", "c", "b"]
    assert run(capsys, "pyjsww", "poset:N", "--sequencing", ':["d","a","c","b"]')[1] == out


def test_sww_from_a_file(capsys, tmp_path):
    a_file = tmp_path / "n.txt"
    a_file.write_text(poset_n().to_text())
    exit_code, out, err = run(capsys, "pyjsww", str(a_file), "--sequencing", "c,b,d,a")
    result = json.loads(out)
    assert result["descents"] == [2, 3]
    assert result["recording_descents"] == [2]


def test_sww_errors(capsys, tmp_path):
    exit_code, out, err = run(capsys, "pyjsww", "poset:N", "--sequencing", "d,a,x,b")
    assert exit_code == 2
    exit_code, out, err = run(capsys, "pyjsww", "poset:N", "--sequencing", ':{"d": 1}')
    assert exit_code == 2 and "usage" in err
    exit_code, out, err = run(capsys, "pyjsww", "graph:K3", "--sequencing", "1,2,3")
    assert exit_code == 2
    a_file = tmp_path / "three_plus_one.txt"
    a_file.write_text("poset 4\nx y\ny z\nw\n")
    exit_code, out, err = run(capsys, "pyjsww", str(a_file), "--sequencing", "x,y,z,w")
    assert exit_code == 4
    assert json.loads(err.strip().splitlines()[-1]) == {"chain": ["x", "y", "z"], "point": "w"}


def test_verify_passes(capsys):
    exit_code, out, err = run(capsys, "pyjverify", "theorem1", "--max-size", "3")
    assert exit_code == 0
    result = json.loads(out)
    assert result["passed"] is True
    assert result["identity"] == "theorem1" and result["max_size"] == 3
    assert result["suites"][0]["sizes"]["3"] == {"checked": 8, "passed": 8, "skipped": 0}


def test_verify_sww_descents_controls(capsys):
    exit_code, out, err = run(capsys, "pyjverify", "sww-descents", "--max-size", "4", "--human")
    assert exit_code == 0
    assert "control" in out and "NOT found" not in out


def test_verify_failure_sets_exit_code(capsys, monkeypatch):
    monkeypatch.setattr("pyjcsf.pyjverify.run_suites",
                        lambda *args, **kwargs: [SuiteResult("theorem1", sizes={1: {"checked": 1, "passed": 0,
                                                                                    "skipped": 0}},
                                                             failure={"size": 1})])
    exit_code, out, err = run(capsys, "pyjverify", "theorem1", "--max-size", "1")
    assert exit_code == 1
    assert json.loads(out)["passed"] is False


def test_verify_cap(capsys):
    exit_code, out, err = run(capsys, "pyjverify", "theorem1", "--max-size", "7")
    assert exit_code == 3
