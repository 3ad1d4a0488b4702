import json

import pytest

from qmatroid.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_and_fixture_bytes(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["build", "--construction", "representable", "--q", "2", "--p", "2", "--s", "3", "-o", str(a)], capsys)[0] == 0
    assert run(["fixture", "m6", "-o", str(b)], capsys)[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_build_uniform_stdout(capsys):
    code, out, _ = run(["build", "--construction", "uniform", "--k", "0", "--n", "3", "--q", "2"], capsys)
    d = json.loads(out)
    assert code == 0 and {e["rank"] for e in d["entries"]} == {0}


def test_build_rank_table_violation(tmp_path, capsys):
    doc = {"q": 2, "n": 2, "kind": "rank_table", "entries": [
        {"space": [], "rank": 0}, {"space": ["01"], "rank": 1}, {"space": ["10"], "rank": 1},
        {"space": ["11"], "rank": 1}, {"space": ["10", "01"], "rank": 3}]}
    f = tmp_path / "bad.json"
    f.write_text(json.dumps(doc))
    code, _, err = run(["build", "--construction", "rank_table", str(f)], capsys)
    assert code == 1 and "R1" in err


def test_usage_errors(tmp_path, capsys):
    assert run(["build", "--construction", "uniform", "--q", "2"], capsys)[0] == 2
    assert run(["check", str(tmp_path / "missing.json")], capsys)[0] == 2
    bad = tmp_path / "x.json"
    bad.write_text("{not json")
    assert run(["classify", str(bad)], capsys)[0] == 2
    assert run(["nonsense"], capsys)[0] == 2
    assert run(["check", "--fixture", "lo-prime", "--variant", "I9"], capsys)[0] == 2


def test_classify_m6(tmp_path, capsys):
    f = tmp_path / "m6.json"
    main(["fixture", "m6", "-o", str(f)])
    code, out, _ = run(["classify", str(f), "--format", "json"], capsys)
    d = json.loads(out)
    assert code == 0 and d["families"]["flat"] == {"0": 1, "1": 0, "2": 0, "3": 9, "4": 0, "5": 0, "6": 1}
    assert d["families"]["circuit"]["2"] == 63
    code, out, _ = run(["classify", str(f)], capsys)
    assert "reference-delta" in out


def test_check_commands(tmp_path, capsys):
    f = tmp_path / "m6.json"
    main(["fixture", "m6", "-o", str(f)])
    capsys.readouterr()
    code, out, _ = run(["check", str(f), "--systems", "all"], capsys)
    assert code == 0 and all(r["verdicts"] for r in json.loads(out)["reports"])
    code, out, err = run(["check", "--fixture", "jp18-example10", "--systems", "independence", "--variant", "I4"], capsys)
    assert code == 1 and "witness" in err and json.loads(out)["variant"] == "I4"
    assert run(["check", "--fixture", "lo-prime", "--systems", "open", "--variant", "O3bar"], capsys)[0] == 0
    assert run(["check", "--fixture", "lo-prime", "--variant", "O3''"[:2] + "bar"], capsys)[0] == 0


def test_check_family_file_uses_its_kind(tmp_path, capsys):
    f = tmp_path / "c.json"
    main(["fixture", "jp18-example10-circuits", "-o", str(f)])
    capsys.readouterr()
    code, out, _ = run(["check", str(f), "--variant", "C3bar"], capsys)
    assert code == 0 and json.loads(out)["system"] == "circuits"


def test_convert_roundtrip_dual(tmp_path, capsys):
    f = tmp_path / "u.json"
    main(["build", "--construction", "uniform", "--k", "2", "--n", "4", "--q", "2", "-o", str(f)])
    capsys.readouterr()
    code, out, _ = run(["convert", str(f), "--path", "rank,flat,hyperplane"], capsys)
    d = json.loads(out)
    assert code == 0 and d["kind"] == "hyperplane" and len(d["members"]) == 15
    code, out, _ = run(["roundtrip", str(f)], capsys)
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(["dual", str(f)], capsys)
    assert code == 0 and json.loads(out)["entries"][-1]["rank"] == 2


def test_threads_flag(capsys):
    assert run(["--threads", "1", "fixture", "u45"], capsys)[0] == 0


def test_selftest(capsys):
    code, out, _ = run(["selftest"], capsys)
    assert code == 0 and out.count("PASS") == 6


def test_deterministic_output(capsys):
    a = run(["check", "--fixture", "m6", "--systems", "circuits", "--mode", "sampled", "--seed", "4"], capsys)[1]
    b = run(["check", "--fixture", "m6", "--systems", "circuits", "--mode", "sampled", "--seed", "4"], capsys)[1]
    assert a == b


@pytest.mark.parametrize("name", ["jp18-example10", "jp18-example10-circuits", "lo-prime", "u45", "m6-dual"])
def test_fixture_outputs(name, capsys):
    code, out, _ = run(["fixture", name], capsys)
    assert code == 0 and json.loads(out)
