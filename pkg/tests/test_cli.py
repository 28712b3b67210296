import io
import json

import pytest

from matdioph.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_solve_example3_json():
    code, text = call("solve", "--n", "10", "--p", "25", "--q", "5", "--base", "3,1", "--json")
    assert code == 0
    doc = json.loads(text)
    assert doc["X"] == [["62", "-149"], ["149", "-87"]]
    assert doc["Y"] == [["-3", "8"], ["-8", "5"]]
    assert doc["Z"] == [["-14632", "18357"], ["-18357", "3725"]]
    assert doc["verified"] is True
    assert doc["provenance"]["L"] == 50
    assert (doc["n"], doc["p"], doc["q"]) == (10, 25, 5)


def test_solve_base_text_form():
    _, a = call("solve", "--n", "10", "--p", "25", "--q", "5", "--base", "3+1*w", "--json")
    _, b = call("solve", "--n", "10", "--p", "25", "--q", "5", "--base", "3,1", "--json")
    assert a == b


def test_solve_deterministic():
    argv = ("solve", "--n", "7", "--p", "5", "--q", "5", "--r", "3", "--s", "-2", "--json")
    assert call(*argv) == call(*argv)


def test_solve_text():
    code, text = call("solve", "--n", "11", "--p", "77", "--q", "7", "--route", "general")
    assert code == 0
    assert "486" in text and "verified: yes" in text


def test_solve_unsolvable():
    code, text = call("solve", "--n", "2", "--p", "2", "--q", "2")
    assert code == 2 and "UNSOLVABLE" in text
    code, text = call("solve", "--n", "2", "--p", "2", "--q", "2", "--json")
    doc = json.loads(text)
    assert code == 2 and doc["evidence"]["candidates_searched"] == 216


@pytest.mark.parametrize(
    "argv",
    [
        ("solve", "--n", "0", "--p", "1", "--q", "1"),
        ("solve", "--n", "1", "--p", "1", "--q", "1", "--bogus"),
        ("solve", "--n", "2", "--p", "3", "--q", "5", "--route", "npq"),
        ("solve", "--n", "1", "--p", "1", "--q", "1", "--route", "npq", "--base", "2,1"),
        ("solve", "--n", "1", "--p", "1", "--q", "1", "--route", "general", "--r", "1"),
        ("solve", "--n", "10", "--p", "25", "--q", "5", "--base", "1,1"),
        ("solve", "--n", "10", "--p", "25", "--q", "5", "--L", "7"),
        ("solve", "--n", "1", "--p", "1", "--q", "1", "--base", "nonsense"),
        ("lemma", "--range", "5-7"),
        ("lemma", "--range", "1..7"),
        ("chcheck", "--poly", "1,1,2", "--r", "1", "--s", "1"),
        ("family", "--m", "6", "--count", "2"),
        ("family", "--m", "7", "--count", "2", "--size", "extended"),
        ("family", "--m", "7", "--count", "2", "--selector", "K"),
        ("family", "--m", "7", "--count", "1", "--size", "extended", "--selector", "K^3"),
        (),
    ],
)
def test_invalid_input_exit_2(argv, capsys):
    code, _ = call(*argv)
    assert code == 2


def test_verify_holds(example_files):
    code, text = call("verify", "--x", example_files["x"], "--y", example_files["y"],
                      "--z", example_files["z"], "--n", "11", "--p", "77", "--q", "7")
    assert code == 0 and text.startswith("HOLDS")


def test_verify_fails(example_files):
    code, text = call("verify", "--x", example_files["x"], "--y", example_files["y"],
                      "--z", example_files["z"], "--n", "11", "--p", "77", "--q", "9", "--json")
    doc = json.loads(text)
    assert code == 1 and doc["holds"] is False and doc["residual"] is not None
    assert "timing_ms" not in doc


def test_verify_missing_file(tmp_path):
    missing = str(tmp_path / "nope.json")
    code, _ = call("verify", "--x", missing, "--y", missing, "--z", missing,
                   "--n", "1", "--p", "1", "--q", "1")
    assert code == 2


def test_verify_bad_json(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('[["1", "x"]]')
    code, _ = call("verify", "--x", str(bad), "--y", str(bad), "--z", str(bad),
                   "--n", "1", "--p", "1", "--q", "1")
    assert code == 2


def test_lemma_table():
    code, text = call("lemma", "--range", "5..7")
    assert code == 0
    rows = [line.split() for line in text.splitlines()[1:4]]
    assert [(r[0], r[2]) for r in rows] == [("5", "1"), ("6", "0"), ("7", "2")]
    assert "m = 5" in text


def test_lemma_json():
    code, text = call("lemma", "--range", "5..7", "--json")
    doc = json.loads(text)
    assert code == 0
    assert [d["computed_multiplicity"] for d in doc] == [1, 0, 2]


def test_chcheck():
    code, text = call("chcheck", "--poly", "1,0,0,0,1", "--r", "3", "--s", "2")
    assert code == 0 and text.startswith("HOLDS")
    code, text = call("chcheck", "--poly", "1,1,1", "--r", "7", "--s", "-4", "--json")
    assert code == 0 and json.loads(text)["holds"] is True


def test_family_2x2():
    code, text = call("family", "--m", "7", "--count", "3", "--json")
    doc = json.loads(text)
    assert code == 0 and doc["count"] == 3
    assert all(s["verified"] for s in doc["solutions"])
    assert len({json.dumps(s["X"]) for s in doc["solutions"]}) == 3


def test_family_seeded_deterministic():
    argv = ("family", "--m", "11", "--count", "4", "--seed", "9", "--json")
    assert call(*argv) == call(*argv)
    assert call(*argv) != call("family", "--m", "11", "--count", "4", "--seed", "10", "--json")


def test_family_extended():
    code, text = call("family", "--m", "7", "--count", "2", "--size", "extended",
                      "--selector", "x+y,K", "--json")
    doc = json.loads(text)
    assert code == 0
    assert all(len(s["X"]) == 3 and s["verified"] for s in doc["solutions"])


def test_out_directory(tmp_path):
    out = tmp_path / "sol"
    code, _ = call("solve", "--n", "10", "--p", "25", "--q", "5", "--base", "3,1", "--out", str(out))
    assert code == 0
    index = json.loads((out / "index.json").read_text())
    entry = index["solutions"][0]
    assert entry["X"] == "X.json" and entry["verified"] is True
    assert json.loads((out / "Z.json").read_text()) == [["-14632", "18357"], ["-18357", "3725"]]
    # round trip through verify
    code, _ = call("verify", "--x", str(out / "X.json"), "--y", str(out / "Y.json"),
                   "--z", str(out / "Z.json"), "--n", "10", "--p", "25", "--q", "5")
    assert code == 0


def test_family_out_directory(tmp_path):
    code, _ = call("family", "--m", "5", "--count", "2", "--out", str(tmp_path))
    assert code == 0
    index = json.loads((tmp_path / "index.json").read_text())
    assert [e["X"] for e in index["solutions"]] == ["000_X.json", "001_X.json"]


def test_help_lists_subcommands(capsys):
    code, _ = call("--help")
    assert code == 0
    help_text = capsys.readouterr().out
    for sub in ("solve", "verify", "lemma", "chcheck", "family"):
        assert sub in help_text
