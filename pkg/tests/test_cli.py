import json
import subprocess
import sys

import pytest

from ljpsearch.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv,code,first", [
    (("ljp", "inhabited", "x: a- |- a-"), 0, "true"),
    (("ljp", "inhabited", "|- a-"), 1, "false"),
    (("ljt", "inhabited", "=> ((a -> b) -> a) -> a"), 1, "false"),
    (("ljp", "finite", "x: down a- -> a-, y: a- |- a-"), 1, "false"),
    (("ljp", "count", "x: a-, y: a- |- a-"), 0, "2"),
    (("ljp", "check", "x: a- |- a-", "coret x (nil)"), 0, "true"),
    (("ljp", "check", "x: a- |- a-", "coret y (nil)"), 1, "false"),
    (("ljt", "enumerate", "x: a => a \\/ b"), 0, "1"),
    (("ljt", "translate", "lam x{a}. x nil"), 0, "lam(bind x{a-}. coret x (nil))"),
    (("ljt", "translate", "--back", "down a- -> a-"), 0, "a -> a"),
])
def test_results_and_exit_codes(capsys, argv, code, first):
    got, out, _ = run(capsys, *argv)
    assert got == code
    assert out.splitlines()[0] == first


@pytest.mark.parametrize("argv", [
    ("ljp", "count", "x: down a- -> a-, y: a- |- a-"),
    ("ljp", "inhabited", "x: a |- a-"),
    ("ljp", "translate", "a-"),
    ("ljp", "check", "x: a- |- a-"),
    ("ljp", "enumerate", "x: a- |- a-", "--max-size", "-1"),
    ("ljp", "bogus", "x"),
])
def test_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_json_schema(capsys):
    code, out, _ = run(capsys, "ljp", "enumerate", "x: a-, y: a- |- a-", "--max-size", "4",
                       "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"schema", "query", "result", "witnesses", "stats"}
    assert doc["schema"] == "1"
    assert doc["query"] == {"calculus": "ljp", "command": "enumerate",
                            "input": "x: a-, y: a- |- a-", "max_size": 4}
    assert doc["result"] == 2
    assert doc["witnesses"] == ["coret x (nil)", "coret y (nil)"]
    assert isinstance(doc["stats"]["forest_nodes"], int)
    assert doc["stats"]["elapsed_ms"] >= 0


def test_json_decision_has_null_nodes(capsys):
    _, out, _ = run(capsys, "ljp", "inhabited", "x: a- |- a-", "--format", "json")
    doc = json.loads(out)
    assert doc["result"] is True and doc["stats"]["forest_nodes"] is None


def test_memo_stats_env(capsys, monkeypatch):
    monkeypatch.setenv("LJPSEARCH_MEMO_STATS", "1")
    _, _, err = run(capsys, "ljp", "inhabited", "x: a- |- a-")
    assert err.startswith("memo ") and "sharp=" in err


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "ljpsearch", "ljp", "count", "x: a- |- a-"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout.strip() == "1"
