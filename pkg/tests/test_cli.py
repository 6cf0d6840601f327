import argparse
import json

import pytest

from flowerq import cli
from flowerq.graph import FlowerSpec, complete, cycle, from_graph6, split_graph, to_graph6


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def g6file(tmp_path):
    def make(*graphs, name="in.g6"):
        p = tmp_path / name
        p.write_text("".join(to_graph6(g) + "\n" for g in graphs))
        return str(p)

    return make


@pytest.mark.parametrize(
    "argv, g6, stats",
    [
        (["--family", "split", "--params", "8", "2"], "G}rEE?", "n=8 e=13 max_degree=7 min_degree=2"),
        (["--family", "split", "--n", "8", "--t", "2"], "G}rEE?", "n=8 e=13 max_degree=7 min_degree=2"),
        (["--family", "windmill", "--params", "2", "2"], None, "n=5 e=6 max_degree=4 min_degree=2"),
        (["--family", "flower", "--spec", "2,1"], None, "n=7 e=8 max_degree=4 min_degree=2"),
        (["--family", "complete", "--params", "4"], "C~", "n=4 e=6 max_degree=3 min_degree=3"),
    ],
)
def test_construct(capsys, argv, g6, stats):
    code, out, _ = run(capsys, "construct", *argv)
    assert code == cli.EXIT_OK
    line, summary = out.strip().splitlines()
    assert summary == stats
    if g6 is not None:
        assert line == g6
    from_graph6(line)


def test_construct_out_file(capsys, tmp_path):
    dest = tmp_path / "c.g6"
    code, out, _ = run(capsys, "construct", "--family", "cycle", "--params", "6", "--out", str(dest))
    assert code == 0
    assert from_graph6(dest.read_text().strip()) == cycle(6)


def test_construct_errors(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["construct", "--family", "nope"])
    assert info.value.code == cli.EXIT_USAGE
    code, _, err = run(capsys, "construct", "--family", "split", "--params", "3", "5")
    assert code == cli.EXIT_USAGE and err


def test_q_values(capsys, g6file):
    path = g6file(complete(4), split_graph(8, 2), cycle(6))
    code, out, _ = run(capsys, "q", "--in", path)
    assert code == 0
    assert [l.split()[1] for l in out.splitlines()] == ["6.000000000", "9.582575695", "4.000000000"]


def test_q_bounds_csv(capsys, g6file):
    code, out, _ = run(capsys, "q", "--in", g6file(split_graph(8, 2)), "--bounds")
    header, row = out.strip().splitlines()
    assert header.split(",")[:4] == ["graph6", "n", "e", "q"]
    assert row.split(",")[3] == "9.582575695"


def test_q_parse_error(capsys, tmp_path):
    p = tmp_path / "bad.g6"
    p.write_text("C~\n!!\n")
    code, _, err = run(capsys, "q", "--in", str(p))
    assert code == cli.EXIT_IO
    assert "bad.g6:2" in err
    code, _, _ = run(capsys, "q", "--in", str(tmp_path / "missing.g6"))
    assert code == cli.EXIT_IO


def test_free_check_codes(capsys, g6file):
    code, out, _ = run(capsys, "free-check", "--in", g6file(split_graph(8, 2)), "--spec", "1,1")
    assert code == cli.EXIT_OK and out.split() == ["G}rEE?", "FREE"]
    code, out, _ = run(capsys, "free-check", "--in", g6file(complete(4)), "--spec", "1", "--witness")
    assert code == cli.EXIT_CONTAINS
    g6, verdict, witness = out.strip().split(" ", 2)
    assert verdict == "CONTAINS" and json.loads(witness)["center"] in range(4)
    code, _, err = run(capsys, "free-check", "--in", g6file(split_graph(20, 2)), "--spec", "2,2", "--budget", "5")
    assert code == cli.EXIT_BUDGET and err


def test_search_labeled(capsys, tmp_path):
    dest = tmp_path / "s.json"
    code, out, _ = run(capsys, "search", "--n", "5", "--spec", "1", "--labeled", "--out", str(dest))
    assert code == 0
    assert "best=5.000000000" in out and "witnesses=15 classes=2" in out
    doc = json.loads(dest.read_text())
    assert doc["config"]["n"] == 5 and doc["config"]["spec"] == "1"
    assert doc["record"]["scanned"] == 1024
    assert "elapsed_s" in doc["timing"]
    # nothing time-dependent leaks outside the timing block
    body = {k: v for k, v in doc.items() if k != "timing"}
    code, _, _ = run(capsys, "search", "--n", "5", "--spec", "1", "--labeled", "--out", str(dest))
    assert {k: v for k, v in json.loads(dest.read_text()).items() if k != "timing"} == body


def test_search_edges_and_stream(capsys, g6file):
    code, out, _ = run(capsys, "search", "--n", "6", "--spec", "1", "--labeled", "--objective", "edges")
    assert code == 0 and "best=9 " in out
    path = g6file(split_graph(8, 2), cycle(8))
    code, out, _ = run(capsys, "search", "--n", "8", "--spec", "1,1", "--in", path)
    assert code == 0 and "match=True" in out


def test_search_challenge(capsys):
    code, out, _ = run(capsys, "search", "--n", "9", "--spec", "1,1", "--challenge", "6", "--seed", "2")
    assert code == 0 and "scanned=6" in out


def test_search_capability(capsys):
    code, _, err = run(capsys, "search", "--n", "8", "--spec", "1", "--labeled")
    assert code == cli.EXIT_USAGE and "7" in err


def test_verify_pass_and_json(capsys, tmp_path):
    dest = tmp_path / "v.json"
    code, out, _ = run(capsys, "verify", "--check", "lemma2.5", "--t", "3..4", "--r", "1..3", "--out", str(dest))
    assert code == 0
    assert out.splitlines()[0].startswith("[PASS] lemma2.5")
    doc = json.loads(dest.read_text())
    assert doc["reports"][0]["status"] == "pass"


def test_verify_failure_exit(capsys):
    code, out, _ = run(capsys, "verify", "--check", "lemma2.2", "--n", "7..7", "--k", "3..3")
    assert code == cli.EXIT_CONTAINS
    assert out.startswith("[FAIL] lemma2.2")


def test_verify_infeasible_range(capsys):
    code, _, err = run(capsys, "verify", "--check", "lemma2.1", "--n", "1..9")
    assert code == cli.EXIT_USAGE
    assert "Feasible envelope" in err


@pytest.mark.parametrize("text, expected", [("3..6", (3, 6)), ("5", (5, 5))])
def test_parse_range(text, expected):
    assert cli.parse_range(text) == expected


def test_parse_range_rejects():
    with pytest.raises(argparse.ArgumentTypeError):
        cli.parse_range("6..3")
    assert cli.parse_spec("2,1") == FlowerSpec([2, 1])
