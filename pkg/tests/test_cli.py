import json

import pytest

from tabrw.cli import main

FIG_331 = '{"n":4,"columns":[[1,2,4],[1,3],[1,4],[2,4],[2],[3]],"gluing":[1,1,2,2,1]}'
YOUNG_5321 = '{"n":5,"columns":[[1,2,3,5],[2,3,4],[3,4],[4]],"gluing":[3,2,1]}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rectify_ascii(capsys):
    code, out, _ = run(capsys, "rectify", "--system", "fs", "--word", "3121312",
                       "--strategy", "leftmost", "--render", "ascii")
    assert code == 0 and out == "1112\n23\n3\n"


def test_nf_alias_and_rbt_json(capsys):
    code, out, _ = run(capsys, "nf", "--system", "rbt", "--diagram", YOUNG_5321, "--format", "json")
    assert code == 0
    assert json.loads(out) == {"n": 5, "columns": [[1, 2], [2, 3], [3], [3, 4], [4], [4, 5]],
                               "gluing": [3, 2, 2, 2, 2]}


def test_trace_round_trip(capsys, tmp_path):
    path = tmp_path / "trace.json"
    code, _, _ = run(capsys, "rectify", "--word", "3121312", "--strategy", "random",
                     "--seed", "4", "--trace", "--out", str(path))
    assert code == 0
    first = path.read_text()
    run(capsys, "rectify", "--word", "3121312", "--strategy", "random", "--seed", "4",
        "--trace", "--out", str(path))
    assert path.read_text() == first
    code, out, _ = run(capsys, "check", "--suite", "trace", "--input", str(path))
    assert code == 0 and json.loads(out)["violations"] == 0
    obj = json.loads(first)
    obj["steps"][0]["diagram"]["gluing"][0] += 1
    path.write_text(json.dumps(obj))
    code, out, _ = run(capsys, "check", "--suite", "trace", "--input", str(path))
    assert code == 1


def test_congruent(capsys):
    assert run(capsys, "congruent", "--monoid", "plactic", "--u", "312", "--v", "132")[:2] == (0, "true\n")
    assert run(capsys, "congruent", "--monoid", "plactic", "--u", "2121", "--v", "1212")[1] == "false\n"
    assert run(capsys, "congruent", "--monoid", "hypoplactic", "--u", "2121", "--v", "1212")[1] == "true\n"


@pytest.mark.parametrize("suite", ["cross-section", "fs-convergence", "rbt-convergence", "morphism",
                                   "commutation", "associativity", "axioms", "crystal"])
def test_check_suites(capsys, suite):
    code, out, _ = run(capsys, "check", "--suite", suite, "--monoid", "hypoplactic",
                       "--n", "3", "--maxlen", "4")
    assert code == 0 and json.loads(out)["violations"] == 0


def test_insert_and_render(capsys):
    code, out, _ = run(capsys, "insert", "--sds", "qrow", "--word", "5321432434", "--format", "json")
    assert code == 0 and json.loads(out)["gluing"] == [3, 2, 2, 2, 2]
    code, out, _ = run(capsys, "render", "--word", "3121312")
    assert code == 0 and "diagonal-skew" in out and "reading: 3121312" in out
    code, out, _ = run(capsys, "insert", "--sds", "yrow", "--word", "")
    assert out == "λ\n"


def test_crystal_commands(capsys):
    code, out, _ = run(capsys, "crystal", "op", "--family", "K-columns", "--op", "f", "--i", "2",
                       "--diagram", FIG_331, "--format", "json")
    assert code == 0 and json.loads(out)["columns"][4] == [3]
    assert run(capsys, "crystal", "op", "--family", "K-columns", "--op", "f", "--i", "3",
               "--diagram", FIG_331)[1] == "none\n"
    assert run(capsys, "crystal", "op", "--op", "e", "--i", "1", "--word", "2")[1] == "1\n"
    assert run(capsys, "crystal", "op", "--op", "phi", "--i", "1", "--word", "112")[1] == "2\n"
    code, out, _ = run(capsys, "crystal", "graph", "--family", "K-word", "--word", "12", "--n", "2")
    assert code == 0 and out.startswith("digraph")
    code, out, _ = run(capsys, "crystal", "graph", "--word", "12", "--n", "2", "--format", "ascii")
    assert out.splitlines()[0] == "3 vertices, 2 edges"


@pytest.mark.parametrize("argv", [
    ["rectify", "--word", "12a"],
    ["rectify", "--word", "4", "--n", "3"],
    ["rectify", "--diagram", "{bad"],
    ["rectify", "--diagram", '{"n":2,"columns":[[2],[1]],"gluing":[1]}'],
    ["rectify", "--word", "12", "--diagram", YOUNG_5321],
    ["rectify", "--strategy", "random", "--word", "21"],
    ["rectify", "--system", "rbt", "--diagram", '{"n":2,"columns":[[1],[1,2]],"gluing":[1]}'],
    ["crystal", "op", "--op", "f", "--i", "5", "--word", "12"],
    ["render", "--word", "1", "--format", "dot"],
    ["check", "--suite", "trace"],
    ["bogus"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert main(argv) == 2
