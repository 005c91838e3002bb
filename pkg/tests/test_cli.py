import io
import json
import subprocess
import sys

import pytest

from edgeturan import binom, search
from edgeturan.cli import run
from edgeturan.colex import build_colex
from edgeturan.graph import (canonical_form, complete_graph, disjoint_union, parse_edge_list,
                             parse_graph6, to_graph6)


def call(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def lines(out):
    return [json.loads(x) for x in out.splitlines()]


@pytest.fixture
def k4k3k2(tmp_path):
    path = tmp_path / "k4k3k2.g6"
    g = disjoint_union([complete_graph(4), complete_graph(3), complete_graph(2)])
    path.write_text(to_graph6(g) + "\n")
    return str(path)


def test_value_example(capsys):
    code, out, _ = call(capsys, "value", "--t", "3", "--delta", "4", "--edges", "14")
    assert code == 0
    (js,) = lines(out)
    assert (js["q"], js["b"], js["r"], js["s"], js["value"]) == (1, 4, 3, 1, "11")


def test_value_total(capsys):
    code, out, _ = call(capsys, "value", "--delta", "3", "--edges", "10", "--total")
    assert code == 0 and lines(out)[0]["value"] == "16"


def test_value_pretty(capsys):
    code, out, _ = call(capsys, "value", "--t", "3", "--delta", "3", "--edges", "13", "--pretty")
    assert code == 0 and "\n  " in out and json.loads(out)["value"] == "8"


def test_check_total_example(capsys, k4k3k2):
    code, out, _ = call(capsys, "check", "--t", "3", "--delta", "3", "--input", k4k3k2, "--total")
    assert code == 0 and lines(out)[0]["is_extremal"] is True


def test_check_main_false_verdict_still_succeeds(capsys, k4k3k2):
    # k4k3k2 has 10 edges: b = 4, r = 3, s = 1 -> contains K_3, so it is extremal for t = 3
    code, out, _ = call(capsys, "check", "--t", "3", "--delta", "3", "--input", k4k3k2)
    assert code == 0 and lines(out)[0]["is_extremal"] is True
    code, out, _ = call(capsys, "check", "--t", "4", "--delta", "3", "--input", k4k3k2)
    assert code == 0 and lines(out)[0]["is_extremal"] is True


def test_check_reads_stdin_edge_list(capsys, monkeypatch):
    code, out, _ = call(capsys, "check", "--t", "3", "--delta", "3",
                        stdin="0 1\n1 2\n2 3\n", monkeypatch=monkeypatch)
    js = lines(out)[0]
    assert code == 0 and js["is_extremal"] is False and js["m"] == 3


def test_verify_example(capsys):
    code, out, _ = call(capsys, "verify", "--t", "3", "--delta", "3", "--edges", "13")
    (js,) = lines(out)
    assert code == 0 and js["match"] is True and js["oracle_max"] == "8"


def test_verify_multiple_reports(capsys):
    code, out, _ = call(capsys, "verify", "--t", "3", "--delta", "3", "--edges", "7", "--kr1", "--kk")
    assert code == 0
    assert [js["kind"] for js in lines(out)] == ["main", "total", "kk"]


def test_verify_failure_exit_1(capsys, monkeypatch):
    monkeypatch.setattr(search, "extremal_value", lambda t, delta, m: -1)
    code, out, _ = call(capsys, "verify", "--t", "3", "--delta", "3", "--edges", "5")
    assert code == 1 and lines(out)[0]["match"] is False


def test_props(capsys):
    code, out, _ = call(capsys, "props", "--grid-scale", "0.5")
    assert code == 0
    assert all(js["ok"] and js["checked"] > 0 for js in lines(out))


def test_props_failure_exit_1(capsys, monkeypatch):
    bad = binom.GridResult("broken", 1, [(1, 2)])
    monkeypatch.setattr(binom, "property_grids", lambda scale: [bad])
    code, out, _ = call(capsys, "props")
    assert code == 1 and lines(out)[0]["ok"] is False


def test_kk(capsys):
    code, out, _ = call(capsys, "kk", "--edges", "7", "--t", "3")
    js = lines(out)[0]
    assert code == 0 and js["colex_kt"] == "4" and js["r"] == 4 and js["s"] == 1
    assert js["kk_bound_real"] == pytest.approx(5.308140174482541)


def test_count(capsys, k4k3k2, monkeypatch):
    code, out, _ = call(capsys, "count", "--input", k4k3k2)
    assert code == 0 and lines(out)[0] == {"m": 10, "counts": {"2": "10", "3": "5", "4": "1"},
                                           "total": "16"}
    code, out, _ = call(capsys, "count", "--t", "3", stdin="Bw\n", monkeypatch=monkeypatch)
    assert lines(out)[0] == {"m": 3, "counts": {"3": "1"}}


def test_construct(capsys):
    code, out, _ = call(capsys, "construct", "--t", "3", "--delta", "4", "--edges", "14")
    g = parse_graph6(out.strip())
    assert code == 0 and g.m == 14
    code, out, _ = call(capsys, "construct", "--t", "3", "--delta", "4", "--edges", "8",
                        "--format", "edges")
    assert canonical_form(parse_edge_list(out)) == canonical_form(build_colex(8))


def test_enumerate_matches_corpus_size(capsys):
    code, out, _ = call(capsys, "enumerate", "--edges", "9", "--delta", "3")
    assert code == 0
    n_lines = len(out.splitlines())
    code, out, _ = call(capsys, "verify", "--t", "3", "--delta", "3", "--edges", "9")
    assert n_lines == lines(out)[0]["corpus_size"]


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["value", "--t", "3", "--delta", "3"],
    ["value", "--t", "2", "--delta", "3", "--edges", "5"],
    ["value", "--t", "3", "--delta", "0", "--edges", "5"],
    ["value", "--t", "3", "--delta", "3", "--edges", "-1"],
    ["value", "--t", "x", "--delta", "3", "--edges", "5"],
    ["verify", "--t", "3", "--delta", "3", "--edges", "20"],
    ["verify", "--edges", "5"],
    ["verify", "--t", "3", "--delta", "3", "--edges", "5", "--jobs", "0"],
    ["enumerate", "--edges", "30"],
    ["count", "--t", "3", "--all"],
    ["check", "--t", "3", "--delta", "3", "--input", "/nonexistent/file"],
    ["props", "--grid-scale", "0"],
    ["kk", "--edges", "5"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = call(capsys, *argv)
    assert code == 2


def test_degree_violation_exit_2(capsys, monkeypatch):
    code, _, err = call(capsys, "check", "--t", "3", "--delta", "3",
                        stdin=to_graph6(complete_graph(5)) + "\n", monkeypatch=monkeypatch)
    assert code == 2 and "delta" in err


def test_unparseable_input_exit_2(capsys, monkeypatch):
    code, _, _ = call(capsys, "count", stdin="this is not a graph\n", monkeypatch=monkeypatch)
    assert code == 2


def test_env_raises_cap(capsys, monkeypatch):
    monkeypatch.setenv("EXTREMAL_MAX_EDGES", "16")
    assert search.max_edges_cap() == 16
    code, _, _ = call(capsys, "verify", "--t", "3", "--delta", "3", "--edges", "17")
    assert code == 2


def test_module_and_script_entry_points():
    for cmd in ([sys.executable, "-m", "edgeturan"], ["edgeturan"]):
        res = subprocess.run(cmd + ["value", "--t", "3", "--delta", "3", "--edges", "13"],
                             capture_output=True, text=True, check=False)
        assert res.returncode == 0, res.stderr
        assert json.loads(res.stdout)["value"] == "8"
    res = subprocess.run([sys.executable, "-m", "edgeturan", "value"], capture_output=True, text=True)
    assert res.returncode == 2
