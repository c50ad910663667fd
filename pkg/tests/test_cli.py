"""Tests for the command line interface."""

import subprocess
import sys

import pytest

from sqcolor.cli import main
from sqcolor.coloring import is_proper
from sqcolor.formats import from_graph6, parse_one_graph, to_graph6, write_graph_text
from sqcolor.generate import named
from sqcolor.graph_core import Graph, square


def write_fixture(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def c6_file(tmp_path):
    return write_fixture(tmp_path, "c6.txt", write_graph_text(named("c6")[0]))


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_girth(tmp_path, capsys):
    code, out = run(capsys, ["girth", c6_file(tmp_path)])
    assert code == 0
    assert out == "girth=6\n"


def test_girth_of_tree_prints_inf(tmp_path, capsys):
    path = write_fixture(tmp_path, "p4.txt", write_graph_text(named("p4")[0]))
    code, out = run(capsys, ["girth", path])
    assert code == 0
    assert out == "girth=inf\n"


def test_girth_from_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(write_graph_text(named("c7")[0])))
    code, out = run(capsys, ["girth", "-"])
    assert code == 0
    assert out == "girth=7\n"


def test_square_outputs_parseable_graph(tmp_path, capsys):
    code, out = run(capsys, ["square", c6_file(tmp_path)])
    assert code == 0
    got, _ = parse_one_graph(out)
    assert got == square(named("c6")[0])


def test_square_structured_uses_graph6(tmp_path, capsys):
    code, out = run(capsys, ["square", "--structured", c6_file(tmp_path)])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "sqcolor-report 1"
    assert lines[1].startswith("square=")
    assert from_graph6(lines[1].removeprefix("square=")) == square(named("c6")[0])


def test_color_uniform(tmp_path, capsys):
    code, out = run(capsys, ["color", c6_file(tmp_path)])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6
    coloring = [int(line.split(": ")[1]) for line in lines]
    assert all(c in range(1, 8) for c in coloring)
    assert is_proper(square(named("c6")[0]), coloring)


def test_color_structured(tmp_path, capsys):
    code, out = run(capsys, ["color", "--structured", c6_file(tmp_path)])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "sqcolor-report 1"
    body = [line for line in lines if line.startswith("colors=")]
    assert len(body) == 1
    coloring = [int(c) for c in body[0].split("=", 1)[1].split(",")]
    assert is_proper(square(named("c6")[0]), coloring)
    assert "verified=ok" in lines


def test_color_rejects_short_lists(tmp_path, capsys):
    code, out = run(capsys, ["color", "--lists", "uniform:6", c6_file(tmp_path)])
    assert code == 1


def test_color_with_lists_file(tmp_path, capsys):
    lists_text = "".join(f"{v}: 10 20 30 40 50 60 70\n" for v in range(6))
    lists_path = write_fixture(tmp_path, "lists.txt", lists_text)
    code, out = run(capsys, ["color", "--lists", lists_path, c6_file(tmp_path)])
    assert code == 0
    coloring = [int(line.split(": ")[1]) for line in out.splitlines()[:6]]
    assert all(c in range(10, 71, 10) for c in coloring)
    assert is_proper(square(named("c6")[0]), coloring)


def test_choosable_even_cycle(tmp_path, capsys):
    code, out = run(capsys, ["choosable", "-k", "2", c6_file(tmp_path)])
    assert code == 0
    assert out.splitlines()[0] == "verdict=choosable"


def test_choosable_odd_cycle_witness(tmp_path, capsys):
    path = write_fixture(tmp_path, "c5.txt", write_graph_text(named("c5")[0]))
    code, out = run(capsys, ["choosable", "-k", "2", path])
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "verdict=not_choosable"
    assert lines[1].startswith("nodes=")
    witness_lines = [l for l in lines if l.startswith("witness v=")]
    assert len(witness_lines) == 5
    assert witness_lines[0] == "witness v=0 list=1,2"


def test_choosable_budget_exhaustion(tmp_path, capsys):
    code, out = run(capsys, ["choosable", "-k", "2", "--budget", "1", c6_file(tmp_path)])
    assert code == 3
    assert out.splitlines()[0] == "verdict=inconclusive"


def test_choosable_env_budget(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("SQCOLOR_BUDGET", "1")
    code, out = run(capsys, ["choosable", "-k", "2", c6_file(tmp_path)])
    assert code == 3
    monkeypatch.setenv("SQCOLOR_BUDGET", "0")
    code, _ = run(capsys, ["choosable", "-k", "2", c6_file(tmp_path)])
    assert code == 2


def test_find_config(tmp_path, capsys):
    code, out = run(capsys, ["find-config", c6_file(tmp_path)])
    assert code == 0
    assert out == "config=sixcycle_two_vertex cycle=1,2,3,4,5,0 two_vertex=0\n"
    path = write_fixture(
        tmp_path, "hept.txt", write_graph_text(named("two-heptagons")[0])
    )
    code, out = run(capsys, ["find-config", path])
    assert code == 0
    assert out == "config=cut_two_vertex u=14 x=0 y=7\n"
    prism = write_fixture(tmp_path, "prism.txt", write_graph_text(named("prism6")[0]))
    code, out = run(capsys, ["find-config", prism])
    assert code == 0
    assert out == "config=none\n"


def test_reduce(tmp_path, capsys):
    path = write_fixture(
        tmp_path, "hept.txt", write_graph_text(named("two-heptagons")[0])
    )
    code, out = run(capsys, ["reduce", path])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "removed=14"
    assert lines[1] == "edge=0,7"
    got, _ = parse_one_graph("\n".join(lines[2:]) + "\n")
    assert got.n == 14
    assert got.has_edge(0, 7)


def test_reduce_structured(tmp_path, capsys):
    path = write_fixture(
        tmp_path, "hept.txt", write_graph_text(named("two-heptagons")[0])
    )
    code, out = run(capsys, ["reduce", "--structured", path])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "sqcolor-report 1"
    assert lines[1] == "removed=14"
    assert lines[2] == "edge=0,7"
    assert lines[3].startswith("graph=")
    assert from_graph6(lines[3].removeprefix("graph=")).n == 14


def test_reduce_requires_cut_two_vertex(tmp_path, capsys):
    code, _ = run(capsys, ["reduce", c6_file(tmp_path)])
    assert code == 1
    path = write_fixture(
        tmp_path, "hept.txt", write_graph_text(named("two-heptagons")[0])
    )
    code, _ = run(capsys, ["reduce", "--vertex", "3", path])
    assert code == 1


def test_discharge_audit_c6_golden(tmp_path, capsys):
    code, out = run(capsys, ["discharge-audit", c6_file(tmp_path)])
    assert code == 0
    assert out == (
        "vertices=6\n"
        "edges=6\n"
        "faces=2\n"
        "initial_total=-12\n"
        "final_total=-12\n"
        "negative_face face=0 length=6 charge=-6\n"
        "negative_face face=1 length=6 charge=-6\n"
        "config=sixcycle_two_vertex cycle=1,2,3,4,5,0 two_vertex=0\n"
        "claim3=skipped reason=close 2-vertices on a cycle\n"
        "dichotomy=ok\n"
    )


def test_discharge_audit_rejects_low_girth(tmp_path, capsys):
    path = write_fixture(tmp_path, "q3.txt", write_graph_text(named("q3")[0]))
    code, _ = run(capsys, ["discharge-audit", path])
    assert code == 1


def test_generate_count(capsys):
    code, out = run(capsys, ["generate", "--max-n", "6", "--count"])
    assert code == 0
    assert out == "count=12\n"


def test_generate_g6_lines(capsys):
    code, out = run(capsys, ["generate", "--max-n", "6", "--g6"])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 12
    graphs = [from_graph6(line) for line in lines]
    assert [g.n for g in graphs] == [1, 2, 3, 4, 4, 5, 5, 6, 6, 6, 6, 6]


def test_generate_named(capsys):
    code, out = run(capsys, ["generate", "--name", "c6"])
    assert code == 0
    got, rot = parse_one_graph(out)
    assert got == named("c6")[0]
    assert rot is not None


def test_generate_unknown_name(capsys):
    code, _ = run(capsys, ["generate", "--name", "mystery"])
    assert code == 1


def test_generate_random_deterministic(capsys):
    code, out1 = run(capsys, ["generate", "--random", "--max-n", "10", "--seed", "3", "--g6"])
    assert code == 0
    code, out2 = run(capsys, ["generate", "--random", "--max-n", "10", "--seed", "3", "--g6"])
    assert out1 == out2
    g = from_graph6(out1.strip())
    assert g.n <= 10


def test_multiple_graphs_in_one_file(tmp_path, capsys):
    text = write_graph_text(named("c6")[0]) + write_graph_text(named("c7")[0])
    path = write_fixture(tmp_path, "both.txt", text)
    code, out = run(capsys, ["girth", path])
    assert code == 0
    assert out == "graph=0\ngirth=6\ngraph=1\ngirth=7\n"


def test_jobs_parallel_preserves_order(tmp_path, capsys):
    paths = [
        write_fixture(tmp_path, "a.txt", write_graph_text(named("c6")[0])),
        write_fixture(tmp_path, "b.txt", write_graph_text(named("c7")[0])),
        write_fixture(tmp_path, "c.txt", write_graph_text(named("p4")[0])),
    ]
    code, out = run(capsys, ["girth", "--jobs", "2", *paths])
    assert code == 0
    assert out == (
        f"file={paths[0]}\ngirth=6\n"
        f"file={paths[1]}\ngirth=7\n"
        f"file={paths[2]}\ngirth=inf\n"
    )


def test_worst_exit_code_wins_across_files(tmp_path, capsys):
    ok = write_fixture(tmp_path, "c6.txt", write_graph_text(named("c6")[0]))
    bad = write_fixture(tmp_path, "c5.txt", write_graph_text(named("c5")[0]))
    code, out = run(capsys, ["discharge-audit", ok, bad])
    assert code == 1


def test_parse_error_exit_code(tmp_path, capsys):
    path = write_fixture(tmp_path, "junk.txt", "3 x\n0 1\n")
    code, _ = run(capsys, ["girth", path])
    assert code == 2


def test_missing_file_exit_code(capsys):
    code, _ = run(capsys, ["girth", "/nonexistent/never.txt"])
    assert code == 2


def test_verify_lemma2(capsys):
    code, out = run(capsys, ["verify-lemma2"])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 12
    assert all(line.startswith("case ") and line.endswith("OK") for line in lines)
    assert lines[0] == "case {a,b}|{b,a}|{c,a} -> f=(alpha,b,a,c,b) OK"


def test_verify_lemma2_structured_header(capsys):
    code, out = run(capsys, ["verify-lemma2", "--structured"])
    assert code == 0
    assert out.splitlines()[0] == "sqcolor-report 1"
    assert len(out.splitlines()) == 13


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "sqcolor.cli", "verify-lemma2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert len(proc.stdout.splitlines()) == 12
