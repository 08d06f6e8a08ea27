from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from domlite.graph import load_graph, parse_weights, to_edge_list
from helpers import complete_graph, path_graph, star_graph


def run_cli(*argv: str, env_extra: dict[str, str] | None = None):
    env = dict(os.environ)
    env.pop("DOMLITE_CUTOFF", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([sys.executable, "-m", "domlite", *argv],
                          capture_output=True, text=True, env=env,
                          timeout=120)


@pytest.fixture
def star_file(tmp_path):
    p = tmp_path / "star4.txt"
    p.write_text(to_edge_list(star_graph(3)))
    return str(p)


@pytest.fixture
def weighted_path_files(tmp_path):
    g = tmp_path / "p3.txt"
    g.write_text(to_edge_list(path_graph(3)))
    w = tmp_path / "p3.weights"
    w.write_text("1 3\n2 1\n3 3\n")
    return str(g), str(w)


def parse_kv_line(line: str) -> dict[str, str]:
    return dict(tok.split("=", 1) for tok in line.split())


# -- solve -------------------------------------------------------------------

def test_solve_text_output(star_file):
    r = run_cli("solve", star_file, "--max-steps", "200", "--cutoff", "60")
    assert r.returncode == 0, r.stderr
    fields = parse_kv_line(r.stdout.strip())
    assert fields["instance"] == "star4"
    assert fields["algo"] == "cc2fs"
    assert fields["weight"] == "2"  # center is id 1: Mod200 weight 2
    assert fields["size"] == "1"
    assert fields["seed"] == "1"


def test_solve_json_output(star_file):
    r = run_cli("solve", star_file, "--format", "json",
                "--max-steps", "200", "--cutoff", "60", "--weights", "unit")
    assert r.returncode == 0, r.stderr
    data = json.loads(r.stdout)
    assert data["weight"] == 1
    assert data["solution"] == [1]
    assert data["steps"] >= 0


def test_solve_writes_solution_that_validates(star_file, tmp_path):
    out = tmp_path / "sol.txt"
    r = run_cli("solve", star_file, "--max-steps", "200", "--cutoff", "60",
                "--solution-out", str(out))
    assert r.returncode == 0
    v = run_cli("validate", star_file, str(out))
    assert v.returncode == 0
    assert v.stdout.startswith("VALID weight=2")


def test_solve_deterministic_with_step_budget(star_file):
    a = run_cli("solve", star_file, "--format", "json", "--max-steps", "500",
                "--cutoff", "60", "--seed", "9")
    b = run_cli("solve", star_file, "--format", "json", "--max-steps", "500",
                "--cutoff", "60", "--seed", "9")
    da, db = json.loads(a.stdout), json.loads(b.stdout)
    for key in ("weight", "size", "steps", "iterations", "solution"):
        assert da[key] == db[key]


def test_solve_complement_flag(tmp_path):
    p = tmp_path / "k3.txt"
    p.write_text(to_edge_list(complete_graph(3)))
    plain = run_cli("solve", str(p), "--weights", "unit",
                    "--max-steps", "100", "--cutoff", "60")
    comp = run_cli("solve", str(p), "--weights", "unit", "--complement",
                   "--max-steps", "100", "--cutoff", "60")
    assert parse_kv_line(plain.stdout.strip())["weight"] == "1"
    assert parse_kv_line(comp.stdout.strip())["weight"] == "3"


def test_solve_algo_and_score_overrides(star_file):
    r = run_cli("solve", star_file, "--algo", "ccfs", "--score", "s2",
                "--max-steps", "200", "--cutoff", "60")
    assert r.returncode == 0
    assert parse_kv_line(r.stdout.strip())["algo"] == "cc1+s2"


# -- bench -------------------------------------------------------------------

def test_bench_csv_stdout(star_file):
    r = run_cli("bench", star_file, "--runs", "3", "--max-steps", "200",
                "--cutoff", "60")
    assert r.returncode == 0, r.stderr
    lines = r.stdout.strip().split("\n")
    assert lines[0] == "instance,algo,runs,min,avg,sd,rtime_best,cutoff,seed0"
    assert lines[1].startswith("star4,cc2fs,3,2,2.00,0.00,")


def test_bench_out_and_per_run_files(star_file, tmp_path):
    out = tmp_path / "agg.csv"
    per = tmp_path / "runs.csv"
    r = run_cli("bench", star_file, "--runs", "2", "--max-steps", "200",
                "--cutoff", "60", "--out", str(out), "--per-run", str(per))
    assert r.returncode == 0
    assert r.stdout == ""
    assert out.read_text().startswith("instance,algo,")
    run_lines = per.read_text().strip().split("\n")
    assert len(run_lines) == 3  # header + 2 runs
    assert run_lines[1].startswith("star4,cc2fs,1,1,2,")


def test_bench_json_format(star_file):
    r = run_cli("bench", star_file, "--runs", "2", "--max-steps", "200",
                "--cutoff", "60", "--format", "json")
    rows = json.loads(r.stdout)["results"]
    assert rows[0]["instance"] == "star4"
    assert rows[0]["min"] == 2


def test_bench_failure_exit_code(star_file, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("not a graph\n")
    r = run_cli("bench", str(bad), star_file, "--runs", "1",
                "--max-steps", "100", "--cutoff", "60")
    assert r.returncode == 1
    lines = r.stdout.strip().split("\n")
    assert lines[1].startswith("bad,cc2fs,0,n/a,n/a,n/a,n/a,")
    assert lines[2].startswith("star4,")


# -- exact -------------------------------------------------------------------

def test_exact_reports_optimum(weighted_path_files):
    graph_file, weight_file = weighted_path_files
    r = run_cli("exact", graph_file, "--weights", f"file:{weight_file}")
    assert r.returncode == 0, r.stderr
    first, second = r.stdout.strip().split("\n")
    assert first.startswith("weight=1 nodes=")
    assert second == "solution: 2"


def test_exact_budget_exhaustion_exit_code(tmp_path):
    p = tmp_path / "p30.txt"
    p.write_text(to_edge_list(path_graph(30)))
    r = run_cli("exact", str(p), "--weights", "unit", "--node-budget", "1")
    assert r.returncode == 1
    assert "error:" in r.stderr


# -- validate ----------------------------------------------------------------

def test_validate_full_vertex_set(star_file, tmp_path):
    sol = tmp_path / "all.txt"
    sol.write_text("1 2 3 4\n")
    r = run_cli("validate", star_file, str(sol), "--weights", "unit")
    assert r.returncode == 0
    assert r.stdout.strip() == "VALID weight=4"


def test_validate_empty_solution(star_file, tmp_path):
    sol = tmp_path / "none.txt"
    sol.write_text("\n")
    r = run_cli("validate", star_file, str(sol))
    assert r.returncode == 1
    assert r.stdout.strip() == "INVALID uncovered=4"


def test_validate_rejects_bad_ids(star_file, tmp_path):
    sol = tmp_path / "oob.txt"
    sol.write_text("9\n")
    r = run_cli("validate", star_file, str(sol))
    assert r.returncode == 2
    sol.write_text("one\n")
    r = run_cli("validate", star_file, str(sol))
    assert r.returncode == 2


# -- gen ---------------------------------------------------------------------

def test_gen_writes_loadable_pair(tmp_path):
    out = tmp_path / "inst.txt"
    r = run_cli("gen", "--n", "30", "--m", "60", "--family", "t1",
                "--seed", "5", "--out", str(out))
    assert r.returncode == 0
    assert f"n=30, m=60" in r.stdout
    g = load_graph(str(out))
    assert (g.n, g.m) == (30, 60)
    weights = parse_weights((tmp_path / "inst.txt.weights").read_text(), 30)
    assert all(20 <= w <= 70 for w in weights)


def test_gen_rejects_infeasible_spec(tmp_path):
    r = run_cli("gen", "--n", "5", "--m", "2", "--out",
                str(tmp_path / "x.txt"))
    assert r.returncode == 2
    assert "error:" in r.stderr


# -- global behavior -----------------------------------------------------------

def test_missing_instance_file_is_a_clean_error():
    r = run_cli("solve", "/nonexistent/graph.txt", "--max-steps", "10",
                "--cutoff", "60")
    assert r.returncode == 2
    assert "error:" in r.stderr


def test_cutoff_env_variable(star_file):
    r = run_cli("solve", star_file, env_extra={"DOMLITE_CUTOFF": "0.05"})
    assert r.returncode == 0
    bad = run_cli("solve", star_file, env_extra={"DOMLITE_CUTOFF": "soon"})
    assert bad.returncode == 2
    assert "DOMLITE_CUTOFF" in bad.stderr


def test_unknown_algo_rejected_by_argparse(star_file):
    r = run_cli("solve", star_file, "--algo", "magic")
    assert r.returncode == 2
