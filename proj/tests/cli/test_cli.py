import json
import os
import subprocess
from pathlib import Path

import pytest

WPOLY = os.environ.get("WPOLY_BIN", "wpoly")


def run(*args, check=None):
    proc = subprocess.run([WPOLY, *map(str, args)], capture_output=True, text=True, timeout=300)
    if check is not None:
        assert proc.returncode == check, proc.stdout + proc.stderr
    return proc


def coeffs(text):
    return [int(c) for c in json.loads(text)["coeffs"]]


def test_compute_formula_families():
    assert coeffs(run("compute", "--family", "pmn", "-m", 2, "-n", 2, "--output", "json", check=0).stdout) == [0, 4, 1]
    assert coeffs(run("compute", "--family", "chains", "-m", 3, "-n", 4, "--output", "json", check=0).stdout) == [
        1, 12, 18, 4]
    assert coeffs(run("compute", "--family", "antichain", "-p", 4, "--output", "json", check=0).stdout) == [
        1, 11, 11, 1]


def test_compute_human():
    assert run("compute", "--family", "pmn", "-m", 2, "-n", 2, check=0).stdout.strip().endswith("4*t + t^2")


def test_compute_both_methods_agree():
    out = run("compute", "--family", "pmn", "-m", 5, "-n", 4, "--method", "both", "--output", "json", check=0)
    assert coeffs(out.stdout)[0] == 0


def test_poset_file_roundtrip(tmp_path: Path):
    src = tmp_path / "p22.txt"
    src.write_text("# P_{2,2}\nposet 4\ncover 1 2\ncover 3 4\ncover 3 2\n")
    out = run("compute", "--file", src, "--print-poset", check=0).stdout
    assert "poset 4" in out
    assert "4*t + t^2" in out
    canon = tmp_path / "canon.txt"
    canon.write_text("\n".join(line for line in out.splitlines() if line.startswith(("poset", "cover"))) + "\n")
    again = run("compute", "--file", canon, "--output", "json", check=0)
    assert coeffs(again.stdout) == [0, 4, 1]


@pytest.mark.parametrize(
    "text",
    [
        "poset 3\ncover 1 2\ncover 2 1\n",
        "poset 3\ncover 1 4\n",
        "poset 3\ncover 1 1\n",
        "cover 1 2\n",
        "poset 3\nedge 1 2\n",
    ],
)
def test_bad_poset_exit_code(tmp_path: Path, text):
    f = tmp_path / "bad.txt"
    f.write_text(text)
    proc = run("compute", "--file", f)
    assert proc.returncode == 2
    assert proc.stderr


def test_budget_exit_code():
    proc = run("compute", "--family", "antichain", "-p", 14, "--method", "enum", "--budget", 1000)
    assert proc.returncode == 4
    assert "budget" in proc.stderr


def test_check_exit_codes():
    bad = run("check", "--family", "pmn", "-m", 11, "-n", 11)
    assert bad.returncode == 10
    assert "NOT REAL-ROOTED (2)" in bad.stdout
    good = run("check", "--family", "chains", "-m", 5, "-n", 7)
    assert good.returncode == 0
    assert "REAL-ROOTED" in good.stdout


def test_check_json_report():
    proc = run("check", "--family", "pmn", "-m", 36, "-n", 6, "--output", "json", check=10)
    doc = json.loads(proc.stdout)
    assert doc["real_rooted"] is False
    report = doc["report"]
    assert report["degree"] == 6
    assert report["nonreal_with_multiplicity"] == 2
    assert report["zero_root_multiplicity"] == 1
    assert report["real_roots_with_multiplicity"] == 4
    assert len(report["nonreal_approx"]) == 2


def test_compute_output_feeds_check(tmp_path: Path):
    poly = tmp_path / "w.json"
    poly.write_text(run("compute", "--family", "pmn", "-m", 11, "-n", 11, "--output", "json", check=0).stdout)
    proc = run("check", "--poly", poly, "--no-approx", "--output", "json", check=10)
    assert "nonreal_approx" not in json.loads(proc.stdout)["report"]


def test_check_poly_rejects_garbage(tmp_path: Path):
    poly = tmp_path / "w.json"
    poly.write_text('{"coeffs": ["1", "x"]}')
    assert run("check", "--poly", poly).returncode == 1


def test_search_jsonl(tmp_path: Path):
    out = tmp_path / "scan.jsonl"
    run("search", "--m-range", "10:12", "--n-range", "9:11", "--only-failures", "--jsonl", out, "-j", 2, check=0)
    cells = [json.loads(line) for line in out.read_text().splitlines()]
    assert [(c["m"], c["n"]) for c in cells] == [(11, 10), (11, 11), (12, 9), (12, 10), (12, 11)]
    assert all(c["nonreal_count"] == 2 for c in cells)


def test_search_jobs_from_environment():
    env = dict(os.environ, WPOLY_JOBS="3")
    proc = subprocess.run(
        [WPOLY, "search", "--m-range", "1:8", "--n-range", "1:8", "--output", "json"],
        capture_output=True, text=True, env=env, timeout=300)
    assert proc.returncode == 0
    lines = proc.stdout.splitlines()
    assert len(lines) == 36
    assert all(json.loads(line)["nonreal_count"] == 0 for line in lines)


def test_search_minimal():
    by_degree = run("search", "--m-range", "1:36", "--n-range", "1:12", "--minimal", "by_degree", "--output", "json",
                    check=0)
    cells = [json.loads(line) for line in by_degree.stdout.splitlines()]
    assert [(c["m"], c["n"], c["degree"]) for c in cells] == [(36, 6, 6)]
    by_sum = run("search", "--minimal", "by_sum", "--output", "json", check=0)
    cells = [json.loads(line) for line in by_sum.stdout.splitlines()]
    assert [(c["m"], c["n"]) for c in cells] == [(11, 10), (12, 9)]


def test_eulerian():
    assert coeffs(run("eulerian", "-p", 5, "--output", "json", check=0).stdout) == [1, 26, 66, 26, 1]


def test_asymptotics_json():
    doc = json.loads(run("asymptotics", "-m", 10, "-n", 10, "--output", "json", check=0).stdout)
    assert abs(doc["convergence_gap"] - 0.17787545703347854) < 1e-12
    assert doc["near_unit_magnitude"] is True
    assert doc["truncation_order"] == 13
    assert len(doc["F_zeros"]) == 1
    assert abs(doc["bessel_j0_first_zero"] - 2.4048255576957728) < 1e-12


def test_verify_paper():
    ok = run("verify-paper", "--quick")
    assert ok.returncode == 0
    assert "FAIL" not in ok.stdout
    corrupt = run("verify-paper", "--quick", "--corrupt-expected")
    assert corrupt.returncode == 1
    assert "FAIL" in corrupt.stdout


def test_usage_errors():
    assert run("compute").returncode == 1
    assert run("compute", "--family", "pmn", "-m", 0, "-n", 2).returncode == 1
    assert run("--help").returncode == 0
