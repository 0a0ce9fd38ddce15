"""Command line behavior, exit codes, and output files."""

import json
import os
import subprocess
import sys

from poishom.cli import main


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "poishom.cli", *args],
        capture_output=True,
        text=True,
        env=env,
    )


def test_catalog_lists_all_structures():
    result = run_cli("catalog")
    assert result.returncode == 0
    for name in ("RMatrixSec1", "DrinfeldSklyanin", "SchubertPi1Ex4", "Pencil(a,b)"):
        assert name in result.stdout


def test_check_passes_and_prints_summary():
    result = run_cli(
        "check",
        "--structure",
        "DrinfeldSklyanin",
        "--suite",
        "identities",
        "--weight-cutoff",
        "4",
    )
    assert result.returncode == 0, result.stderr
    assert "identities" in result.stdout
    assert "PASS" in result.stdout


def test_check_rejects_unknown_structure():
    result = run_cli("check", "--structure", "Zilch")
    assert result.returncode == 2
    assert "error" in result.stderr


def test_check_rejects_inapplicable_suite():
    result = run_cli("check", "--structure", "RMatrixSec1", "--suite", "spectral")
    assert result.returncode == 2


def test_homology_csv_to_file(tmp_path):
    out = tmp_path / "table.csv"
    result = run_cli(
        "homology",
        "--structure",
        "SkewPolyEx3",
        "--weight-cutoff",
        "3",
        "--format",
        "csv",
        "--out",
        str(out),
    )
    assert result.returncode == 0, result.stderr
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "structure,n,form_degree,m,l,weight,dim,rank_in,rank_out,homology_dim"
    assert len(lines) > 3


def test_homology_json_to_stdout():
    result = run_cli("homology", "--structure", "DrinfeldSklyanin", "--weight-cutoff", "3")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["structure"] == "DrinfeldSklyanin"
    assert payload["rows"]


def test_spectral_json():
    result = run_cli(
        "spectral", "--structure", "DrinfeldSklyanin", "--weight-cutoff", "4"
    )
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["passed"] is True


def test_out_dir_env_var(tmp_path):
    result = run_cli(
        "homology",
        "--structure",
        "DrinfeldSklyanin",
        "--weight-cutoff",
        "3",
        "--format",
        "csv",
        "--out",
        "sub/table.csv",
        env_extra={"POISHOM_OUT_DIR": str(tmp_path)},
    )
    assert result.returncode == 0, result.stderr
    assert (tmp_path / "sub" / "table.csv").exists()


def test_report_writes_delimited_output_and_figures(tmp_path):
    result = run_cli(
        "report",
        "--structure",
        "DrinfeldSklyanin",
        "--weight-cutoff",
        "4",
        "--suite",
        "identities",
        "--suite",
        "homology",
        "--suite",
        "spectral",
        "--out",
        str(tmp_path / "run"),
    )
    assert result.returncode == 0, result.stderr
    out_dir = tmp_path / "run"
    report = json.loads((out_dir / "report.json").read_text(encoding="utf-8"))
    assert report["passed"] is True
    for name in ("check_summary.png", "homology_heatmap.png", "convergence.png"):
        png = out_dir / name
        assert png.exists(), name
        assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_direct_invocation_returns_exit_code(capsys, tmp_path):
    code = main(
        [
            "check",
            "--structure",
            "SkewPolyEx3",
            "--suite",
            "homology",
            "--weight-cutoff",
            "3",
            "--format",
            "csv",
            "--out",
            str(tmp_path / "rows.csv"),
        ]
    )
    assert code == 0
    captured = capsys.readouterr()
    assert "homology" in captured.out
    assert (tmp_path / "rows.csv").read_text(encoding="utf-8").startswith("suite,")


def test_version_flag():
    result = run_cli("--version")
    assert result.returncode == 0
    assert result.stdout.strip()
