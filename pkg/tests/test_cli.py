import json

from conftest import FIXTURES
from ghosa.cli import entrypoint


def run_cli(capsys, *args):
    code = entrypoint(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_run_benchmark(capsys):
    code, out, _ = run_cli(
        capsys, "run", "--problem", "benchmark", "--instance", "f18",
        "--runs", "2", "--iters", "200", "--pop", "10", "--target", "0.01",
    )
    assert code == 0
    assert "mean=" in out and "best=" in out


def test_run_tsp_with_override_and_report(capsys, tmp_path):
    out_stem = tmp_path / "report"
    code, out, _ = run_cli(
        capsys, "run", "--problem", "tsp", "--instance", f"{FIXTURES}/ulysses16.tsp",
        "--runs", "1", "--iters", "100", "--pop", "10",
        "--metric-override", "euclid", "--out", str(out_stem),
    )
    assert code == 0
    assert (tmp_path / "report.csv").exists()
    assert (tmp_path / "report.json").exists()
    data = json.loads((tmp_path / "report.json").read_text())
    assert data["config"]["metric_override"] == "euclid"


def test_oracle_command_with_cache(capsys, tmp_path):
    qap = tmp_path / "toy.qap"
    qap.write_text("3\n0 1 2\n1 0 1\n2 1 0\n0 2 1\n2 0 2\n1 2 0\n")
    cache = tmp_path / "oracle.cache"
    code, out, _ = run_cli(
        capsys, "oracle", "--problem", "qap", "--instance", str(qap),
        "--cache", str(cache),
    )
    assert code == 0
    assert "optimum" in out
    code, out, _ = run_cli(
        capsys, "oracle", "--problem", "qap", "--instance", str(qap),
        "--cache", str(cache),
    )
    assert code == 0
    assert "(cached)" in out


def test_parse_check(capsys):
    code, out, _ = run_cli(
        capsys, "parse-check", "--problem", "tsp",
        "--instance", f"{FIXTURES}/ulysses16.tsp",
    )
    assert code == 0
    assert "n=16" in out


def test_config_error_exit_code(capsys):
    code, _, err = run_cli(
        capsys, "run", "--problem", "tsp", "--instance", f"{FIXTURES}/ulysses16.tsp",
        "--algo", "PSO", "--runs", "1",
    )
    assert code == 1


def test_instance_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.tsp"
    bad.write_text("DIMENSION : 3\n")
    code, _, err = run_cli(
        capsys, "run", "--problem", "tsp", "--instance", str(bad), "--runs", "1",
    )
    assert code == 2


def test_missing_file_exit_code(capsys):
    code, _, _ = run_cli(
        capsys, "parse-check", "--problem", "tsp", "--instance", "/no/such/file.tsp",
    )
    assert code == 2


def test_usage_error_exit_code(capsys):
    code, _, _ = run_cli(capsys, "run", "--problem", "nonsense")
    assert code == 1
