import subprocess
import sys

import numpy as np
import pytest
from click.testing import CliRunner

from phbal.cli import EXIT_INFEASIBLE, EXIT_IO, EXIT_USAGE, cli
from phbal.fileio import parse_system, write_system
from phbal.sysmodel import LtiSystem


@pytest.fixture()
def runner():
    return CliRunner()


def test_info(runner):
    result = runner.invoke(cli, ["info", "--example", "msd"])
    assert result.exit_code == 0
    assert "name=msd" in result.output
    assert "n=10" in result.output


def test_reduce_gen_ph_report(runner):
    result = runner.invoke(cli, ["reduce", "--example", "msd",
                                 "--pipeline", "gen-ph", "--k", "6"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    kv = dict(line.split("=", 1) for line in lines if "=" in line)
    assert kv["pipeline"] == "gen-ph" and kv["k"] == "6"
    assert float(kv["bound"]) <= 2.27
    assert "index sigma" in lines
    assert sum(1 for l in lines if l == "```") == 2


def test_reduce_requires_one_source(runner):
    result = runner.invoke(cli, ["reduce", "--pipeline", "gen", "--k", "2"])
    assert result.exit_code != 0


def test_reduce_writes_outputs(runner, tmp_path):
    out_sys = tmp_path / "red.txt"
    out_rep = tmp_path / "report.txt"
    out_csv = tmp_path / "traj.csv"
    result = runner.invoke(cli, [
        "reduce", "--example", "msd", "--pipeline", "gen-ph", "--k", "6",
        "--simulate", "step:0,1", "--horizon", "0.02", "--dt", "1e-3",
        "--out-system", str(out_sys), "--out-report", str(out_rep),
        "--out-trajectory", str(out_csv),
    ])
    assert result.exit_code == 0, result.output
    red = parse_system(str(out_sys)).to_system()
    assert red.n == 6
    assert "bound=" in out_rep.read_text()
    header = out_csv.read_text().splitlines()[0]
    assert header.startswith("t,u1,y1")


def test_reduce_from_system_file(runner, tmp_path):
    path = tmp_path / "sys.txt"
    write_system(str(path), LtiSystem(a=[[-1.0, 0.0], [0.0, -2.0]],
                                      b=[[1.0], [1.0]], c=[[1.0, 1.0]]))
    result = runner.invoke(cli, ["reduce", "--system", str(path),
                                 "--pipeline", "gen", "--k", "1"])
    assert result.exit_code == 0
    assert "pipeline=gen" in result.output


def test_reduce_rlc_circuit_report(runner):
    result = runner.invoke(cli, [
        "reduce", "--example", "rlc", "--pipeline", "ext-ph", "--pairs", "2",
        "--delta-c", "0.11", "--beta", "5e8",
        "--gamma-c", "appendix", "--gamma-o", "zero",
    ])
    assert result.exit_code == 0, result.output
    assert "circuit.capacitances=" in result.output
    assert "flag.circuit_extracted=true" in result.output


def _run_cli(args):
    return subprocess.run([sys.executable, "-m", "phbal.cli", *args],
                          capture_output=True, text=True)


def test_exit_code_usage():
    proc = _run_cli(["reduce", "--pipeline", "gen", "--k", "2"])
    assert proc.returncode == EXIT_USAGE


def test_exit_code_infeasible():
    proc = _run_cli(["reduce", "--example", "msd", "--pipeline", "gen",
                     "--k", "6", "--delta", "1.0"])
    assert proc.returncode == EXIT_INFEASIBLE
    assert "ConditionFailed" in proc.stderr


def test_exit_code_io_missing_file():
    proc = _run_cli(["reduce", "--system", "/no/such/file.txt",
                     "--pipeline", "gen", "--k", "1"])
    assert proc.returncode == EXIT_IO


def test_exit_code_io_parse_error(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("kind lti\nmatrix A 1 1\nnot_a_number\n")
    proc = _run_cli(["reduce", "--system", str(bad),
                     "--pipeline", "gen", "--k", "1"])
    assert proc.returncode == EXIT_IO
    assert ":3:" in proc.stderr  # parse errors carry line numbers
