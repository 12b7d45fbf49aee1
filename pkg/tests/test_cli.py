import json
import subprocess
import sys

import pytest

from ternions.cli import run_cli


def test_verify_paper(capsys):
    assert run_cli(["verify-paper"]) == 0
    out = capsys.readouterr().out
    assert out.count("[PASS]") == 8
    assert "8/8 checks passed" in out


def test_non_prime_is_usage_error(capsys):
    assert run_cli(["classify", "--q", "4", "--n", "2", "--side", "left"]) == 2
    err = capsys.readouterr().err.strip()
    assert "not prime" in err and len(err.splitlines()) == 1


@pytest.mark.parametrize("argv", [
    [],
    ["nosuch"],
    ["classify", "--n", "2"],
    ["classify", "--q", "2", "--side", "up"],
    ["classify", "--q", "2", "--n", "0"],
    ["tables", "--q", "3", "--paper-labels"],
    ["--threads", "0", "verify-paper"],
])
def test_usage_errors(argv, capsys):
    assert run_cli(argv) == 2
    assert len(capsys.readouterr().err.strip().splitlines()) == 1


def test_budget_flag(capsys):
    assert run_cli(["--budget", "100", "classify", "--q", "2", "--n", "2"]) == 2
    assert "budget" in capsys.readouterr().err
    assert run_cli(["classify", "--q", "2", "--n", "2", "--budget", "512"]) == 0


def test_core_q3_stdout(capsys):
    assert run_cli(["core", "--q", "3", "--n", "2", "--side", "left"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["core"]["points"]) == 13
    assert len(data["core"]["lines"]) == 13
    assert data["core"]["verdict"]["order"] == 3


def test_json_and_dot_files(tmp_path, capsys):
    j, d = tmp_path / "r.json", tmp_path / "r.dot"
    assert run_cli(["snowflake", "--q", "2", "--n", "2", "--side", "right",
                    "--json", str(j), "--dot", str(d)]) == 0
    assert json.loads(j.read_text())["degree_histogram"] == {"9": 7, "3": 14, "1": 42}
    assert d.read_text().startswith("graph snowflake {")
    assert "zero tuple degree 21" in capsys.readouterr().out


def test_twin_exit_code(tmp_path):
    assert run_cli(["--threads", "1", "twin", "--q", "2", "--n", "2",
                    "--json", str(tmp_path / "t.json")]) == 0


def test_tables_paper_labels(capsys):
    assert run_cli(["tables", "--q", "2", "--paper-labels"]) == 0
    out = capsys.readouterr().out
    assert "3 | 0 3 5 3 6 5 6 0" in out
    assert "1 | 1 0 6 7 5 4 2 3" in out


def test_tables_q3(capsys):
    assert run_cli(["tables", "--q", "3"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 2 * (27 + 3)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ternions", "verify-paper"],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
