import json
import subprocess
import sys


def run_cli(*args):
    proc = subprocess.run([sys.executable, "-m", "superext.cli", *args],
                          capture_output=True, text=True)
    return proc


def test_algebra_command_emits_structure():
    proc = run_cli("algebra", "--kind", "osp", "--n", "1")
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["dim"] == 5
    assert sorted(data["parity"]) == [0, 0, 0, 1, 1]
    assert data["cartan"] == [4]


def test_cohomology_command():
    proc = run_cli("cohomology", "--kind", "osp", "--n", "1",
                   "--points", "0:2", "--module", "triv", "--degree", "1")
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert (data["even_dim"], data["odd_dim"]) == (0, 0)


def test_ext_command_between_evaluation_modules():
    proc = run_cli("ext", "--kind", "osp", "--n", "1", "--points", "0:2",
                   "--module1", "ev:0:1", "--module2", "ev:0:1",
                   "--degree", "0")
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert (data["even_dim"], data["odd_dim"]) == (1, 0)


def test_lhs_command_reports_reconstruction():
    proc = run_cli("lhs", "--kind", "osp", "--n", "1", "--points", "0:2",
                   "--modules", "2")
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["reconstruction_check"] is True


def test_verify_command_small_suite():
    proc = run_cli("verify", "--scale", "tiny")
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["all_pass"] is True
    assert all(r["pass"] for r in data["reports"])


def test_guard_exceeded_exit_code():
    proc = run_cli("algebra", "--kind", "gl", "--m", "20", "--n", "20")
    assert proc.returncode == 3


def test_validation_error_exit_code():
    proc = run_cli("algebra", "--kind", "sl", "--m", "2", "--n", "2")
    assert proc.returncode == 2
    err = json.loads(proc.stderr)
    assert "error" in err


def test_algebra_json_round_trip_through_files(tmp_path):
    out = tmp_path / "q2.json"
    proc = run_cli("algebra", "--kind", "q", "--n", "2",
                   "--output", str(out))
    assert proc.returncode == 0
    proc2 = run_cli("cohomology", "--algebra", str(out),
                    "--module", "triv", "--degree", "0")
    assert proc2.returncode == 0
    data = json.loads(proc2.stdout)
    assert data["even_dim"] + data["odd_dim"] >= 1
