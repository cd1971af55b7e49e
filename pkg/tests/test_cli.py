import json
import shutil
import subprocess
import sys

import pytest

from jensen.cli import RunConfig, UsageError, main, run


def invoke(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_theorem_s3(capsys):
    code, out, _ = invoke(capsys, "verify-theorem", "--group", "Sn:3", "--coeff", "2", "--variant", "both")
    assert code == 0
    assert "orders 2/2/2" in out and "verdict EQUAL" in out


def test_solve_klein_reports_strict_containment(capsys, data_dir):
    code, out, _ = invoke(
        capsys, "solve", "--group", str(data_dir / "klein4.grp"), "--coeff", "2", "--variant", "1", "--output", "json"
    )
    assert code == 0
    (rep,) = json.loads(out)["reports"]
    assert rep["solution_order"] == 8 and rep["hom_order"] == 4
    assert rep["verdict"] == "HOM_STRICTLY_SMALLER" and rep["hom_contained"]


def test_verify_theorem_trivial(capsys):
    code, out, _ = invoke(capsys, "verify-theorem", "--group", "Sn:1", "--coeff", "2,4", "--output", "json")
    assert code == 0
    rep = json.loads(out)
    assert set(rep["orders"].values()) == {1} and rep["hom_order"] == 1
    assert rep["verdict"] == "EQUAL"


def test_verify_theorem_fails_off_sn(capsys, data_dir):
    code, out, _ = invoke(capsys, "verify-theorem", "--group", str(data_dir / "klein4.grp"), "--coeff", "2")
    assert code == 1 and "NOT_EQUAL" in out


def test_json_is_byte_identical(capsys):
    args = ("identities", "--group", "Sn:3", "--coeff", "2,4", "--output", "json")
    _, a, _ = invoke(capsys, *args)
    _, b, _ = invoke(capsys, *args)
    assert a == b
    assert json.loads(a)["verdict"] == "PASS"


def test_seed_environment_override(capsys, monkeypatch):
    monkeypatch.setenv("JENSEN_SEED", "17")
    code, out, _ = invoke(capsys, "identities", "--group", "Sn:5", "--coeff", "2", "--variant", "1", "--output", "json")
    rep = json.loads(out)
    assert code == 0 and rep["seed"] == 17
    checks = rep["results"]["XY_INV"][0]["checks"]
    sampled = [c for c in checks if not c["exhaustive"]]
    assert sampled and all(c["seed"] == 17 for c in sampled)
    monkeypatch.setenv("JENSEN_SEED", "nope")
    assert invoke(capsys, "identities", "--group", "Sn:3")[0] == 2


def test_oracle_command(capsys, data_dir):
    code, out, _ = invoke(capsys, "oracle", "--group", str(data_dir / "z2xz4.grp"), "--coeff", "2", "--output", "json")
    rep = json.loads(out)
    assert code == 0 and all(r["sets_equal"] for r in rep["results"].values())


def test_hom_and_builtin_cyclic(capsys):
    code, out, _ = invoke(capsys, "hom", "--group", "Cn:6", "--coeff", "4", "--output", "json")
    assert code == 0 and json.loads(out)["hom_order"] == 2


def test_snf_commands(capsys, tmp_path):
    m = tmp_path / "m.txt"
    m.write_text("2 4\n6 8\n")
    code, out, _ = invoke(capsys, "snf", "--matrix", str(m))
    assert code == 0 and "diagonal [2, 4]" in out
    code, out, _ = invoke(capsys, "snf", "--group", "Sn:3", "--output", "json")
    systems = json.loads(out)["systems"]
    assert systems["XY_INV"]["lattice_rank"] == 6


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "--group", "Sn:9"],
        ["solve", "--group", "Sn:x"],
        ["solve", "--group", "/no/such/file.grp"],
        ["solve"],
        ["solve", "--group", "Sn:3", "--coeff", "2,a"],
        ["solve", "--group", "Sn:3", "--variant", "7"],
        ["verify-theorem", "--group", "Sn:6"],
        ["oracle", "--group", "Sn:5", "--coeff", "2"],
        ["solve", "--group", "Sn:3", "--enum-cap", "0"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = invoke(capsys, *argv)
    assert code == 2 and "error" in err


def test_malformed_group_file(capsys, tmp_path):
    bad = tmp_path / "bad.grp"
    bad.write_text("gens:\n(1 2\n")
    assert invoke(capsys, "solve", "--group", str(bad))[0] == 2


def test_argparse_rejects_unknown_command(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_run_api():
    status, rep = run(RunConfig("hom", "Sn:4", coeff="2,4"))
    assert status == 0 and rep["hom_order"] == 4
    with pytest.raises(UsageError):
        run(RunConfig("nope"))


def test_console_script():
    exe = shutil.which("jensen")
    cmd = [exe] if exe else [sys.executable, "-m", "jensen"]
    proc = subprocess.run(cmd + ["verify-theorem", "--group", "Sn:3", "--coeff", "2"], capture_output=True, text=True)
    assert proc.returncode == 0 and "EQUAL" in proc.stdout


def test_coefficient_group_from_file(capsys, data_dir):
    code, out, _ = invoke(capsys, "hom", "--group", "Sn:4", "--coeff", str(data_dir / "z2xz4.grp"), "--output", "json")
    rep = json.loads(out)
    assert code == 0 and rep["coeff"] == "Z/2 + Z/4" and rep["hom_order"] == 4


def test_non_abelian_coefficient_file_rejected(capsys, tmp_path):
    f = tmp_path / "s3.grp"
    f.write_text("gens:\n(1 2)\n(2 3)\n")
    assert invoke(capsys, "hom", "--group", "Sn:3", "--coeff", str(f))[0] == 2
