import json
import subprocess
import sys

import pytest

from coxfact.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_info_examples(capsys):
    code, data = run_json(capsys, "info", "G:2,1,2")
    s = data["results"]
    assert code == 0 and (s["n"], s["order"], s["h"], s["refl"], s["corefl"]) == (2, 8, 4, 4, 4)
    code, data = run_json(capsys, "info", "Sn:4")
    assert (data["results"]["n"], data["results"]["h"], data["results"]["refl"]) == (3, 4, 6)
    code, data = run_json(capsys, "info", "X:G4")
    assert data["results"]["order"] == 24 and data["results"]["degrees"] == [4, 6]
    code, out, _ = run(capsys, "info", "X:E8")
    assert code == 0 and "696729600" in out


def test_count_examples(capsys):
    code, data = run_json(capsys, "count", "Sn:4", "--len", "3", "--method", "all")
    assert code == 0 and data["results"]["agree"]
    assert set(data["results"]["counts"].values()) == {"16"}
    code, out, _ = run(capsys, "count", "C:3", "--len", "2")
    assert code == 0 and out.split()[-1] == "1"
    code, out, _ = run(capsys, "count", "I2:5", "--len", "4")
    assert code == 0 and out.split()[-1] == "125"


def test_count_zeta_and_exceptional(capsys):
    code, data = run_json(capsys, "count", "G:4,1,2", "--len", "6", "--method", "all", "--zeta", "3/8")
    assert code == 0 and set(data["results"]["counts"].values()) == {"32704"}
    assert data["results"]["zeta"] == "3/8"
    code, data = run_json(capsys, "count", "X:E8", "--len", "8", "--method", "all")
    assert code == 0 and set(data["results"]["counts"].values()) == {"37968750"}


def test_counts_are_strings(capsys):
    code, data = run_json(capsys, "count", "G:2,1,4", "--len", "10", "--method", "frobenius")
    assert data["results"]["counts"]["frobenius"] == "5704253440"
    assert isinstance(data["elapsed_s"], float)


def test_verify_examples(capsys):
    code, data = run_json(capsys, "verify", "G:3,3,3", "--max-len", "9")
    assert code == 0 and data["results"]["pass"]
    assert len(data["results"]["classes"]) == 2
    code, out, _ = run(capsys, "verify-exceptional", "G4")
    assert code == 0 and "1/1 pass" in out
    code, data = run_json(capsys, "verify-exceptional", "--all")
    assert code == 0 and data["results"]["passed"] == data["results"]["total"] == 26


@pytest.mark.parametrize("argv", [
    ["info", "Sn4"],
    ["info", "G:3,2,4"],
    ["info", "G:1,1,3"],
    ["info", "Q:3"],
    ["info", "X:G7"],
    ["info", "Sn:x"],
    ["count", "Sn:4"],
    ["count", "Sn:4", "--len", "3", "--zeta", "2/4"],
    ["count", "Sn:4", "--len", "3", "--zeta", "1/5"],
    ["count", "Sn:4", "--len", "-1"],
    ["count", "X:G4", "--len", "2", "--method", "brute"],
    ["verify", "X:G4"],
    ["verify-exceptional"],
    ["verify-exceptional", "G4", "--all"],
    ["frobnicate"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 1


def test_cap_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("COXFACT_MAX_OPS", "10")
    code, _, err = run(capsys, "count", "Sn:5", "--len", "4", "--method", "brute")
    assert code == 3 and "cap" in err
    code, _, _ = run(capsys, "count", "Sn:4", "--len", "40", "--method", "brute")
    assert code == 3


def test_verification_failure_exit_code(capsys, tmp_path):
    from coxfact.exceptional import data_dir

    text = (data_dir() / "G4.tsv").read_text().replace("2\t5\t1\t-8", "2\t5\t1\t-7")
    (tmp_path / "G4.tsv").write_text(text)
    code, data = run_json(capsys, "verify-exceptional", "G4", "--data-dir", str(tmp_path))
    assert code == 2 and not data["results"]["types"][0]["pass"]


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "coxfact", "count", "Sn:5", "--len", "4", "--json"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["results"]["counts"]["closed-form"] == "125"
