import json
import subprocess
import sys

import pytest

from semigoto.census import RECORD_FIELDS
from semigoto.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_table(capsys):
    code, out, _ = run(capsys, "analyze", "7,10,22")
    assert code == 0
    assert "Goto rank n        4" in out
    assert "X² Y² Z" in out and "Y⁴ Z X³" in out


def test_analyze_json_schema(capsys):
    code, out, _ = run(capsys, "analyze", "3,4,5", "--json")
    data = json.loads(out)
    assert code == 0
    assert set(data) == {"goto", "sally", "herzog", "constructions"}
    assert data["goto"]["goto_rank"] == 1 and data["goto"]["almost_gorenstein"] is True
    assert data["sally"] == {"rank": 1, "t": 0, "s": [1], "e0": 3, "e1": 2, "red": 2, "a": 3}
    assert data["herzog"]["closed_form_rank"] == 1


def test_analyze_not_goto(capsys):
    code, out, _ = run(capsys, "analyze", "4,5,11", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["goto"]["goto_rank"] is None and data["sally"]["t"] is None


def test_analyze_whole_semigroup(capsys):
    code, out, _ = run(capsys, "analyze", "1")
    assert code == 0 and "Goto rank n        0" in out


def test_chain(capsys):
    code, out, _ = run(capsys, "chain", "4,11,13,14", "--json")
    data = json.loads(out)
    assert code == 0 and data["rule"] == "arf"
    assert [step["goto_rank"] for step in data["chain"]] == [3, 2, 1, 0]


@pytest.mark.parametrize(
    "argv,rank",
    [
        (["fiber", "3,10,11", "3,7,8"], 4),
        (["fiber", "1", "1"], 0),
        (["fiber", "3,7,8", "1"], 2),
        (["idealization", "4,13,22,27"], 4),
        (["idealization", "3,4,5", "--ext", "1"], 1),
    ],
)
def test_construct(capsys, argv, rank):
    code, out, _ = run(capsys, "construct", *argv, "--json")
    assert code == 0 and json.loads(out)["derived_rank"] == rank


def test_herzog(capsys):
    code, out, _ = run(capsys, "herzog", "3,7,8")
    assert code == 0
    assert out.splitlines()[1:3] == ["X² Y Z", "Y Z X³"]
    code, out, _ = run(capsys, "herzog", "7,10,22", "--json")
    data = json.loads(out)
    assert [data[k] for k in ("alpha", "beta", "gamma", "alpha_p", "beta_p", "gamma_p")] == [2, 2, 1, 3, 4, 1]
    assert data["b"] == 8 and data["closed_form_rank"] == 4


def test_census_stdout_and_summary(capsys):
    code, out, err = run(capsys, "census", "--genus-max", "6", "--filter", "n == 2")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert records and all(rec["goto_rank"] == 2 for rec in records)
    assert json.loads(err)["matched"] == len(records)


def test_census_csv_to_file_with_config(capsys, tmp_path):
    conf = tmp_path / "census.conf"
    out_path = tmp_path / "records.csv"
    conf.write_text(f"genus_max = 4\nout = {out_path}\n")
    code, out, _ = run(capsys, "census", "--config", str(conf), "--csv")
    assert code == 0
    assert json.loads(out) == {"scanned": 15, "matched": 15, "rank_histogram": {"0": 8, "1": 6, "2": 1}}
    header = out_path.read_text().splitlines()[0]
    assert header == ",".join(RECORD_FIELDS)


def test_flags_override_config(capsys, tmp_path):
    conf = tmp_path / "census.conf"
    conf.write_text("genus_max = 9\nfilter = gorenstein\n")
    code, _, err = run(capsys, "census", "--config", str(conf), "--genus-max", "3")
    assert code == 0 and json.loads(err)["scanned"] == 8


def test_verify_reference_values(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    assert "FAIL" not in out and out.splitlines()[-1].endswith("fixtures passed")


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "4,6"],
        ["analyze", "x"],
        ["analyze", "3,-4"],
        ["herzog", "3,4"],
        ["herzog", "4,5,6"],
        ["herzog", "3,4,5", "--order", "3,4,6"],
        ["construct", "fiber", "3,4,5"],
        ["construct", "idealization", "3,4,5", "--ext", "3,4,5"],
        ["census", "--genus-max", "99"],
        ["census", "--genus-max", "3", "--filter", "import os"],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_bad_config(capsys, tmp_path):
    conf = tmp_path / "c.conf"
    conf.write_text("colour = blue\n")
    code, _, err = run(capsys, "census", "--config", str(conf))
    assert code == 2 and "unknown config key" in err
    code, _, _ = run(capsys, "census", "--config", str(tmp_path / "missing.conf"))
    assert code == 2


def test_usage_error_exits_2():
    proc = subprocess.run([sys.executable, "-m", "semigoto", "frobnicate"], capture_output=True, text=True)
    assert proc.returncode == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "semigoto", "analyze", "2,3", "--json"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["goto"]["gorenstein"] is True


def test_verification_failure_exits_1(capsys, monkeypatch):
    monkeypatch.setattr("semigoto.cli.run_all", lambda: [("stand-in fixture", False, 3)])
    code, out, _ = run(capsys, "verify-paper")
    assert code == 1 and out.startswith("FAIL")
