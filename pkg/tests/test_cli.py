import json
import math
import subprocess
import sys

import pytest

from graphenergy import output
from graphenergy.cli import UsageError, main, parse_config, render_sweep, selftest_checks
from graphenergy.experiments import ExperimentConfig, run_sweep

K = 8 / (3 * math.pi)


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def split_sweep_csv(text):
    records, summary = text.split("\n\n")
    return output.from_csv(records), output.from_csv(summary)


def test_predict_ag1(capsys):
    code, out, _ = run(capsys, "predict", "--index", "ag1", "--n", "1000", "--p", "0.5")
    assert code == 0
    (row,) = output.from_csv(out)
    assert row["predicted_t3"] == pytest.approx(K * 0.5 * 1000**1.5, rel=1e-14)
    assert row["predicted_cor"] == pytest.approx(row["predicted_t3"], rel=1e-14)


def test_predict_general_randic_specializes(capsys):
    _, a, _ = run(capsys, "predict", "--index", "general_randic", "--alpha", "-0.5", "--n", "100",
                  "--p", "0.5", "--format", "json")
    _, b, _ = run(capsys, "predict", "--index", "randic", "--n", "100", "--p", "0.5", "--format", "json")
    a, b = json.loads(a), json.loads(b)
    assert a["predicted_t3"] == pytest.approx(b["predicted_t3"], rel=1e-14)
    assert a["predicted_cor"] == pytest.approx(b["predicted_cor"], rel=1e-14)


def test_predict_argmax(capsys):
    code, out, _ = run(capsys, "predict", "--index", "azi", "--argmax-p")
    assert code == 0
    (row,) = output.from_csv(out)
    assert row["p_star"] == pytest.approx(0.875, abs=1e-6)
    assert row["trend"] == "interior"


@pytest.mark.parametrize("argv, flag", [
    (["predict", "--index", "unit", "--n", "100", "--p", "1.5"], "--p"),
    (["predict", "--index", "unit", "--n", "one", "--p", "0.5"], "--n"),
    (["predict", "--index", "bogus", "--n", "100", "--p", "0.5"], "--index"),
    (["predict", "--index", "unit", "--p", "0.5"], "--n"),
    (["energy", "--n", "10", "--p", "0.5", "--index", "unit", "--seed", "-3"], "--seed"),
])
def test_usage_errors_name_the_flag(capsys, argv, flag):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert flag in err


def test_energy_two_vertices(capsys):
    code, out, _ = run(capsys, "energy", "--n", "2", "--p", "0.5", "--index", "unit", "--seed", "7")
    assert code == 0
    e = json.loads(out)["energy"]
    assert e == pytest.approx(0.0, abs=1e-12) or e == pytest.approx(2.0, rel=1e-12)
    _, again, _ = run(capsys, "energy", "--n", "2", "--p", "0.5", "--index", "unit", "--seed", "7")
    assert json.loads(again)["energy"] == e


def test_energy_domain_failure(tmp_path):
    path = tmp_path / "leaves.txt"
    path.write_text("4 1\n0 1\n")
    proc = subprocess.run([sys.executable, "-m", "graphenergy", "energy", "--graph", str(path),
                           "--p", "0.5", "--index", "azi"], capture_output=True, text=True, check=False)
    assert proc.returncode == 3
    assert proc.stdout == ""
    assert "(0, 1)" in proc.stderr


def test_energy_esd_dump(capsys, tmp_path):
    dump = tmp_path / "esd.txt"
    code, out, _ = run(capsys, "energy", "--n", "40", "--p", "0.3", "--index", "randic", "--seed", "1",
                       "--esd-out", str(dump), "--format", "csv")
    assert code == 0
    values = [float(v) for v in dump.read_text().split()]
    assert len(values) == 40 and values == sorted(values)
    (row,) = output.from_csv(out)
    assert row["status"] == "ok" and row["n"] == 40


def test_esd_command(capsys):
    code, out, _ = run(capsys, "esd", "--n", "30", "--p", "0.5", "--index", "unit")
    assert code == 0
    rows = output.from_csv(out)
    assert len(rows) == 30
    assert rows[-1]["esd"] == 1.0
    code, out, _ = run(capsys, "esd", "--n", "30", "--p", "0.5", "--index", "unit", "--format", "json")
    data = json.loads(out)
    assert data["sigma"] == 0.5 and 0 <= data["ks"] <= 1


def test_sweep_single_cell(capsys):
    code, out, _ = run(capsys, "sweep", "--n", "50", "--p", "0.5", "--index", "unit", "--trials", "1")
    assert code == 0
    records, summary = split_sweep_csv(out)
    assert len(records) == 1 and len(summary) == 1
    assert list(records[0]) == list(output.record_columns())


def test_sweep_config_ordering(capsys, tmp_path):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text("# three orders\nn = 60, 20, 40\np = 0.5\nindex = unit\ntrials = 2\nseed = 5\n")
    code, out, _ = run(capsys, "sweep", "--config", str(cfg))
    assert code == 0
    _, summary = split_sweep_csv(out)
    assert [r["n"] for r in summary] == [20, 40, 60]


@pytest.mark.parametrize("text, needle", [
    ("n = 50\np = 0.5\nindex unit\n", "line 3"),
    ("n = 50\np = 2\nindex = unit\n", "'p'"),
    ("n = 50\np = 0.5\ncolour = red\n", "'colour'"),
    ("n = 50\nn = 60\n", "duplicate"),
    ("n = 50\np = 0.5\n", "index"),
    ("n = 50\np = 0.5\nindex = nope\n", "nope"),
])
def test_sweep_malformed_config(capsys, tmp_path, text, needle):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text(text)
    code, out, err = run(capsys, "sweep", "--config", str(cfg))
    assert code == 2
    assert out == ""
    assert needle in err


def test_parse_config_values():
    cfg = parse_config("n=500,1000\np=0.5\nindex=randic, unit\nks=false\nmoments=2,4,6\nalpha=0.5\n")
    assert cfg == {"n": [500, 1000], "p": [0.5], "index": ["randic", "unit"], "ks": False,
                   "moments": [2, 4, 6], "alpha": 0.5}
    with pytest.raises(UsageError):
        parse_config("trials=x")


def test_csv_round_trip_bit_identical():
    cfg = ExperimentConfig((30, 45), (0.3, 0.7), ("randic", "zagreb_m2"), trials=2, master_seed=17)
    result = run_sweep(cfg)
    records, _ = split_sweep_csv(render_sweep(result, "csv"))
    assert len(records) == len(result.records)
    for row, rec in zip(records, result.records):
        for col, attr in [("energy", "energy"), ("ratio_t3", "ratio_t3"), ("ks", "ks"),
                          ("ks_raw", "ks_raw"), ("predicted_t3", "predicted_t3"), ("p", "p")]:
            assert row[col] == getattr(rec, attr)
            assert row[col].hex() == getattr(rec, attr).hex()
        assert row["m2"] == rec.moments[2] and row["m4"] == rec.moments[4]


def test_json_nulls(capsys):
    code, out, _ = run(capsys, "sweep", "--n", "20", "--p", "0.5", "--index", "unit", "--no-ks",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    (rec,) = data["records"]
    assert rec["ks"] is None and rec["reason"] is None
    assert data["summary"][0]["std_ratio_t3"] is None
    assert "note" in data["metadata"]


def test_sweep_out_file(capsys, tmp_path):
    dest = tmp_path / "o.csv"
    code, out, _ = run(capsys, "sweep", "--n", "20", "--p", "0.5", "--index", "unit", "--out", str(dest))
    assert code == 0 and out == ""
    assert dest.read_text().startswith("n,p,index")


def test_selftest(capsys):
    checks = list(selftest_checks())
    assert all(ok for _, ok, _ in checks), checks
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert out.count("PASS") == len(checks)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "graphenergy", "predict", "--index", "unit",
                           "--n", "100", "--p", "0.5"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("index,")
