import csv
import subprocess
import sys

import numpy as np
import pytest

from elastiq import cli
from elastiq.errors import ConfigError
from elastiq.sbp_core import make_norm


def test_config_round_trip():
    cfg = cli.ScenarioConfig("energy", order=6, n=[25, 49], T=0.5, cfl=1.1, seed=3, out="x").validated()
    back = cli.ScenarioConfig.from_text(cfg.to_text())
    assert back == cfg


@pytest.mark.parametrize("bad", [
    {"scenario": "nope"},
    {"scenario": "energy", "order": "5"},
    {"scenario": "energy", "n": "24"},
    {"scenario": "energy", "n": "7"},
    {"scenario": "energy", "T": "-1"},
    {"scenario": "energy", "cfl": "0"},
    {"scenario": "stoneley", "mu": "soft"},
    {"scenario": "energy", "colour": "red"},
    {"scenario": "energy", "n": "a,b"},
])
def test_config_errors(bad):
    with pytest.raises(ConfigError):
        cli.ScenarioConfig.from_mapping(bad)


def test_exit_code_config_error(tmp_path):
    assert cli.main(["run", "energy", "--n", "20", "--out", str(tmp_path)]) == 2
    assert cli.main(["run", "energy", "--config", str(tmp_path / "missing.ini")]) == 2
    assert cli.main(["dump-operator", "G", "--n", "5", "--order", "6"]) == 2
    with pytest.raises(SystemExit) as e:
        cli.main(["run"])
    assert e.value.code == 2


def test_exit_code_numerical_failure(tmp_path):
    # far above the stability limit the state blows up and is caught
    assert cli.main(["run", "energy", "--n", "17", "--T", "20", "--cfl", "40", "--out", str(tmp_path)]) == 3
    # the table rows carry no interface wave
    assert cli.main(["run", "stoneley", "--mu", "1", "--n", "21", "--out", str(tmp_path)]) == 3


def test_energy_run_is_deterministic(tmp_path, capsys):
    outs = []
    for k in range(2):
        d = tmp_path / str(k)
        assert cli.main(["run", "energy", "--n", "17", "--T", "0.2", "--seed", "5", "--out", str(d)]) == 0
        outs.append((d / "energy_order4_n17.csv").read_bytes())
    assert outs[0] == outs[1]
    assert b"\r" not in outs[0]
    rows = list(csv.reader(outs[0].decode().splitlines()))
    assert rows[0] == ["step", "t", "energy", "drift"]
    assert all(abs(float(r[3])) < 1e-12 for r in rows[1:])
    assert "e-" in rows[1][1] or "e+" in rows[1][1]
    # another seed gives other data
    assert cli.main(["run", "energy", "--n", "17", "--T", "0.2", "--seed", "6", "--out", str(tmp_path / "2")]) == 0
    assert (tmp_path / "2" / "energy_order4_n17.csv").read_bytes() != outs[0]


def test_config_file_and_override(tmp_path):
    ini = tmp_path / "run.ini"
    ini.write_text("order = 4\nn = 17\nT = 0.1\nseed = 9\n")
    assert cli.main(["run", "energy", "--config", str(ini), "--T", "0.05", "--out", str(tmp_path)]) == 0
    rows = list(csv.reader(open(tmp_path / "energy_order4_n17.csv")))
    assert float(rows[-1][1]) == pytest.approx(0.05)


def test_spectrum_and_dispersion_outputs(tmp_path, capsys):
    assert cli.main(["run", "spectrum", "--order", "4", "--n", "41", "--out", str(tmp_path)]) == 0
    rows = list(csv.DictReader(open(tmp_path / "spectrum_q2.csv")))
    assert float(rows[0]["min_row_margin"]) > 0 and float(rows[0]["min_col_margin"]) > 0
    assert cli.main(["run", "dispersion", "--out", str(tmp_path)]) == 0
    rows = list(csv.DictReader(open(tmp_path / "dispersion.csv")))
    assert len(rows) == 4 and {r["status"] for r in rows} <= {"ok", "mismatch", "no-root"}


def test_dump_operator(tmp_path, capsys):
    assert cli.main(["dump-operator", "norm", "--n", "20", "--order", "6"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "c0" and len(out) == 21
    assert float(out[1]) == make_norm(6, 20).w[0]
    p = tmp_path / "P.csv"
    assert cli.main(["dump-operator", "P", "--n", "21", "--out", str(p)]) == 0
    A = np.loadtxt(p, delimiter=",", skiprows=1)
    assert A.shape == (41, 21)
    assert cli.main(["dump-operator", "nope", "--n", "21"]) == 2


def test_console_entry_point(tmp_path):
    r = subprocess.run([sys.executable, "-m", "elastiq.cli", "run", "energy", "--n", "4"],
                       capture_output=True, text=True)
    assert r.returncode == 2
    assert r.stdout == "" and "n1_coarse" in r.stderr
