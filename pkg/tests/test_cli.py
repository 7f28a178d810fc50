import pytest

from cpspectra import cli
from cpspectra.validation import CheckResult

CONFIG = """\
atom.omega_mn_rad_s = 1.544e14
atom.dipole_cm = 5.85e-29
cavity.L_m = 1e-6
cavity.v_m_s = 0
material_plus.eta = 2.71
material_plus.omega_T_rad_s = 1.08e14
material_plus.omega_P_rad_s = 1.296e14
material_plus.gamma_rad_s = 2.16e12
material_minus.eta = 2.71
material_minus.omega_T_rad_s = 1.08e14
material_minus.omega_P_rad_s = 1.296e14
material_minus.gamma_rad_s = 2.16e12
sweep.kind = detuning
sweep.min = -1e12
sweep.max = 1e12
sweep.points = 3
"""


@pytest.fixture
def config_path(tmp_path):
    path = tmp_path / "scenario.cfg"
    path.write_text(CONFIG)
    return path


def test_sweep_command(config_path, tmp_path, capsys):
    out = tmp_path / "table.csv"
    assert cli.main(["sweep", "--config", str(config_path), "--out", str(out)]) == 0
    assert out.exists()
    assert "3 rows" in capsys.readouterr().out
    lines = out.read_text().splitlines()
    assert lines[0].startswith("# config_sha256=")
    assert len(lines) == 2 + 3


def test_point_command(config_path, capsys):
    assert cli.main(["point", "--config", str(config_path)]) == 0
    out = capsys.readouterr().out
    assert "gamma_induced" in out and "enhancement" in out


def test_bad_config_exits_2(tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("cavity.L_m = -1\n")
    with pytest.raises(SystemExit) as info:
        cli.main(["sweep", "--config", str(bad), "--out", str(tmp_path / "x.csv")])
    assert info.value.code == 2


def test_missing_config_exits_2(tmp_path):
    with pytest.raises(SystemExit) as info:
        cli.main(["point", "--config", str(tmp_path / "nope.cfg")])
    assert info.value.code == 2


def test_validate_exit_codes(monkeypatch, capsys):
    good = [CheckResult("fake", True, 0.0, 1.0)]
    monkeypatch.setattr(cli, "run_validation", lambda: good)
    assert cli.main(["validate"]) == 0
    assert "1/1 checks passed" in capsys.readouterr().out

    bad = [CheckResult("fake", False, 2.0, 1.0)]
    monkeypatch.setattr(cli, "run_validation", lambda: bad)
    assert cli.main(["validate"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "0/1 checks passed" in out
