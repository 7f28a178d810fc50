import math

import numpy as np
import pytest

from cpspectra.config import parse_config
from cpspectra.sweep import CSV_SCHEMAS, run_sweep, write_csv

BASE = """\
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

VACUUM = BASE.replace("2.71", "1.0").replace("omega_P_rad_s = 1.296e14",
                                             "omega_P_rad_s = 0")


def test_detuning_sweep_rows():
    table = run_sweep(parse_config(BASE))
    assert table.header == CSV_SCHEMAS["detuning"]
    assert len(table.rows) == 3
    deltas = [float(r[0]) for r in table.rows]
    assert deltas == sorted(deltas)
    assert deltas[0] == -1e12 and deltas[-1] == 1e12
    for row in table.rows:
        assert len(row) == len(table.header)
        assert float(row[2]) > 0          # gamma
        assert float(row[3]) > 0          # enhancement


def test_velocity_sweep_static_row_ratio_is_one():
    text = BASE.replace("sweep.kind = detuning", "sweep.kind = velocity")
    text = text.replace("sweep.min = -1e12", "sweep.min = 0")
    text = text.replace("sweep.max = 1e12", "sweep.max = 2e5")
    table = run_sweep(parse_config(text))
    assert table.header == CSV_SCHEMAS["velocity"]
    first = table.rows[0]
    assert float(first[0]) == 0.0
    assert first[3] == "1.00000000000e+00"
    # rate falls with speed near resonance
    assert float(table.rows[-1][3]) < 1.0


def test_velocity_sweep_vacuum_self_ratio():
    text = VACUUM.replace("sweep.kind = detuning", "sweep.kind = velocity")
    text = text.replace("sweep.min = -1e12", "sweep.min = 0")
    text = text.replace("sweep.max = 1e12", "sweep.max = 1e5")
    table = run_sweep(parse_config(text))
    for row in table.rows:
        assert float(row[2]) == 0.0
        assert row[3] == "1.00000000000e+00"


def test_vacuum_detuning_sweep_all_rates_zero():
    table = run_sweep(parse_config(VACUUM))
    assert len(table.rows) == 3
    for row in table.rows:
        assert float(row[2]) == 0.0


def test_plate_compare_rows():
    text = BASE.replace("sweep.kind = detuning", "sweep.kind = plate-compare")
    cfg = parse_config(text)
    table = run_sweep(cfg)
    assert table.header == CSV_SCHEMAS["plate-compare"]
    for row in table.rows:
        assert float(row[0]) == cfg.L / 2.0
        assert float(row[2]) > 0 and float(row[3]) > 0
        assert math.isclose(float(row[4]), float(row[2]) / float(row[3]),
                            rel_tol=1e-9)


def test_csv_bit_identical_and_self_describing(tmp_path):
    cfg = parse_config(BASE)
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    write_csv(run_sweep(cfg), out1)
    write_csv(run_sweep(cfg), out2)
    b1, b2 = out1.read_bytes(), out2.read_bytes()
    assert b1 == b2
    text = b1.decode()
    assert text.startswith(f"# config_sha256={cfg.text_sha256}\n")
    assert text.splitlines()[1] == ",".join(CSV_SCHEMAS["detuning"])
    # 12 significant digits, scientific notation
    value = text.splitlines()[2].split(",")[2]
    assert "e" in value and len(value.split("e")[0].replace("-", "").replace(".", "")) == 12


def test_failed_rows_marked_not_dropped():
    text = BASE + "quadrature.rel_tol = 1e-13\nquadrature.max_subdivisions = 1\n"
    table = run_sweep(parse_config(text))
    assert len(table.rows) == 3
    for row in table.rows:
        assert row[-1].startswith("error:")
        assert math.isnan(float(row[2]))
