"""Sweep orchestration and CSV persistence.

Three sweep kinds mirror the three figure families: a detuning scan of
the rate/shift profile, a velocity scan at the configured transition, and
a double-plate versus single-plate comparison over the profile at fixed
geometry.  Output is deterministic: fixed column schemas, 12 significant
digits, rows in ascending sweep-variable order, and the config hash
echoed on a leading comment line so every table is self-describing.
"""

import math
from dataclasses import dataclass
from typing import List

import numpy as np

from .config import ScenarioConfig
from .constants import constants
from .core import single_plate_coefficient
from .errors import CpSpectraError, NoSurfaceResonanceError
from .material import surface_resonance
from .spectroscopy import observables

CSV_SCHEMAS = {
    "detuning": ["detuning_rad_s", "omega_rad_s", "gamma_per_s",
                 "gamma_over_gamma0", "shift_res_rad_s", "flags"],
    "velocity": ["v_m_s", "v_over_c", "gamma_per_s", "gamma_ratio_to_static",
                 "gamma_minus_static_per_s", "shift_res_rad_s", "flags"],
    "plate-compare": ["z_m", "omega_rad_s", "gamma_double_per_s",
                      "gamma_single_per_s", "ratio", "flags"],
}


@dataclass(frozen=True)
class SweepTable:
    kind: str
    header: List[str]
    rows: List[List[str]]
    config_sha256: str


def _fmt(x: float) -> str:
    return f"{x:.11e}"


def _flag_token(flags) -> str:
    return ";".join(sorted(flags))


def _grid(cfg: ScenarioConfig):
    if cfg.sweep_log_scale:
        return np.geomspace(cfg.sweep_min, cfg.sweep_max, cfg.sweep_points)
    return np.linspace(cfg.sweep_min, cfg.sweep_max, cfg.sweep_points)


def run_sweep(cfg: ScenarioConfig) -> SweepTable:
    builder = {"detuning": _detuning_rows,
               "velocity": _velocity_rows,
               "plate-compare": _plate_compare_rows}[cfg.sweep_kind]
    rows = builder(cfg)
    return SweepTable(kind=cfg.sweep_kind, header=CSV_SCHEMAS[cfg.sweep_kind],
                      rows=rows, config_sha256=cfg.text_sha256)


def _error_row(n_numeric: int, exc: Exception) -> List[str]:
    return [_fmt(math.nan)] * n_numeric + [f"error:{type(exc).__name__}"]


def _grid_center(cfg: ScenarioConfig) -> float:
    """Detuning grids are centered on the {+} plate surface mode; a plate
    with no surface mode falls back to the configured transition."""
    try:
        return surface_resonance(cfg.material_plus)
    except NoSurfaceResonanceError:
        return cfg.omega_mn


def _detuning_rows(cfg):
    omega_res = _grid_center(cfg)
    setup = cfg.cavity_setup()
    rows = []
    for delta in _grid(cfg):
        omega = omega_res + delta
        try:
            res = observables(setup, cfg.transition(omega_tilde=omega),
                              cfg.quadrature)
            rows.append([_fmt(delta), _fmt(omega), _fmt(res.gamma_induced),
                         _fmt(res.enhancement), _fmt(res.shift_res),
                         _flag_token(res.flags)])
        except CpSpectraError as exc:
            rows.append([_fmt(delta), _fmt(omega)] + _error_row(3, exc))
    return rows


def _velocity_rows(cfg):
    c_light = constants().c
    static = observables(cfg.cavity_setup(v=0.0), cfg.transition(),
                         cfg.quadrature)
    rows = []
    for v in _grid(cfg):
        try:
            res = observables(cfg.cavity_setup(v=float(v)), cfg.transition(),
                              cfg.quadrature)
            if res.gamma_induced == static.gamma_induced:
                ratio = 1.0
            elif static.gamma_induced != 0.0:
                ratio = res.gamma_induced / static.gamma_induced
            else:
                ratio = math.nan
            rows.append([_fmt(v), _fmt(v / c_light), _fmt(res.gamma_induced),
                         _fmt(ratio),
                         _fmt(res.gamma_induced - static.gamma_induced),
                         _fmt(res.shift_res), _flag_token(res.flags)])
        except CpSpectraError as exc:
            rows.append([_fmt(v), _fmt(v / c_light)] + _error_row(4, exc))
    return rows


def _plate_compare_rows(cfg):
    """Static double-plate (separation L = 2z) against a single plate at
    distance z, over the same detuning grid as the profile sweep."""
    omega_res = _grid_center(cfg)
    z = cfg.L / 2.0
    setup = cfg.cavity_setup(v=0.0)
    rows = []
    for delta in _grid(cfg):
        omega = omega_res + delta
        try:
            tr = cfg.transition(omega_tilde=omega)
            double = observables(setup, tr, cfg.quadrature)
            single = single_plate_coefficient(z, cfg.material_plus, tr,
                                              v=0.0, q=cfg.quadrature)
            ratio = (double.gamma_induced / single.gamma
                     if single.gamma != 0.0 else math.nan)
            rows.append([_fmt(z), _fmt(omega), _fmt(double.gamma_induced),
                         _fmt(single.gamma), _fmt(ratio),
                         _flag_token(double.flags | single.flags)])
        except CpSpectraError as exc:
            rows.append([_fmt(z), _fmt(omega)] + _error_row(3, exc))
    return rows


def write_csv(table: SweepTable, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"# config_sha256={table.config_sha256}\n")
        fh.write(",".join(table.header) + "\n")
        for row in table.rows:
            fh.write(",".join(row) + "\n")
