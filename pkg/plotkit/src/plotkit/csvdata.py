"""Strict reader for cp-spectra sweep CSVs.

plotkit never recomputes physics; it consumes the fixed column schemas
below and refuses anything that deviates: wrong header, zero data rows,
or short rows.  Leading ``#`` comment lines (the config-hash echo) are
skipped.
"""

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List

SCHEMAS = {
    "profile": ["detuning_rad_s", "omega_rad_s", "gamma_per_s",
                "gamma_over_gamma0", "shift_res_rad_s", "flags"],
    "velocity": ["v_m_s", "v_over_c", "gamma_per_s", "gamma_ratio_to_static",
                 "gamma_minus_static_per_s", "shift_res_rad_s", "flags"],
    "compare": ["z_m", "omega_rad_s", "gamma_double_per_s",
                "gamma_single_per_s", "ratio", "flags"],
}


class SchemaError(Exception):
    pass


@dataclass(frozen=True)
class SweepData:
    """Columns of one validated CSV, numeric columns as float lists."""

    kind: str
    columns: Dict[str, List]
    path: Path

    def __getitem__(self, name):
        return self.columns[name]


def read_csv(path, kind: str) -> SweepData:
    path = Path(path)
    header = SCHEMAS[kind]
    try:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            lines = [line for line in fh if not line.startswith("#")]
    except OSError as exc:
        raise SchemaError(f"{path}: cannot read: {exc}") from exc

    rows = list(csv.reader(lines))
    if not rows or rows[0] != header:
        got = ",".join(rows[0]) if rows else "(empty file)"
        raise SchemaError(
            f"{path}: header does not match the {kind} schema\n"
            f"  expected: {','.join(header)}\n  got:      {got}")
    if len(rows) < 2:
        raise SchemaError(f"{path}: no data rows")

    columns = {name: [] for name in header}
    for n, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise SchemaError(f"{path}: row {n} has {len(row)} fields, "
                              f"expected {len(header)}")
        for name, field in zip(header, row):
            if name == "flags":
                columns[name].append(field)
            else:
                try:
                    columns[name].append(float(field))
                except ValueError as exc:
                    raise SchemaError(
                        f"{path}: row {n}, column {name}: "
                        f"not a number: {field!r}") from exc
    return SweepData(kind=kind, columns=columns, path=path)


def drop_error_rows(data: SweepData) -> SweepData:
    """Rows marked error:* carry NaN values; strip them for plotting."""
    keep = [i for i, f in enumerate(data["flags"]) if not f.startswith("error:")]
    columns = {name: [vals[i] for i in keep] for name, vals in data.columns.items()}
    return SweepData(kind=data.kind, columns=columns, path=data.path)
