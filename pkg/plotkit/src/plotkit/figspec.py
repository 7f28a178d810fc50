"""Figure specification files: flat ``section.key = value`` lines.

Example::

    figure.kind = profile
    figure.out = profile.png
    axes.y_scale = log
    input.csv_1 = static.csv
    input.label_1 = v = 0
    input.csv_2 = broadened.csv

Inputs are numbered from 1; labels default to the CSV file stem.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple

KINDS = ("profile", "velocity", "compare")
_SCALES = ("linear", "log")


class FigSpecError(Exception):
    pass


@dataclass(frozen=True)
class FigureSpec:
    kind: str
    out_path: Path
    inputs: List[Tuple[Path, str]]   # (csv path, label)
    x_scale: str = "linear"
    y_scale: str = "linear"


def _entries(text: str):
    entries = {}
    for idx, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise FigSpecError(f"line {idx}: expected 'section.key = value'")
        key, value = (part.strip() for part in stripped.split("=", 1))
        if key in entries:
            raise FigSpecError(f"line {idx}: duplicate key {key!r}")
        entries[key] = value
    return entries


def parse_figspec(text: str, base_dir: Optional[Path] = None) -> FigureSpec:
    base = Path(base_dir) if base_dir else Path(".")
    entries = _entries(text)

    kind = entries.pop("figure.kind", None)
    if kind not in KINDS:
        raise FigSpecError(f"figure.kind must be one of {', '.join(KINDS)}, got {kind!r}")
    out = entries.pop("figure.out", None)
    if not out:
        raise FigSpecError("missing figure.out")

    x_scale = entries.pop("axes.x_scale", "linear")
    y_scale = entries.pop("axes.y_scale", "linear")
    for name, scale in (("axes.x_scale", x_scale), ("axes.y_scale", y_scale)):
        if scale not in _SCALES:
            raise FigSpecError(f"{name} must be linear or log, got {scale!r}")

    inputs = []
    index = 1
    while f"input.csv_{index}" in entries:
        raw = entries.pop(f"input.csv_{index}")
        path = base / raw
        label = entries.pop(f"input.label_{index}", Path(raw).stem)
        inputs.append((path, label))
        index += 1
    if not inputs:
        raise FigSpecError("no inputs: give input.csv_1, input.csv_2, ...")
    if entries:
        unknown = ", ".join(sorted(entries))
        raise FigSpecError(f"unknown keys: {unknown}")

    return FigureSpec(kind=kind, out_path=base / out, inputs=inputs,
                      x_scale=x_scale, y_scale=y_scale)


def load_figspec(path) -> FigureSpec:
    path = Path(path)
    return parse_figspec(path.read_text(encoding="utf-8"), base_dir=path.parent)
