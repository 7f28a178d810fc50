"""Scenario configuration: flat ``section.key = value`` text files.

One setting per line, ``#`` starts a comment, SI units are spelled out in
the key names.  Parsing validates everything it can and reports the full
list of problems (with line numbers) instead of stopping at the first.
"""

import hashlib
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .angular import DipoleSpec
from .core import CavitySetup, Transition
from .errors import CpSpectraError
from .material import MaterialParams
from .quadrature import QuadratureSpec

SWEEP_KINDS = ("detuning", "velocity", "plate-compare")

_REQUIRED_KEYS = (
    "atom.omega_mn_rad_s",
    "cavity.L_m",
    "cavity.v_m_s",
    "material_plus.eta",
    "material_plus.omega_T_rad_s",
    "material_plus.omega_P_rad_s",
    "material_plus.gamma_rad_s",
    "material_minus.eta",
    "material_minus.omega_T_rad_s",
    "material_minus.omega_P_rad_s",
    "material_minus.gamma_rad_s",
    "sweep.kind",
    "sweep.min",
    "sweep.max",
    "sweep.points",
)

_OPTIONAL_KEYS = (
    "atom.dipole_cm",
    "atom.dipole_vec_cm",
    "sweep.log_scale",
    "quadrature.rel_tol",
    "quadrature.abs_tol",
    "quadrature.max_subdivisions",
    "quadrature.k_cutoff_factor",
    "quadrature.phi_nodes",
)

_KNOWN_KEYS = frozenset(_REQUIRED_KEYS) | frozenset(_OPTIONAL_KEYS)

_TRUE_WORDS = {"true", "yes", "1", "on"}
_FALSE_WORDS = {"false", "no", "0", "off"}


class ConfigError(CpSpectraError):
    """All problems found in one parse, each tagged with its line number
    (0 for file-level problems such as missing keys)."""

    def __init__(self, problems: List[Tuple[int, str]]):
        self.problems = sorted(problems)
        lines = "\n".join(f"  line {n}: {msg}" if n else f"  {msg}"
                          for n, msg in self.problems)
        super().__init__(f"invalid configuration:\n{lines}")


@dataclass(frozen=True)
class ScenarioConfig:
    """Validated scenario: atom, cavity, plate materials and sweep plan."""

    omega_mn: float
    dipole: DipoleSpec
    L: float
    v: float
    material_plus: MaterialParams
    material_minus: MaterialParams
    sweep_kind: str
    sweep_min: float
    sweep_max: float
    sweep_points: int
    sweep_log_scale: bool
    quadrature: QuadratureSpec
    text_sha256: str
    raw: Dict[str, str] = field(default_factory=dict, repr=False)

    def cavity_setup(self, v: Optional[float] = None) -> CavitySetup:
        return CavitySetup(L=self.L, v=self.v if v is None else v,
                           material_plus=self.material_plus,
                           material_minus=self.material_minus)

    def transition(self, omega_tilde: Optional[float] = None) -> Transition:
        return Transition(omega_mn=self.omega_mn, dipole=self.dipole,
                          omega_tilde=omega_tilde)


def _tokenize(text: str):
    """Yield (line_number, key, value) for every assignment line; collect
    syntax problems."""
    problems = []
    seen: Dict[str, int] = {}
    entries: Dict[str, Tuple[int, str]] = {}
    for idx, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            problems.append((idx, f"expected 'section.key = value', got {stripped!r}"))
            continue
        key, value = (part.strip() for part in stripped.split("=", 1))
        if key not in _KNOWN_KEYS:
            problems.append((idx, f"unknown key {key!r}"))
            continue
        if key in seen:
            problems.append((idx, f"duplicate key {key!r} (first set on line {seen[key]})"))
            continue
        seen[key] = idx
        entries[key] = (idx, value)
    return entries, problems


def parse_config(text: str) -> ScenarioConfig:
    """Parse and validate; raises ConfigError carrying every problem."""
    entries, problems = _tokenize(text)

    for key in _REQUIRED_KEYS:
        if key not in entries:
            problems.append((0, f"missing required key {key!r}"))

    numbers: Dict[str, float] = {}

    def number(key):
        if key not in entries:
            return None
        line, raw = entries[key]
        try:
            numbers[key] = float(raw)
            return numbers[key]
        except ValueError:
            problems.append((line, f"{key}: non-numeric value {raw!r}"))
            return None

    def require(key, cond, message):
        value = numbers.get(key)
        if value is not None and not cond(value):
            problems.append((entries[key][0], f"{key}: {message} (got {value:g})"))

    omega_mn = number("atom.omega_mn_rad_s")
    length = number("cavity.L_m")
    speed = number("cavity.v_m_s")
    require("cavity.L_m", lambda x: x > 0, "plate separation must be > 0")
    require("cavity.v_m_s", lambda x: x >= 0, "speed must be >= 0")

    # dipole: exactly one of the isotropic magnitude or the vector triple
    dipole = None
    has_iso = "atom.dipole_cm" in entries
    has_vec = "atom.dipole_vec_cm" in entries
    if has_iso and has_vec:
        problems.append((entries["atom.dipole_vec_cm"][0],
                         "give either atom.dipole_cm or atom.dipole_vec_cm, not both"))
    elif not has_iso and not has_vec:
        problems.append((0, "missing required key 'atom.dipole_cm' or 'atom.dipole_vec_cm'"))
    elif has_iso:
        mag = number("atom.dipole_cm")
        if mag is not None:
            if mag >= 0:
                dipole = DipoleSpec.isotropic(mag)
            else:
                problems.append((entries["atom.dipole_cm"][0],
                                 "atom.dipole_cm: magnitude must be >= 0"))
    else:
        line, raw = entries["atom.dipole_vec_cm"]
        parts = [p.strip() for p in raw.split(",")]
        if len(parts) != 3:
            problems.append((line, "atom.dipole_vec_cm: expected three comma-separated components"))
        else:
            try:
                dipole = DipoleSpec.from_vector(*(float(p) for p in parts))
            except ValueError:
                problems.append((line, f"atom.dipole_vec_cm: non-numeric component in {raw!r}"))

    def build_material(section):
        keys = [f"{section}.eta", f"{section}.omega_T_rad_s",
                f"{section}.omega_P_rad_s", f"{section}.gamma_rad_s"]
        values = [number(k) for k in keys]
        if any(v is None for v in values):
            return None
        try:
            return MaterialParams(eta=values[0], omega_T=values[1],
                                  omega_P=values[2], gamma=values[3])
        except ValueError as exc:
            problems.append((entries[keys[0]][0], f"{section}: {exc}"))
            return None

    mat_plus = build_material("material_plus")
    mat_minus = build_material("material_minus")

    kind = None
    if "sweep.kind" in entries:
        line, raw = entries["sweep.kind"]
        if raw in SWEEP_KINDS:
            kind = raw
        else:
            problems.append((line, f"sweep.kind: must be one of {', '.join(SWEEP_KINDS)}"))
    lo = number("sweep.min")
    hi = number("sweep.max")
    if lo is not None and hi is not None and not lo < hi:
        problems.append((entries["sweep.min"][0], "sweep.min must be < sweep.max"))

    points = None
    if "sweep.points" in entries:
        line, raw = entries["sweep.points"]
        try:
            points = int(raw)
            if points < 2:
                problems.append((line, "sweep.points must be >= 2"))
                points = None
        except ValueError:
            problems.append((line, f"sweep.points: non-integer value {raw!r}"))

    log_scale = False
    if "sweep.log_scale" in entries:
        line, raw = entries["sweep.log_scale"]
        word = raw.lower()
        if word in _TRUE_WORDS:
            log_scale = True
        elif word not in _FALSE_WORDS:
            problems.append((line, f"sweep.log_scale: expected a boolean, got {raw!r}"))
    if log_scale and kind == "velocity" and lo is not None and lo <= 0:
        problems.append((entries["sweep.min"][0],
                         "sweep.min must be > 0 for a log-scale velocity sweep"))

    quad_kwargs = {}
    for key, name, conv in (
            ("quadrature.rel_tol", "rel_tol", float),
            ("quadrature.abs_tol", "abs_tol", float),
            ("quadrature.max_subdivisions", "max_subdivisions", int),
            ("quadrature.k_cutoff_factor", "k_cutoff_factor", float),
            ("quadrature.phi_nodes", "phi_nodes", int)):
        if key in entries:
            line, raw = entries[key]
            try:
                quad_kwargs[name] = conv(raw)
            except ValueError:
                problems.append((line, f"{key}: bad value {raw!r}"))
    try:
        quadrature = QuadratureSpec(**quad_kwargs)
    except ValueError as exc:
        problems.append((0, f"quadrature: {exc}"))
        quadrature = QuadratureSpec()

    if problems:
        raise ConfigError(problems)

    return ScenarioConfig(
        omega_mn=omega_mn,
        dipole=dipole,
        L=length,
        v=speed,
        material_plus=mat_plus,
        material_minus=mat_minus,
        sweep_kind=kind,
        sweep_min=lo,
        sweep_max=hi,
        sweep_points=points,
        sweep_log_scale=log_scale,
        quadrature=quadrature,
        text_sha256=hashlib.sha256(text.encode("utf-8")).hexdigest(),
        raw={k: v for k, (_, v) in entries.items()},
    )


def load_config(path) -> ScenarioConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())
