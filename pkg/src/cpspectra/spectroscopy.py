"""Physical observables assembled from resonant coefficients."""

import math
from dataclasses import dataclass
from typing import FrozenSet

from .angular import DipoleSpec
from .constants import constants
from .core import CavitySetup, Transition, resonant_coefficient
from .errors import NoSurfaceResonanceError
from .material import surface_resonance
from .quadrature import QuadratureSpec


@dataclass(frozen=True)
class SpectralResult:
    """Medium-induced rate and resonant shift of one transition, with the
    free-space rate as the enhancement baseline.

    detuning is measured from the surface-mode frequency of the {+} plate
    (NaN when that plate has no surface mode).
    """

    gamma_induced: float      # 1/s
    shift_res: float          # rad/s
    gamma_free: float         # 1/s
    enhancement: float
    detuning: float           # rad/s
    flags: FrozenSet[str]
    setup: CavitySetup
    transition: Transition


def free_space_rate(omega: float, d: DipoleSpec) -> float:
    """Einstein A coefficient omega^3 |d|^2 / (3 pi eps0 hbar c^3)."""
    if not omega > 0:
        raise ValueError(f"free-space rate requires omega > 0, got {omega}")
    k = constants()
    return omega ** 3 * d.magnitude ** 2 / (3.0 * math.pi * k.eps0 * k.hbar * k.c ** 3)


def observables(setup: CavitySetup, tr: Transition,
                q: QuadratureSpec = QuadratureSpec()) -> SpectralResult:
    """Evaluate rate, shift, baseline and detuning for one configuration."""
    coeff = resonant_coefficient(setup, tr, q)
    wt = tr.omega_tilde
    gamma_free = free_space_rate(abs(wt), tr.dipole) if wt != 0 else 0.0
    enhancement = coeff.gamma / gamma_free if gamma_free > 0 else 0.0
    try:
        detuning = wt - surface_resonance(setup.material_plus)
    except NoSurfaceResonanceError:
        detuning = math.nan
    return SpectralResult(
        gamma_induced=coeff.gamma,
        shift_res=coeff.shift_res,
        gamma_free=gamma_free,
        enhancement=enhancement,
        detuning=detuning,
        flags=coeff.flags,
        setup=setup,
        transition=tr,
    )


def shifted_frequency(omega_mn: float, shift_m: float, shift_n: float) -> float:
    """Shifted transition frequency omega_mn + shift_m - shift_n, for the
    optional fixed-point refinement of omega_tilde."""
    return omega_mn + shift_m - shift_n
