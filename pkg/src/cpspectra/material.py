"""Single-oscillator dielectric response and non-retarded p-polarized
reflection coefficients.

The permittivity model is

    eps(w) = eta * (1 - omega_P^2 / (w^2 - omega_T^2 + i*gamma*w))

with a dimensionless background factor eta absorbing all resonances other
than the modelled one.  In the non-retarded (quasi-static) limit the
p-polarized amplitude reflection at a vacuum/dielectric interface reduces
to r_p = (eps - 1)/(eps + 1), independent of the parallel wavevector.

All functions accept scalars or numpy arrays for the frequency argument
and are pure.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NoSurfaceResonanceError, PoleProximityError

# relative (to omega_T^2) closeness to the oscillator poles that counts
# as an invalid evaluation point
_POLE_RTOL = 1e-12
# |eps + 1| below this means the lossless surface-mode pole was hit
_SURFACE_POLE_ATOL = 1e-12


@dataclass(frozen=True)
class MaterialParams:
    """Drude-Lorentz oscillator parameters of one plate.

    eta      dimensionless background factor, >= 1
    omega_T  absorption (transverse) frequency, rad/s, > 0
    omega_P  plasma frequency, rad/s, >= 0 (0 switches the oscillator off)
    gamma    resonance width, rad/s, > 0
    """

    eta: float
    omega_T: float
    omega_P: float
    gamma: float

    def __post_init__(self):
        if not self.eta >= 1.0:
            raise ValueError(f"eta must be >= 1, got {self.eta}")
        if not self.omega_T > 0.0:
            raise ValueError(f"omega_T must be > 0, got {self.omega_T}")
        if not self.omega_P >= 0.0:
            raise ValueError(f"omega_P must be >= 0, got {self.omega_P}")
        if not self.gamma > 0.0:
            raise ValueError(f"gamma must be > 0, got {self.gamma}")


def sapphire() -> MaterialParams:
    """Single-resonance sapphire model (eta 2.71, omega_T 1.08e14 rad/s,
    omega_P = 1.2 omega_T, gamma = 0.02 omega_T)."""
    omega_t = 1.08e14
    return MaterialParams(eta=2.71, omega_T=omega_t,
                          omega_P=1.2 * omega_t, gamma=0.02 * omega_t)


def vacuum() -> MaterialParams:
    """Non-reflecting plate: eps identically 1 (oscillator off).

    omega_T and gamma are placeholders; they never enter when
    omega_P = 0.
    """
    return MaterialParams(eta=1.0, omega_T=1.0, omega_P=0.0, gamma=1.0)


def permittivity(m: MaterialParams, omega):
    """Complex relative permittivity at (possibly complex) frequency omega.

    Raises PoleProximityError when omega is too close to a root of
    w^2 - omega_T^2 + i*gamma*w.
    """
    w = np.asarray(omega, dtype=complex)
    denom = w * w - m.omega_T ** 2 + 1j * m.gamma * w
    if np.any(np.abs(denom) < _POLE_RTOL * m.omega_T ** 2):
        raise PoleProximityError(
            "permittivity evaluated at a pole of the oscillator denominator")
    eps = m.eta * (1.0 - m.omega_P ** 2 / denom)
    if np.isscalar(omega):
        return complex(eps)
    return eps


def reflection_p(m: MaterialParams, omega):
    """Non-retarded p-polarized reflection coefficient at real omega.

    r_p(w) = (eps(w) - 1)/(eps(w) + 1).  For w < 0 this expression equals
    conj(r_p(-w)) identically (all coefficients of the rational function
    are real), which is the causal Schwarz-reflection extension used for
    Doppler-shifted frequencies that go negative.
    """
    eps = permittivity(m, omega)
    denom = eps + 1.0
    if np.any(np.abs(denom) < _SURFACE_POLE_ATOL):
        raise PoleProximityError(
            "reflection coefficient evaluated at the lossless surface-mode pole")
    r = (eps - 1.0) / denom
    if np.isscalar(omega):
        return complex(r)
    return r


def surface_resonance(m: MaterialParams) -> float:
    """Frequency of the non-retarded surface mode, Re eps = -1 at
    vanishing width:

        omega_res = sqrt(omega_T^2 + eta*omega_P^2/(eta + 1))

    This is the detuning reference used throughout the package.  Raises
    NoSurfaceResonanceError when omega_P = 0.
    """
    if m.omega_P == 0.0:
        raise NoSurfaceResonanceError(
            "omega_P = 0: the oscillator is off, there is no surface mode")
    return float(np.sqrt(m.omega_T ** 2 + m.eta * m.omega_P ** 2 / (m.eta + 1.0)))
