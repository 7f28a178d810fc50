"""Physical constants, CODATA 2018, SI units.

Every other module obtains hbar, eps0, mu0 and c from here; frequencies
are angular (rad/s) throughout the package, never Hz.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    """Fixed table of the constants used by the rate/shift formulas."""

    hbar: float  # J*s
    eps0: float  # F/m
    mu0: float   # N/A^2
    c: float     # m/s


_CODATA_2018 = PhysicalConstants(
    hbar=1.054571817e-34,
    eps0=8.8541878128e-12,
    mu0=1.25663706212e-6,
    c=2.99792458e8,
)


def constants() -> PhysicalConstants:
    """Return the CODATA 2018 constant table (pure, deterministic)."""
    return _CODATA_2018
