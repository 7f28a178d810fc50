"""Directionality matrices of the planar response and their dipole
contractions.

The two-plate response decomposes into an even cavity cross term carried
by A(phi) and single-interface terms carried by B(phi) and its transpose:

    A(phi) = [[-cos^2,    -cos*sin, 0],
              [-cos*sin,  -sin^2,   0],
              [0,          0,       1]]

    B(phi) = [[cos^2,     cos*sin, -i*cos],
              [cos*sin,   sin^2,   -i*sin],
              [i*cos,     i*sin,    1    ]]

A is real symmetric and traceless; B is Hermitian with trace 2.  For real
dipole vectors the contractions collapse to the closed forms

    d.A.d = -(dx*cos + dy*sin)^2 + dz^2
    d.B.d =  (dx*cos + dy*sin)^2 + dz^2  (= d.B^T.d)

and an isotropic dipole sees |d|^2/3 times the trace.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

# tolerance of the realness assertion in contract(): the imaginary parts
# of d.B.d cancel pairwise for real d, anything larger is a transcription bug
_IMAG_ATOL = 1e-30
_IMAG_RTOL = 1e-12


@dataclass(frozen=True)
class DipoleSpec:
    """Either a real dipole vector (C*m components) or an isotropic
    orientation-averaged magnitude."""

    vector: Optional[Tuple[float, float, float]]
    magnitude: float

    @classmethod
    def isotropic(cls, magnitude: float) -> "DipoleSpec":
        if magnitude < 0:
            raise ValueError("dipole magnitude must be >= 0")
        return cls(vector=None, magnitude=float(magnitude))

    @classmethod
    def from_vector(cls, dx: float, dy: float, dz: float) -> "DipoleSpec":
        v = (float(dx), float(dy), float(dz))
        return cls(vector=v, magnitude=float(np.sqrt(dx * dx + dy * dy + dz * dz)))

    @property
    def is_isotropic(self) -> bool:
        return self.vector is None


@dataclass(frozen=True)
class DirectionMatrix:
    """3x3 complex response matrix, tagged 'A', 'B' or 'BT'."""

    tag: str
    phi: float
    entries: np.ndarray

    def transposed(self) -> "DirectionMatrix":
        tag = {"B": "BT", "BT": "B", "A": "A"}[self.tag]
        return DirectionMatrix(tag=tag, phi=self.phi, entries=self.entries.T.copy())


def matrix_A(phi: float) -> DirectionMatrix:
    c, s = np.cos(phi), np.sin(phi)
    a = np.array([[-c * c, -c * s, 0.0],
                  [-c * s, -s * s, 0.0],
                  [0.0, 0.0, 1.0]], dtype=complex)
    return DirectionMatrix(tag="A", phi=float(phi), entries=a)


def matrix_B(phi: float) -> DirectionMatrix:
    c, s = np.cos(phi), np.sin(phi)
    b = np.array([[c * c, c * s, -1j * c],
                  [c * s, s * s, -1j * s],
                  [1j * c, 1j * s, 1.0]], dtype=complex)
    return DirectionMatrix(tag="B", phi=float(phi), entries=b)


def contract(d: DipoleSpec, m: DirectionMatrix) -> complex:
    """d . M . d for a vector dipole, |d|^2/3 * trace(M) for an isotropic
    one.  The result must be real for real dipoles; the residual imaginary
    part is asserted small rather than silently discarded."""
    if d.is_isotropic:
        value = d.magnitude ** 2 / 3.0 * np.trace(m.entries)
    else:
        vec = np.asarray(d.vector, dtype=float)
        value = vec @ m.entries @ vec
    value = complex(value)
    if abs(value.imag) > _IMAG_RTOL * abs(value.real) + _IMAG_ATOL:
        raise AssertionError(
            f"contraction with {m.tag}(phi={m.phi}) is not real: {value}")
    return value


def contraction_profiles(d: DipoleSpec, phi):
    """Vectorized closed-form contractions (cA, cB, cBT) on an array of
    azimuths.  This is the hot path of the rate integrals; equality with
    the explicit matrix route is pinned by tests."""
    phi = np.asarray(phi, dtype=float)
    if d.is_isotropic:
        iso_b = 2.0 * d.magnitude ** 2 / 3.0
        c_a = np.zeros_like(phi)
        c_b = np.full_like(phi, iso_b)
        return c_a, c_b, c_b
    dx, dy, dz = d.vector
    proj = dx * np.cos(phi) + dy * np.sin(phi)
    c_a = dz * dz - proj * proj
    c_b = proj * proj + dz * dz
    return c_a, c_b, c_b
