"""Velocity-dependent Casimir-Polder spectroscopy of an atom moving
between two dielectric plates, in the non-retarded limit."""

from .angular import DipoleSpec, DirectionMatrix, contract, matrix_A, matrix_B
from .constants import PhysicalConstants, constants
from .core import (
    FLAG_NEGATIVE_FREQUENCY_NODES,
    FLAG_RETARDATION,
    FLAG_SERIES_DIVERGENT,
    FLAG_VELOCITY_CONSTRAINT,
    CavitySetup,
    ResonantCoefficient,
    Transition,
    resonant_coefficient,
    series_coefficient,
    single_plate_coefficient,
    static_oracle,
)
from .errors import (
    ComputationError,
    CpSpectraError,
    NoSurfaceResonanceError,
    PoleProximityError,
    QuadratureError,
    SeriesConvergenceError,
)
from .material import (
    MaterialParams,
    permittivity,
    reflection_p,
    sapphire,
    surface_resonance,
    vacuum,
)
from .quadrature import (
    IntegrationResult,
    QuadratureSpec,
    integrate_periodic,
    integrate_semi_infinite,
)
from .spectroscopy import SpectralResult, free_space_rate, observables, shifted_frequency

__version__ = "0.1.0"
