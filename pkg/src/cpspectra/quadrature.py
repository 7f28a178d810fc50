"""Error-controlled integration on the two axes of the rate integrals.

The radial wavevector axis is handled after the substitution u = k*L, so
the integrand peak (from u^2 e^{-u}) sits near u = 1..2 regardless of the
plate separation; the cutoff u_max bounds the neglected exponential tail.
The azimuth is periodic and smooth, so an equispaced trapezoidal rule is
spectrally accurate and is refined by node doubling.

Integrands may return complex scalars or complex vectors (one value per
independent component); vector integrands share one adaptive subdivision.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad_vec

from .errors import QuadratureError

# hard cap on the periodic rule refinement; a smooth periodic integrand
# that has not converged by here will not converge at all
_MAX_PERIODIC_NODES = 1 << 16


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and cutoffs shared by all integrals.

    rel_tol          target relative accuracy of each 1-D integral
    abs_tol          floor for the absolute tolerance; the working
                     absolute tolerance is scaled to the integrand
                     magnitude sampled at u = 1 (see integrate_semi_infinite)
    max_subdivisions adaptive-panel budget for the radial axis
    k_cutoff_factor  u_max: the radial integral runs over (0, u_max]
    phi_nodes        starting node count of the periodic rule (even)
    """

    rel_tol: float = 1e-8
    abs_tol: float = 1e-300
    max_subdivisions: int = 200
    k_cutoff_factor: float = 60.0
    phi_nodes: int = 64

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be > 0")
        if not self.abs_tol >= 0:
            raise ValueError("abs_tol must be >= 0")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")
        if not self.k_cutoff_factor >= 20.0:
            raise ValueError("k_cutoff_factor must be >= 20 (tail bound)")
        if self.phi_nodes < 4 or self.phi_nodes % 2:
            raise ValueError("phi_nodes must be even and >= 4")


@dataclass(frozen=True)
class IntegrationResult:
    value: object   # complex scalar or complex ndarray
    error: float    # estimated absolute error (max-norm for vectors)


def _norm(x) -> float:
    return float(np.max(np.abs(x)))


def integrate_semi_infinite(f, spec: QuadratureSpec = QuadratureSpec()) -> IntegrationResult:
    """Integrate f(u) over (0, u_max] with an adaptive Gauss-Kronrod rule.

    f must accept a float u and return a complex scalar or complex vector;
    it must be continuous on (0, u_max] and integrable at 0.  Raises
    QuadratureError (carrying the best estimate) when the subdivision
    budget is exhausted before the tolerances are met.
    """
    u_max = spec.k_cutoff_factor
    # absolute tolerance scaled to the integrand near its natural peak,
    # so results spanning many decades are all resolved relatively
    scale = _norm(np.asarray(f(1.0)))
    eps_abs = max(spec.abs_tol, spec.rel_tol * scale * 1e-3)
    value, error, info = quad_vec(
        lambda u: np.asarray(f(u), dtype=complex),
        0.0, u_max,
        epsabs=eps_abs, epsrel=spec.rel_tol,
        limit=spec.max_subdivisions, norm="max", full_output=True,
    )
    if info.status != 0:
        raise QuadratureError(
            f"semi-infinite integral did not converge "
            f"(error {error:.3e} after {info.intervals.shape[0]} panels)",
            best_estimate=value, error=float(error))
    if value.ndim == 0:
        value = complex(value)
    return IntegrationResult(value=value, error=float(error))


def integrate_periodic(g, spec: QuadratureSpec = QuadratureSpec()) -> IntegrationResult:
    """Integrate g(phi) over one full period [0, 2*pi).

    g must accept an ndarray of angles and return the integrand values
    with the node axis leading (extra trailing axes are allowed and are
    integrated componentwise).  Nodes are doubled until two successive
    trapezoidal values agree to rel_tol; for smooth periodic integrands
    the rule converges spectrally.
    """
    n = spec.phi_nodes
    scale = 0.0

    def trap(nodes):
        nonlocal scale
        phi = 2.0 * np.pi * np.arange(nodes) / nodes
        vals = np.asarray(g(phi), dtype=complex)
        if vals.shape[0] != nodes:
            raise ValueError("periodic integrand must return one value per node")
        scale = max(scale, _norm(vals))
        return 2.0 * np.pi * vals.mean(axis=0)

    prev = trap(n)
    while True:
        n *= 2
        cur = trap(n)
        err = _norm(cur - prev)
        # the roundoff floor is set by the integrand magnitude: values that
        # cancel to machine noise (odd moments) must still converge
        floor = max(spec.abs_tol, 2.0 * np.pi * 1e-14 * scale, 1e-300)
        if err <= spec.rel_tol * _norm(cur) + floor:
            if np.ndim(cur) == 0:
                cur = complex(cur)
            return IntegrationResult(value=cur, error=err)
        if n >= _MAX_PERIODIC_NODES:
            raise QuadratureError(
                f"periodic integral did not converge by {n} nodes "
                f"(error {err:.3e})",
                best_estimate=cur, error=err)
        prev = cur
