"""Cross-oracle invariant suite behind ``cp-spectra validate``.

Each check compares an implementation path against an independent oracle
(closed form, summed series, brute-force rule, or a second derivation
route) and reports the measured deviation against a fixed tolerance.
Randomized draws use a fixed seed, so the suite is deterministic.
"""

import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from . import core
from .angular import DipoleSpec, contract, matrix_A, matrix_B
from .material import MaterialParams, reflection_p, sapphire, surface_resonance, vacuum
from .quadrature import QuadratureSpec, integrate_periodic, integrate_semi_infinite
from .spectroscopy import free_space_rate

_SEED = 20260810


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    measured: float
    tolerance: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  ({self.detail})" if self.detail else ""
        return (f"{status}  {self.name}: measured {self.measured:.3e} "
                f"vs tolerance {self.tolerance:.3e}{extra}")


def _rel(a, b) -> float:
    scale = max(abs(a), abs(b), 1e-300)
    return abs(a - b) / scale


def _draw_material(rng) -> MaterialParams:
    omega_t = rng.uniform(0.6e14, 1.5e14)
    return MaterialParams(eta=rng.uniform(1.5, 4.0),
                          omega_T=omega_t,
                          omega_P=rng.uniform(0.8, 1.6) * omega_t,
                          gamma=rng.uniform(0.01, 0.05) * omega_t)


def _draw_dipole(rng, index) -> DipoleSpec:
    if index % 2 == 0:
        return DipoleSpec.isotropic(5.85e-29)
    vec = rng.normal(0.0, 1.0, size=3) * 5e-29
    return DipoleSpec.from_vector(*vec)


def _check_quadrature_radial(q) -> List[CheckResult]:
    out = []
    got = integrate_semi_infinite(lambda u: u * u * math.exp(-u), q).value.real
    out.append(CheckResult("quadrature_gamma3", _rel(got, 2.0) <= 1e-8,
                           _rel(got, 2.0), 1e-8, "integral of u^2 e^-u = 2"))
    # geometric-series oracle: integral of e^-u / (1 - 0.5 e^-2u)
    oracle = sum(0.5 ** j / (2 * j + 1) for j in range(1000))
    got = integrate_semi_infinite(lambda u: math.exp(-u) / (1.0 - 0.5 * math.exp(-2 * u)), q).value.real
    out.append(CheckResult("quadrature_geometric_series", _rel(got, oracle) <= 1e-8,
                           _rel(got, oracle), 1e-8, "1000-term series oracle"))
    return out


def _check_quadrature_periodic(q) -> List[CheckResult]:
    out = []
    got = integrate_periodic(lambda p: np.cos(p) ** 2, q).value.real
    out.append(CheckResult("quadrature_cos2", _rel(got, math.pi) <= 1e-12,
                           _rel(got, math.pi), 1e-12))
    # 2*pi*I0(1) via the Bessel series sum_k (1/4)^k / (k!)^2
    oracle = 2.0 * math.pi * sum(0.25 ** k / math.factorial(k) ** 2 for k in range(30))
    got = integrate_periodic(lambda p: np.exp(np.cos(p)), q).value.real
    out.append(CheckResult("quadrature_exp_cos", _rel(got, oracle) <= 1e-9,
                           _rel(got, oracle), 1e-9, "Bessel series oracle"))
    return out


def _check_angular(rng) -> List[CheckResult]:
    out = []
    worst_trace = 0.0
    worst_closed = 0.0
    for _ in range(100):
        phi = rng.uniform(0.0, 2.0 * math.pi)
        a, b = matrix_A(phi), matrix_B(phi)
        worst_trace = max(worst_trace,
                          abs(np.trace(a.entries)),
                          abs(np.trace(b.entries) - 2.0))
        d = DipoleSpec.from_vector(*rng.normal(0.0, 1.0, size=3))
        dx, dy, dz = d.vector
        proj = dx * math.cos(phi) + dy * math.sin(phi)
        worst_closed = max(
            worst_closed,
            abs(contract(d, a).real - (dz * dz - proj * proj)),
            abs(contract(d, b).real - (proj * proj + dz * dz)),
            abs(contract(d, b).real - contract(d, b.transposed()).real))
    out.append(CheckResult("trace_identities", worst_trace <= 1e-14,
                           worst_trace, 1e-14, "tr A = 0, tr B = 2"))
    out.append(CheckResult("contraction_closed_forms", worst_closed <= 1e-13,
                           worst_closed, 1e-13, "100 random (d, phi)"))
    return out


def _check_gamma0() -> CheckResult:
    got = free_space_rate(1.544e14, DipoleSpec.isotropic(5.85e-29))
    dev = _rel(got, 5.31e4)
    return CheckResult("free_space_rate_cs", dev <= 1e-2, dev, 1e-2,
                       f"got {got:.4e} 1/s")


def _check_surface_resonance() -> CheckResult:
    mat = sapphire()
    closed = surface_resonance(mat)
    grid = np.arange(0.5, 3.0, 1e-4) * mat.omega_T
    scan = grid[np.argmax(np.abs(reflection_p(mat, grid)))]
    dev = _rel(closed, scan)
    return CheckResult("surface_resonance_scan", dev <= 5e-3, dev, 5e-3,
                       f"closed {closed:.5e}, scan {scan:.5e}")


def _check_heaviside(q) -> CheckResult:
    setup = core.CavitySetup(L=1e-6, v=0.0, material_plus=sapphire(),
                             material_minus=sapphire())
    tr = core.Transition(omega_mn=-1e14, dipole=DipoleSpec.isotropic(5.85e-29))
    coeff = core.resonant_coefficient(setup, tr, q)
    dev = abs(coeff.value)
    return CheckResult("heaviside_gate", dev == 0.0 and not coeff.flags,
                       dev, 0.0, "omega_tilde < 0 gives exactly zero")


def _check_single_plate_closed_form(q) -> CheckResult:
    """z-dipole at v=0: the radial and azimuth integrals are elementary,
    C = -i d_z^2 r_p(wt) / (16 pi eps0 hbar z^3)."""
    mat = sapphire()
    z = 0.7e-6
    wt = 1.2 * surface_resonance(mat)
    d_z = 4e-29
    tr = core.Transition(omega_mn=wt, dipole=DipoleSpec.from_vector(0.0, 0.0, d_z))
    got = core.single_plate_coefficient(z, mat, tr, v=0.0, q=q).value
    k = core.constants()
    expected = -1j * d_z ** 2 * reflection_p(mat, wt) / (16.0 * math.pi * k.eps0 * k.hbar * z ** 3)
    dev = abs(got - expected) / abs(expected)
    return CheckResult("single_plate_closed_form", dev <= 1e-10, dev, 1e-10)


def _check_single_plate_limit(rng, q) -> CheckResult:
    worst = 0.0
    for i in range(20):
        mat = _draw_material(rng)
        z = rng.uniform(0.2e-6, 2.5e-6)
        wt = surface_resonance(mat) * rng.uniform(0.9, 1.1)
        v = 0.0 if i % 2 == 0 else rng.uniform(0.0, 0.05) * (2 * z) * mat.gamma
        tr = core.Transition(omega_mn=wt, dipole=_draw_dipole(rng, i))
        setup = core.CavitySetup(L=2.0 * z, v=v, material_plus=mat,
                                 material_minus=vacuum())
        double = core.resonant_coefficient(setup, tr, q).value
        single = core.single_plate_coefficient(z, mat, tr, v=v, q=q).value
        worst = max(worst, abs(double - single) / abs(single))
    return CheckResult("single_plate_limit", worst <= 1e-9, worst, 1e-9,
                       "20 draws, L = 2z, r- = 0, v >= 0")


def _check_static_equivalence(rng, q, scale: float = 1.0) -> CheckResult:
    """2 Re C at v=0 against the Green's-tensor static route; the scale
    knob exists so fault-injection tests can verify this check bites."""
    worst = 0.0
    for i in range(20):
        setup = core.CavitySetup(L=rng.uniform(0.2e-6, 5e-6), v=0.0,
                                 material_plus=_draw_material(rng),
                                 material_minus=_draw_material(rng))
        wt = surface_resonance(setup.material_plus) * rng.uniform(0.9, 1.1)
        tr = core.Transition(omega_mn=wt, dipole=_draw_dipole(rng, i))
        direct = scale * core.resonant_coefficient(setup, tr, q).gamma
        oracle = core.static_oracle(setup, tr, q)
        worst = max(worst, _rel(direct, oracle))
    return CheckResult("static_dual_path", worst <= 1e-6, worst, 1e-6,
                       "20 draws vs Green's-tensor route")


def _check_series_agreement(q) -> CheckResult:
    mat = sapphire()
    L = 1e-6
    wt = 1.2 * surface_resonance(mat)
    v = 1e-4 * L * mat.gamma
    setup = core.CavitySetup(L=L, v=v, material_plus=mat, material_minus=mat)
    tr = core.Transition(omega_mn=wt, dipole=DipoleSpec.isotropic(5.85e-29))
    direct = core.resonant_coefficient(setup, tr, q).value
    series = core.series_coefficient(setup, tr, j_max=30, l_max=2, q=q).value
    dev = abs(direct - series) / abs(direct)
    return CheckResult("series_resummation", dev <= 1e-4, dev, 1e-4,
                       "j_max 30, l_max 2, detuned, small v")


def _check_plate_swap(q) -> CheckResult:
    mat_a = sapphire()
    mat_b = MaterialParams(eta=3.2, omega_T=0.9e14, omega_P=1.1e14, gamma=2.5e12)
    tr = core.Transition(omega_mn=1.5e14, dipole=DipoleSpec.isotropic(5.85e-29))
    L, v = 1e-6, 5e3
    one = core.resonant_coefficient(core.CavitySetup(L, v, mat_a, mat_b), tr, q).value
    two = core.resonant_coefficient(core.CavitySetup(L, v, mat_b, mat_a), tr, q).value
    dev = abs(one - two) / abs(one)
    return CheckResult("plate_swap_symmetry", dev <= 1e-10, dev, 1e-10,
                       "isotropic dipole, v > 0")


def _check_isotropic_a_nullity(q) -> CheckResult:
    mat = sapphire()
    setup = core.CavitySetup(L=1e-6, v=8e3, material_plus=mat, material_minus=mat)
    tr = core.Transition(omega_mn=1.544e14, dipole=DipoleSpec.isotropic(5.85e-29))
    full = core.resonant_coefficient(setup, tr, q).value
    no_a = core.resonant_coefficient(setup, tr, q, _include_a_term=False).value
    dev = abs(full - no_a) / abs(full)
    return CheckResult("isotropic_a_nullity", dev <= 1e-12, dev, 1e-12,
                       "trace(A) = 0 removes the cavity cross term")


def _check_distance_law(q) -> CheckResult:
    mat = sapphire()
    wt = 1.544e14
    tr = core.Transition(omega_mn=wt, dipole=DipoleSpec.isotropic(5.85e-29))
    zs = np.geomspace(0.25e-6, 4e-6, 7)
    gammas = [core.single_plate_coefficient(z, mat, tr, v=0.0, q=q).gamma
              for z in zs]
    slope = np.polyfit(np.log(zs), np.log(gammas), 1)[0]
    dev = abs(slope + 3.0)
    return CheckResult("distance_cubed_law", dev <= 0.01, dev, 0.01,
                       f"log-log slope {slope:.5f}")


def run_validation(q: Optional[QuadratureSpec] = None,
                   seed: int = _SEED) -> List[CheckResult]:
    q = q or QuadratureSpec()
    rng = np.random.default_rng(seed)
    results = []
    results += _check_quadrature_radial(q)
    results += _check_quadrature_periodic(q)
    results += _check_angular(rng)
    results.append(_check_gamma0())
    results.append(_check_surface_resonance())
    results.append(_check_heaviside(q))
    results.append(_check_single_plate_closed_form(q))
    results.append(_check_single_plate_limit(rng, q))
    results.append(_check_static_equivalence(rng, q))
    results.append(_check_series_agreement(q))
    results.append(_check_plate_swap(q))
    results.append(_check_isotropic_a_nullity(q))
    results.append(_check_distance_law(q))
    return results
