import numpy as np
import pytest

from cpspectra.quadrature import QuadratureSpec
from cpspectra.validation import _check_static_equivalence, run_validation


@pytest.fixture(scope="module")
def results():
    return run_validation()


def test_all_checks_pass(results):
    failed = [r.name for r in results if not r.passed]
    assert not failed, f"failed checks: {failed}"


def test_expected_checks_present(results):
    names = {r.name for r in results}
    for expected in ("quadrature_gamma3", "quadrature_geometric_series",
                     "quadrature_cos2", "quadrature_exp_cos",
                     "trace_identities", "contraction_closed_forms",
                     "free_space_rate_cs", "surface_resonance_scan",
                     "heaviside_gate", "single_plate_closed_form",
                     "single_plate_limit", "static_dual_path",
                     "series_resummation", "plate_swap_symmetry",
                     "isotropic_a_nullity", "distance_cubed_law"):
        assert expected in names


def test_report_lines_render(results):
    for r in results:
        line = r.line()
        assert line.startswith(("PASS", "FAIL"))
        assert r.name in line


def test_injected_prefactor_fault_is_detected():
    # a 1 percent perturbation of the direct-route result must trip the
    # static dual-path check
    rng = np.random.default_rng(123)
    check = _check_static_equivalence(rng, QuadratureSpec(), scale=1.01)
    assert not check.passed
