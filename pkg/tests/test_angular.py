import numpy as np
import pytest
from numpy.testing import assert_allclose

from cpspectra import DipoleSpec, contract, matrix_A, matrix_B
from cpspectra.angular import DirectionMatrix, contraction_profiles


def test_matrix_a_at_zero():
    a = matrix_A(0.0).entries
    assert_allclose(a, np.array([[-1, 0, 0], [0, 0, 0], [0, 0, 1]], dtype=complex),
                    atol=1e-15)


def test_matrix_a_trace_and_offdiag():
    for phi in np.linspace(0, 2 * np.pi, 17):
        assert abs(np.trace(matrix_A(phi).entries)) < 1e-15
    assert_allclose(matrix_A(np.pi / 4).entries[0, 1], -0.5, rtol=1e-14)


def test_matrix_b_at_half_pi():
    b = matrix_B(np.pi / 2).entries
    expected = np.array([[0, 0, 0], [0, 1, -1j], [0, 1j, 1]], dtype=complex)
    assert_allclose(b, expected, atol=1e-15)


def test_matrix_b_trace_and_antisymmetric_part():
    for phi in np.linspace(0, 2 * np.pi, 17):
        b = matrix_B(phi).entries
        assert_allclose(np.trace(b), 2.0 + 0j, atol=1e-14)
        anti = b - b.T
        c, s = np.cos(phi), np.sin(phi)
        expected = np.array([[0, 0, -2j * c], [0, 0, -2j * s],
                             [2j * c, 2j * s, 0]])
        assert_allclose(anti, expected, atol=1e-14)
        # Hermitian
        assert_allclose(b, b.conj().T, atol=1e-15)


def test_contract_z_dipole_with_b():
    d = DipoleSpec.from_vector(0.0, 0.0, 3e-29)
    for phi in np.linspace(0, 2 * np.pi, 11):
        assert_allclose(contract(d, matrix_B(phi)).real, (3e-29) ** 2, rtol=1e-14)


def test_contract_isotropic_with_a_vanishes():
    # trace(A) is 1 - cos^2 - sin^2, zero up to one ulp
    d = DipoleSpec.isotropic(5.85e-29)
    for phi in np.linspace(0, 2 * np.pi, 11):
        assert abs(contract(d, matrix_A(phi))) < 1e-15 * d.magnitude ** 2


def test_contract_x_dipole_with_b():
    d = DipoleSpec.from_vector(1.0, 0.0, 0.0)
    for phi in np.linspace(0, 2 * np.pi, 11):
        assert_allclose(contract(d, matrix_B(phi)).real, np.cos(phi) ** 2,
                        atol=1e-14)


def test_closed_forms_match_matrix_route():
    rng = np.random.default_rng(11)
    for _ in range(100):
        phi = rng.uniform(0, 2 * np.pi)
        d = DipoleSpec.from_vector(*rng.normal(size=3))
        dx, dy, dz = d.vector
        proj = dx * np.cos(phi) + dy * np.sin(phi)
        assert_allclose(contract(d, matrix_A(phi)).real, dz * dz - proj * proj,
                        atol=1e-14)
        assert_allclose(contract(d, matrix_B(phi)).real, proj * proj + dz * dz,
                        atol=1e-14)
        # transpose invariance for real dipoles
        b = matrix_B(phi)
        assert_allclose(contract(d, b).real, contract(d, b.transposed()).real,
                        rtol=1e-14)
        c_a, c_b, c_bt = contraction_profiles(d, np.array([phi]))
        assert_allclose(c_a[0], contract(d, matrix_A(phi)).real, atol=1e-14)
        assert_allclose(c_b[0], contract(d, matrix_B(phi)).real, atol=1e-14)
        assert c_b[0] == c_bt[0]


def test_isotropic_average_identity():
    # (1/2pi) Int contract(d, B) dphi = |d_perp|^2/2 + dz^2
    rng = np.random.default_rng(13)
    phi = 2 * np.pi * np.arange(512) / 512
    for _ in range(10):
        d = DipoleSpec.from_vector(*rng.normal(size=3))
        dx, dy, dz = d.vector
        mean = np.mean([contract(d, matrix_B(p)).real for p in phi])
        assert_allclose(mean, (dx * dx + dy * dy) / 2 + dz * dz, rtol=1e-12)
    iso = DipoleSpec.isotropic(2.0)
    mean = np.mean([contract(iso, matrix_B(p)).real for p in phi])
    assert_allclose(mean, 2.0 * 4.0 / 3.0, rtol=1e-14)


def test_isotropic_profile_values():
    d = DipoleSpec.isotropic(3.0)
    phi = np.linspace(0, 2 * np.pi, 32)
    c_a, c_b, c_bt = contraction_profiles(d, phi)
    assert np.all(c_a == 0.0)
    assert_allclose(c_b, 2.0 * 9.0 / 3.0, rtol=1e-15)


def test_realness_assertion_catches_transcription_errors():
    # a corrupted B picks up an uncancelled imaginary part
    bad = matrix_B(0.3).entries.copy()
    bad[2, 0] = -bad[2, 0]
    broken = DirectionMatrix(tag="B", phi=0.3, entries=bad)
    d = DipoleSpec.from_vector(1.0, 0.0, 1.0)
    with pytest.raises(AssertionError):
        contract(d, broken)


def test_dipole_validation():
    with pytest.raises(ValueError):
        DipoleSpec.isotropic(-1.0)
    d = DipoleSpec.from_vector(3.0, 0.0, 4.0)
    assert d.magnitude == 5.0
    assert not d.is_isotropic
    assert DipoleSpec.isotropic(1.0).is_isotropic
