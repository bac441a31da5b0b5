from math import comb

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from orbitbasis.basis import check_orthonormal, orbit
from orbitbasis.fiducial import (
    EJM_PHASES,
    ConstraintError,
    PhaseVector,
    both_orientation_preset,
    czartowski_alpha,
    czartowski_bounds,
    czartowski_fiducial,
    eigen_overlaps,
    ejm_theta,
    ejm_theta_phases,
    fiducial_from_phases,
    hesse_sic,
    krawtchouk,
    normal_form_unitary,
    phases_of,
    ppi_3_preset,
    ppi_solve,
    ppi_state,
    ppi_systems,
    rect_fiducial,
    weyl_heisenberg_orbit,
    wrap_phase,
)
from orbitbasis.geometry import bloch_vector
from orbitbasis.linalg import equal_up_to_phase, is_unitary, partial_trace, schmidt_coefficients
from orbitbasis.pauli import eigenbasis_matrix, tetra_group

EJM = 0.5 * np.array([np.exp(1j * np.pi / 4), -1j * np.sqrt(2), 0, np.exp(-1j * np.pi / 4)])


def test_wrap_phase_range():
    assert wrap_phase(np.pi) == pytest.approx(np.pi)
    assert wrap_phase(-np.pi) == pytest.approx(np.pi)
    assert wrap_phase(3 * np.pi / 2) == pytest.approx(-np.pi / 2)


def test_phase_vector_mapping_roundtrip():
    pv = PhaseVector.from_mapping(2, 2, {(0, 1): 0.5, (1, 1): -1.0})
    assert pv.as_mapping()[(0, 1)] == pytest.approx(0.5)
    assert pv.as_mapping()[(0, 0)] == 0.0


def test_phase_vector_wrong_length():
    with pytest.raises(ValueError):
        PhaseVector(2, 2, [0.0, 1.0, 2.0])


def test_ejm_phases_give_ejm_fiducial():
    pv = PhaseVector(2, 2, EJM_PHASES)
    bell = eigenbasis_matrix(2, 2)
    expected = 0.5 * bell @ np.array([1, 1j, -1j, 1j])
    assert np.allclose(fiducial_from_phases(pv), expected)
    assert np.allclose(fiducial_from_phases(pv), EJM)


def test_zero_phases_uniform_superposition():
    pv = PhaseVector(2, 2, np.zeros(4))
    psi = fiducial_from_phases(pv)
    assert np.allclose(psi, eigenbasis_matrix(2, 2).sum(axis=1) / 2)
    assert check_orthonormal(orbit(tetra_group(2), psi)).passed


@pytest.mark.parametrize("n,d", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_normal_form_unitary_prepares_fiducial(n, d, rng):
    pv = PhaseVector(n, d, rng.uniform(-np.pi, np.pi, d**n))
    v = normal_form_unitary(pv)
    assert is_unitary(v)
    assert np.allclose(v[:, 0], fiducial_from_phases(pv), atol=1e-12)


def test_normal_form_zero_phases():
    pv = PhaseVector(3, 2, np.zeros(8))
    assert np.allclose(normal_form_unitary(pv)[:, 0], eigenbasis_matrix(3, 2).sum(axis=1) / np.sqrt(8))


def test_ejm_theta_endpoints():
    assert np.allclose(ejm_theta(0.0), EJM)
    r1 = bloch_vector(ejm_theta(0.0), 0)
    r2 = bloch_vector(ejm_theta(0.0), 1)
    assert np.allclose(r1, [0.5, 0.5, 0.5]) and np.allclose(r2, -r1)
    assert np.allclose(bloch_vector(ejm_theta(np.pi / 2), 0), 0)


@settings(max_examples=30, deadline=None)
@given(st.floats(-np.pi, np.pi))
def test_ejm_theta_closed_form(theta):
    psi = ejm_theta(theta)
    assert np.allclose(psi, fiducial_from_phases(ejm_theta_phases(theta)))
    expected = 0.5 * np.array(
        [
            np.exp(1j * np.pi / 4),
            -1j * (1 + np.exp(1j * theta)) / np.sqrt(2),
            -1j * (1 - np.exp(1j * theta)) / np.sqrt(2),
            np.exp(-1j * np.pi / 4),
        ]
    )
    assert np.allclose(psi, expected)
    r1 = np.real(np.trace(partial_trace(psi, 0) @ np.array([[0, 1], [1, 0]])))
    assert r1 == pytest.approx(np.cos(theta) / 2, abs=1e-12)


def test_ejm_theta_quarter_length():
    r = bloch_vector(ejm_theta(np.pi / 4), 0)
    assert np.linalg.norm(r) == pytest.approx(np.sqrt(3) / 2 * np.cos(np.pi / 4), abs=1e-12)


def test_krawtchouk_values():
    assert krawtchouk(5, 2, 0) == comb(5, 2) == 10
    assert krawtchouk(3, 1, 2) == -1


def brute_krawtchouk(n, k, m):
    """Signed count over bit strings of weight k against a fixed weight-m string."""
    total = 0
    for s in range(2**n):
        if bin(s).count("1") == k:
            total += (-1) ** bin(s & (2**m - 1)).count("1")
    return total


def test_krawtchouk_symmetry_and_reference():
    for n in range(1, 8):
        for k in range(n + 1):
            for m in range(n + 1):
                assert krawtchouk(n, k, m) == (-1) ** m * krawtchouk(n, n - k, m)
                assert krawtchouk(n, k, m) == brute_krawtchouk(n, k, m)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_ppi_odd_exact_solution(n):
    q, r = ppi_systems(n)
    assert all(v == sympy.Rational(1, 2 ** (n - 1)) for v in q)
    assert all(v == 0 for v in r)
    assert ppi_solve(n)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_ppi_even_infeasible(n):
    cert = ppi_solve(n)
    assert not cert
    assert cert.middle_from_diagonal != cert.middle_from_flip
    assert cert.middle_from_flip == 0
    assert cert.middle_from_diagonal == sympy.Rational(1, 2**n)


@pytest.mark.xfail(strict=True, reason="the exact middle weight is 1/2^n; 1/2^(n-2) is not what the system gives")
@pytest.mark.parametrize("n", [2, 4, 6])
def test_ppi_even_quoted_middle_weight(n):
    assert ppi_solve(n).middle_from_diagonal == sympy.Rational(1, 2 ** (n - 2))


def test_ppi_3_preset_amplitudes():
    psi = ppi_state(ppi_3_preset())
    a, b = (9 + 3j) / 10, (-1 + 3j) / 10
    expected = 0.5 * np.array([1, a, a, b, a, b, b, 0])
    assert np.max(np.abs(psi - expected)) <= 1e-12


def test_ppi_permutation_invariant():
    psi = ppi_state(ppi_solve(5)).reshape((2,) * 5)
    assert np.allclose(psi, psi.transpose(1, 0, 2, 3, 4))
    assert np.allclose(psi, psi.transpose(4, 1, 2, 3, 0))


@pytest.mark.parametrize("n", [3, 5])
def test_ppi_orbit_orthonormal(n):
    assert check_orthonormal(orbit(tetra_group(n), ppi_state(ppi_solve(n)))).passed


def test_ppi_wrong_parameter_count():
    with pytest.raises(ValueError):
        ppi_solve(5, thetas=(0.0,), alphas=(0.0,))


def test_rect_fiducials():
    r = 1 / np.sqrt(2)
    assert np.allclose(rect_fiducial(2), [0, r, 0, r])
    assert np.allclose(rect_fiducial(2), np.kron(np.ones(2) * r, [0, 1]))
    assert np.allclose(rect_fiducial(3), 0.5 * np.array([0, 0, 0, 1, 0, 1, 1, 1]))


def test_both_orientation_preset_normalized():
    assert np.linalg.norm(both_orientation_preset()) == pytest.approx(1)


@pytest.mark.parametrize("theta", [0.0, np.pi / 3, 1.1])
def test_hesse_sic(theta):
    fid = hesse_sic(theta)
    assert np.linalg.norm(fid) == pytest.approx(1)
    states = weyl_heisenberg_orbit(fid)
    gram = np.abs(states.conj() @ states.T) ** 2
    off = gram[~np.eye(9, dtype=bool)]
    assert np.allclose(off, 0.25, atol=1e-12)


def test_czartowski_qutrit_alpha_and_phases():
    assert czartowski_alpha(3, 1 / 3) == pytest.approx(0.0, abs=1e-7)
    theta = 0.7
    psi = czartowski_fiducial(3, hesse_sic(theta), 1 / 3, 0.0)
    ov = eigen_overlaps(psi, 2, 3)
    assert np.allclose(np.abs(ov), 1 / 3)
    pi = np.pi
    table = np.array(
        [[0, pi / 3, -pi / 3], [theta + pi] * 3, [-theta + pi, -theta - pi / 3, -theta + pi / 3]]
    ).ravel()
    got = phases_of(psi, 2, 3).alphas
    diff = np.angle(np.exp(1j * (got - table)))
    assert np.max(np.abs(diff - diff[0])) <= 1e-9


def test_czartowski_out_of_range():
    lo, hi = czartowski_bounds(3)
    with pytest.raises(ConstraintError):
        czartowski_fiducial(3, hesse_sic(), hi + 0.1, 0.0)
    with pytest.raises(ConstraintError):
        czartowski_alpha(3, lo - 0.1)
    with pytest.raises(ConstraintError):
        czartowski_fiducial(3, hesse_sic(), 1 / 3, 0.5)


def qubit_sic_fiducial():
    m = np.ones(3) / np.sqrt(3)
    rho = 0.5 * (np.eye(2) + m[0] * np.array([[0, 1], [1, 0]]) + m[1] * np.array([[0, -1j], [1j, 0]]) + m[2] * np.diag([1, -1]))
    w, v = np.linalg.eigh(rho)
    return v[:, -1]


@pytest.mark.parametrize("sign", [+1, -1])
def test_czartowski_qubit_is_ejm(sign):
    q = (np.sqrt(3) - sign) / 2
    psi = czartowski_fiducial(2, qubit_sic_fiducial(), q, czartowski_alpha(2, q))
    assert np.linalg.norm(psi) == pytest.approx(1)
    ob = orbit(tetra_group(2), psi)
    assert check_orthonormal(ob).passed
    assert np.allclose(schmidt_coefficients(psi, [0]), schmidt_coefficients(EJM, [0]))
    for site in range(2):
        pts = np.array([bloch_vector(s, site) for s in ob.states])
        assert np.allclose(np.linalg.norm(pts, axis=1), np.sqrt(3) / 2)
        d = [np.linalg.norm(pts[i] - pts[j]) for i in range(4) for j in range(i + 1, 4)]
        assert np.ptp(d) < 1e-12


def test_eigen_overlaps_of_equal_weight_state(rng):
    pv = PhaseVector(3, 2, rng.uniform(-3, 3, 8))
    psi = fiducial_from_phases(pv)
    assert np.allclose(np.abs(eigen_overlaps(psi, 3, 2)), 1 / np.sqrt(8))
    back = phases_of(psi, 3, 2)
    assert equal_up_to_phase(fiducial_from_phases(back), psi)
