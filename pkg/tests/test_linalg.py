import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from orbitbasis.linalg import (
    DimensionError,
    basis_state,
    canonical_phase,
    embed,
    equal_up_to_phase,
    is_unitary,
    kron,
    kron_all,
    mat_apply,
    num_sites,
    partial_trace,
    reduced_density,
    schmidt_coefficients,
)
from orbitbasis.pauli import fourier, pauli_x, pauli_z, sum_chain

X, Z = pauli_x(2), pauli_z(2)


def test_kron_identity():
    assert np.array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))


def test_kron_zz_on_11():
    s = basis_state(3, 4)
    assert np.allclose(kron(Z, Z) @ s, s)


def test_kron_xx_flips_both():
    assert np.allclose(kron(X, X) @ basis_state(0, 4), basis_state(3, 4))


def test_kron_vectors_big_endian():
    v = kron(basis_state(1, 2), basis_state(0, 2))
    assert np.argmax(np.abs(v)) == 2


def test_kron_dimension_cap():
    big = np.eye(128)
    with pytest.raises(DimensionError):
        kron(big, big, max_dim=4096)


def test_kron_all_matches_numpy():
    ops = [X, Z, np.eye(2)]
    assert np.allclose(kron_all(ops), np.kron(np.kron(X, Z), np.eye(2)))


def test_embed_site_order():
    assert np.allclose(embed(X, 0, 2, 2), np.kron(X, np.eye(2)))
    assert np.allclose(embed(X, 1, 2, 2), np.kron(np.eye(2), X))


def test_mat_apply():
    s = np.array([0.6, 0.8j])
    assert np.allclose(mat_apply(np.eye(2), s), s)
    assert np.allclose(mat_apply(X, basis_state(0, 2)), basis_state(1, 2))
    assert np.allclose(mat_apply(fourier(2), basis_state(0, 2)), np.ones(2) / np.sqrt(2))


def test_mat_apply_shape_mismatch():
    with pytest.raises(DimensionError):
        mat_apply(np.eye(4), np.ones(2))


def test_is_unitary():
    assert is_unitary(np.eye(4), 1e-12)
    assert not is_unitary(np.diag([1.0, 2.0]), 2.9)
    assert is_unitary(sum_chain(2, 2))


def test_partial_trace_bell():
    bell = np.array([1, 0, 0, 1]) / np.sqrt(2)
    assert np.allclose(partial_trace(bell, 0), np.eye(2) / 2)


def test_partial_trace_product():
    state = np.kron([1, 0], np.ones(2) / np.sqrt(2))
    assert np.allclose(partial_trace(state, 0), np.diag([1, 0]))
    assert np.allclose(partial_trace(state, 1), np.full((2, 2), 0.5))


def brute_partial_trace(state, keep, n, d=2):
    """Reference: sum over computational indices of the traced sites."""
    psi = np.asarray(state).reshape((d,) * n)
    rho = np.zeros((d, d), dtype=complex)
    for idx in np.ndindex(*(d,) * n):
        for jdx in np.ndindex(*(d,) * n):
            if all(idx[s] == jdx[s] for s in range(n) if s != keep):
                rho[idx[keep], jdx[keep]] += psi[idx] * np.conj(psi[jdx])
    return rho


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([(2, 2), (3, 2), (2, 3)]))
def test_partial_trace_matches_reference(seed, nd):
    n, d = nd
    rng = np.random.default_rng(seed)
    v = rng.normal(size=d**n) + 1j * rng.normal(size=d**n)
    v /= np.linalg.norm(v)
    for keep in range(n):
        rho = partial_trace(v, keep, d)
        assert np.allclose(rho, brute_partial_trace(v, keep, n, d), atol=1e-12)
        assert abs(np.trace(rho) - 1) < 1e-12


def test_reduced_density_two_sites_of_ghz():
    ghz = np.zeros(8)
    ghz[[0, 7]] = 1 / np.sqrt(2)
    rho = reduced_density(ghz, [0, 2])
    assert np.allclose(rho, np.diag([0.5, 0, 0, 0.5]))


def test_schmidt_coefficients_bell_and_product():
    bell = np.array([1, 0, 0, 1]) / np.sqrt(2)
    assert np.allclose(schmidt_coefficients(bell, [0]), [1 / np.sqrt(2)] * 2)
    prod = np.kron([1, 0], [0, 1])
    assert np.allclose(schmidt_coefficients(prod, [0]), [1, 0])


def test_num_sites():
    assert num_sites(8, 2) == 3
    assert num_sites(9, 3) == 2
    with pytest.raises(DimensionError):
        num_sites(6, 2)


def test_phase_helpers():
    v = np.array([0.6j, 0.8])
    assert equal_up_to_phase(v, np.exp(0.7j) * v)
    assert not equal_up_to_phase(v, np.array([0.8, 0.6j]))
    c = canonical_phase(v)
    assert abs(c[np.argmax(np.abs(c) > 1e-12)].imag) < 1e-15
