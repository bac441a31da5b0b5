"""Dense complex linear algebra shared by the rest of the package.

States and operators are plain numpy arrays. Multi-site vectors use a
big-endian site order: site 1 is the leftmost tensor factor, so the
computational index of ``|j_1, ..., j_n>`` is ``sum_i j_i * d**(n - i)``.
This is the order produced by ``numpy.kron``.
"""

from functools import reduce

import numpy as np

TOL_NORM = 1e-12
TOL_GEOM = 1e-9
MAX_DIM = 4096


class DimensionError(ValueError):
    """Raised when operand shapes are incompatible or exceed ``MAX_DIM``."""


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2:
        raise DimensionError(f"expected a 2-d array, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def kron(a, b, max_dim: int = MAX_DIM) -> np.ndarray:
    """Kronecker product ``a (x) b`` with a cap on the resulting dimension."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim == 1 and b.ndim == 1:
        if a.size * b.size > max_dim:
            raise DimensionError(f"vector length {a.size * b.size} exceeds cap {max_dim}")
        return np.kron(a, b)
    a, b = as_matrix(a), as_matrix(b)
    rows, cols = a.shape[0] * b.shape[0], a.shape[1] * b.shape[1]
    if max(rows, cols) > max_dim:
        raise DimensionError(f"kron result {rows}x{cols} exceeds cap {max_dim}")
    return np.kron(a, b)


def kron_all(ops, max_dim: int = MAX_DIM) -> np.ndarray:
    """Left-to-right Kronecker product of a sequence of operators or vectors."""
    return reduce(lambda x, y: kron(x, y, max_dim), ops)


def embed(op, site: int, n: int, d: int) -> np.ndarray:
    """Place a single-site operator on ``site`` (0-based) of an ``n``-site register."""
    eye = np.eye(d, dtype=complex)
    return kron_all([op if i == site else eye for i in range(n)])


def dagger(m) -> np.ndarray:
    return np.conj(np.asarray(m)).T


def mat_apply(m, s) -> np.ndarray:
    """Matrix-vector product. The result is not renormalized."""
    m = as_matrix(m)
    s = np.asarray(s, dtype=complex)
    if s.ndim != 1 or m.shape[1] != s.shape[0]:
        raise DimensionError(f"cannot apply {m.shape} matrix to vector of shape {s.shape}")
    return m @ s


def is_unitary(m, tol: float = TOL_NORM) -> bool:
    """True iff the largest entry modulus of ``m^dagger m - I`` is at most ``tol``."""
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise DimensionError(f"unitarity needs a square matrix, got {m.shape}")
    dev = dagger(m) @ m - np.eye(m.shape[0])
    return float(np.max(np.abs(dev))) <= tol


def num_sites(length: int, d: int) -> int:
    n = int(round(np.log(length) / np.log(d)))
    if d**n != length:
        raise DimensionError(f"length {length} is not a power of {d}")
    return n


def partial_trace(state, keep_site: int, d: int = 2) -> np.ndarray:
    """Reduced density matrix of one site of a pure state.

    ``keep_site`` is 0-based. The state is not renormalized, so the trace
    equals the squared norm of the input.
    """
    psi = np.asarray(state, dtype=complex)
    n = num_sites(psi.size, d)
    if not 0 <= keep_site < n:
        raise IndexError(f"site {keep_site} out of range for {n} sites")
    t = np.moveaxis(psi.reshape((d,) * n), keep_site, 0).reshape(d, -1)
    return t @ t.conj().T


def reduced_density(state, keep, d: int = 2) -> np.ndarray:
    """Reduced density matrix on an arbitrary (sorted) set of sites."""
    psi = np.asarray(state, dtype=complex)
    n = num_sites(psi.size, d)
    keep = sorted(keep)
    rest = [i for i in range(n) if i not in keep]
    t = np.transpose(psi.reshape((d,) * n), keep + rest).reshape(d ** len(keep), -1)
    return t @ t.conj().T


def schmidt_coefficients(state, left, d: int = 2) -> np.ndarray:
    """Schmidt coefficients (descending) across the cut ``left | rest``."""
    psi = np.asarray(state, dtype=complex)
    n = num_sites(psi.size, d)
    left = sorted(left)
    rest = [i for i in range(n) if i not in left]
    t = np.transpose(psi.reshape((d,) * n), left + rest).reshape(d ** len(left), -1)
    return np.linalg.svd(t, compute_uv=False)


def basis_state(index: int, dim: int) -> np.ndarray:
    v = np.zeros(dim, dtype=complex)
    v[index] = 1.0
    return v


def canonical_phase(state, tol: float = TOL_NORM) -> np.ndarray:
    """Rotate the global phase so the first nonzero amplitude is real and positive."""
    psi = np.asarray(state, dtype=complex)
    nz = np.flatnonzero(np.abs(psi) > tol)
    if nz.size == 0:
        return psi.copy()
    a = psi[nz[0]]
    return psi * (abs(a) / a)


def equal_up_to_phase(a, b, tol: float = TOL_NORM) -> bool:
    """True iff ``a = e^{i phi} b`` entrywise within ``tol``."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    ov = np.vdot(b, a)
    if abs(ov) < tol:
        return bool(np.max(np.abs(a)) <= tol and np.max(np.abs(b)) <= tol)
    return float(np.max(np.abs(a - (ov / abs(ov)) * b))) <= tol
