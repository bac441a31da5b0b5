"""Group orbits of fiducial states and their verification."""

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .linalg import TOL_NORM, DimensionError, num_sites, schmidt_coefficients
from .pauli import GroupDescriptor, eigenbasis, group_elements


class ContractError(RuntimeError):
    """An operation was called on an input that has not met its precondition."""


@dataclass
class OrbitBasis:
    """``states[i] = U_{g_i} |fiducial>`` with labels in lexicographic order.

    ``verified`` is set by :func:`check_orthonormal` on success; nothing is
    checked at construction so invalid fiducials stay constructible.
    """

    group: GroupDescriptor
    fiducial: np.ndarray = field(repr=False)
    states: np.ndarray = field(repr=False)
    labels: list = field(repr=False)
    verified: bool = False

    @property
    def n(self):
        return self.group.n

    @property
    def d(self):
        return self.group.d

    def gram(self) -> np.ndarray:
        return self.states.conj() @ self.states.T


@dataclass(frozen=True)
class OrthonormalityReport:
    max_offdiag: float
    max_norm_err: float
    passed: bool


@dataclass(frozen=True)
class CompletenessReport:
    max_dev_from_identity: float
    passed: bool


def orbit(gd: GroupDescriptor, fid) -> OrbitBasis:
    fid = np.asarray(fid, dtype=complex)
    if fid.shape != (gd.d**gd.n,):
        raise DimensionError(f"fiducial of shape {fid.shape} does not fit {gd.n} sites of dimension {gd.d}")
    els = group_elements(gd)
    states = np.array([m @ fid for _, m in els])
    return OrbitBasis(gd, fid, states, [g for g, _ in els])


def check_orthonormal(ob: OrbitBasis, tol: float = TOL_NORM) -> OrthonormalityReport:
    g = ob.gram()
    diag = np.diag(g)
    max_offdiag = float(np.max(np.abs(g - np.diag(diag))))
    max_norm_err = float(np.max(np.abs(diag - 1)))
    ob.verified = max_offdiag <= tol and max_norm_err <= tol
    return OrthonormalityReport(max_offdiag, max_norm_err, ob.verified)


def twirl(gd: GroupDescriptor, fid) -> np.ndarray:
    """``sum_g U_g |psi><psi| U_g^dagger``."""
    fid = np.asarray(fid, dtype=complex)
    rho = np.outer(fid, fid.conj())
    return sum(m @ rho @ m.conj().T for _, m in group_elements(gd))


def check_completeness(gd: GroupDescriptor, fid, tol: float = TOL_NORM) -> CompletenessReport:
    dev = float(np.max(np.abs(twirl(gd, fid) - np.eye(gd.d**gd.n))))
    return CompletenessReport(dev, dev <= tol)


def schur_weights(fid, eig=None, n: int = None, d: int = 2) -> np.ndarray:
    """``|<Phi_{z,x}|psi>|^2`` per eigen-label.

    Completeness holds iff every weight equals ``d^{-n}``, because every
    irreducible block of the abelian group is one-dimensional.
    """
    fid = np.asarray(fid, dtype=complex)
    if eig is None:
        n = n if n is not None else num_sites(fid.size, d)
        eig = eigenbasis(n, d)
    vecs = np.array([v for _, v in eig])
    if vecs.shape[0] != fid.size:
        raise DimensionError("eigenbasis does not span the state space")
    return np.abs(vecs.conj() @ fid) ** 2


def weights_uniform(weights, tol: float = TOL_NORM) -> bool:
    w = np.asarray(weights)
    return bool(np.max(np.abs(w - 1 / w.size)) <= tol)


def measurement_unitary(ob: OrbitBasis) -> np.ndarray:
    """``M = sum_g U_g|psi><g|``: column ``g`` is the orbit state with label ``g``."""
    if not ob.verified:
        raise ContractError("orbit basis has not been verified orthonormal; call check_orthonormal first")
    return ob.states.T.copy()


def label_index(label, d: int) -> int:
    idx = 0
    for g in label:
        idx = idx * d + g
    return idx


def schmidt_spectra(ob: OrbitBasis):
    """Per-state Schmidt coefficients across every bipartition whose smaller
    side has at most ``n // 2`` sites; used for isoentanglement checks."""
    n, d = ob.n, ob.d
    cuts = [c for r in range(1, n // 2 + 1) for c in combinations(range(n), r)]
    return np.array(
        [np.concatenate([schmidt_coefficients(s, c, d) for c in cuts]) for s in ob.states]
    )

