"""Fiducial-state families whose group orbits are orthonormal bases."""

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .linalg import TOL_GEOM, embed, kron_all
from .pauli import eigenbasis_matrix, fourier, labels, pauli_x, pauli_z, sum_chain


class ConstraintError(ValueError):
    """Parameters violate a defining relation; ``residual`` says by how much."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


def wrap_phase(a):
    """Reduce angles to (-pi, pi]."""
    a = np.asarray(a, dtype=float)
    return np.pi - np.mod(np.pi - a, 2 * np.pi)


@dataclass(frozen=True)
class PhaseVector:
    """Relative phases ``alpha_{z,x}`` on the joint eigenbasis, in label order."""

    n: int
    d: int
    alphas: np.ndarray = field(repr=False)

    def __post_init__(self):
        a = np.asarray(self.alphas, dtype=float).reshape(-1)
        if a.size != self.d**self.n:
            raise ValueError(f"expected {self.d ** self.n} phases, got {a.size}")
        object.__setattr__(self, "alphas", wrap_phase(a))

    @classmethod
    def from_mapping(cls, n, d, mapping):
        """Build from ``{label tuple: phase}``; missing labels get phase 0."""
        return cls(n, d, [mapping.get(lab, 0.0) for lab in labels(n, d)])

    def as_mapping(self):
        return dict(zip(labels(self.n, self.d), self.alphas.tolist()))

    def diagonal(self) -> np.ndarray:
        return np.exp(1j * self.alphas)


def fiducial_from_phases(pv: PhaseVector) -> np.ndarray:
    """``d^{-n/2} sum_{z,x} e^{i alpha_{z,x}} |Phi_{z,x}>``."""
    return eigenbasis_matrix(pv.n, pv.d) @ pv.diagonal() / np.sqrt(pv.d**pv.n)


def normal_form_unitary(pv: PhaseVector) -> np.ndarray:
    """``V = S_d(n) H_d^(n)^dagger D_alpha H_d^{(x)n}``, with ``V|0...0>`` the fiducial.

    ``H_d^(n)`` is the Fourier gate on the last site only.
    """
    n, d = pv.n, pv.d
    h = fourier(d)
    h_last = embed(h, n - 1, n, d)
    h_all = kron_all([h] * n)
    return sum_chain(n, d) @ h_last.conj().T @ np.diag(pv.diagonal()) @ h_all


EJM_PHASES = (0.0, np.pi / 2, -np.pi / 2, np.pi / 2)


def ejm_theta_phases(theta: float) -> PhaseVector:
    return PhaseVector(2, 2, [0.0, np.pi / 2, -np.pi / 2, theta + np.pi / 2])


def ejm_theta(theta: float) -> np.ndarray:
    """Fiducial interpolating between the EJM (theta = 0) and the Bell basis (theta = pi/2)."""
    e = np.exp(1j * theta)
    r2 = np.sqrt(2)
    return 0.5 * np.array(
        [np.exp(1j * np.pi / 4), -1j * (1 + e) / r2, -1j * (1 - e) / r2, np.exp(-1j * np.pi / 4)]
    )


# ---------------------------------------------------------------------------
# party-permutation-invariant fiducials


def krawtchouk(n: int, k: int, m: int) -> int:
    """Binary Krawtchouk polynomial ``K^n_k(m)``, exact."""
    if not (0 <= k <= n and 0 <= m <= n):
        raise ValueError("need 0 <= k, m <= n")
    return sum((-1) ** j * comb(m, j) * comb(n - m, k - j) for j in range(0, min(m, k) + 1))


@dataclass(frozen=True)
class PPISolution:
    """Free parameters of a PPI fiducial for odd ``n``.

    ``thetas[k]`` and ``alphas[k]`` for ``k = 0..(n-1)/2``; ``q`` and ``r``
    are the exact solutions of the two Krawtchouk systems.
    """

    n: int
    thetas: tuple
    alphas: tuple
    q: tuple = ()
    r: tuple = ()

    def amplitudes(self):
        """``(a_k, alpha_k)`` for ``k = 0..n``."""
        n = self.n
        scale = 2.0 ** (-(n - 1) / 2)
        a = np.zeros(n + 1)
        ph = np.zeros(n + 1)
        for k, (t, al) in enumerate(zip(self.thetas, self.alphas)):
            a[k], a[n - k] = scale * np.cos(t), scale * np.sin(t)
            ph[k], ph[n - k] = al, al + np.pi / 2
        return a, ph


@dataclass(frozen=True)
class PPIInfeasible:
    """Certificate that no PPI fiducial exists for even ``n``.

    The two orthogonality systems each determine ``a_{n/2}^2`` uniquely,
    and the two values disagree.
    """

    n: int
    middle_from_diagonal: object
    middle_from_flip: object
    q: tuple
    r: tuple

    def __bool__(self):
        return False


def _krawtchouk_system(n: int, rhs_first: int):
    """Rows ``m = 0..floor(n/2)`` of ``sum_k K^n_k(2m) u_k = rhs``.

    Unknowns are ``u_k`` for ``k < n/2`` plus, for even n, ``a_{n/2}^2``.
    """
    import sympy

    half = n // 2
    cols = (n + 1) // 2 if n % 2 else half + 1
    rows = range(half + 1) if n % 2 == 0 else range((n - 1) // 2 + 1)
    mat = sympy.Matrix([[krawtchouk(n, k, 2 * m) for k in range(cols)] for m in rows])
    rhs = sympy.Matrix([rhs_first if m == 0 else 0 for m in rows])
    return mat, rhs


def ppi_systems(n: int):
    """Exact solutions ``(q, r)`` of the diagonal and bit-flip orthogonality systems."""
    if n < 2:
        raise ValueError("need n >= 2")
    mat, rhs_q = _krawtchouk_system(n, 1)
    _, rhs_r = _krawtchouk_system(n, 0)
    q = mat.LUsolve(rhs_q)
    r = mat.LUsolve(rhs_r)
    return tuple(q), tuple(r)


def ppi_solve(n: int, thetas=None, alphas=None):
    """Solve the PPI orthogonality constraints exactly.

    Odd ``n`` returns a :class:`PPISolution` (defaults: all thetas and alphas
    zero, except the n = 3 preset). Even ``n`` returns a falsy
    :class:`PPIInfeasible` certificate.
    """
    q, r = ppi_systems(n)
    if n % 2 == 0:
        return PPIInfeasible(n, q[-1], r[-1], q, r)
    half = (n - 1) // 2
    if thetas is None and alphas is None and n == 3:
        t = float(np.arctan(1 / 3))
        thetas, alphas = (0.0, t), (0.0, t)
    thetas = tuple(thetas) if thetas is not None else (0.0,) * (half + 1)
    alphas = tuple(alphas) if alphas is not None else (0.0,) * (half + 1)
    if len(thetas) != half + 1 or len(alphas) != half + 1:
        raise ValueError(f"need {half + 1} thetas and alphas for n={n}")
    return PPISolution(n, thetas, alphas, q, r)


def ppi_3_preset() -> PPISolution:
    return ppi_solve(3)


def dicke_weights(n: int) -> np.ndarray:
    """Hamming weight of each computational index."""
    return np.array([sum(lab) for lab in labels(n, 2)])


def ppi_state(sol: PPISolution) -> np.ndarray:
    """``sum_k a_k e^{i alpha_k} |D_k>`` with supernormalized Dicke states."""
    a, ph = sol.amplitudes()
    w = dicke_weights(sol.n)
    return a[w] * np.exp(1j * ph[w])


# ---------------------------------------------------------------------------
# real rectangular family and hand-picked presets


def rect_fiducial(n: int) -> np.ndarray:
    """Real fiducial supported on ``|0,1,..,1>`` and ``|1,j>`` with ``j != 0..0``."""
    if n < 2:
        raise ValueError("need n >= 2")
    half = 2 ** (n - 1)
    v = np.zeros(2**n, dtype=complex)
    v[half - 1] = 1.0
    v[half + 1 :] = 1.0
    return v / np.sqrt(half)


def both_orientation_preset() -> np.ndarray:
    """Three-qubit fiducial whose sites 1, 2 and site 3 carry opposite regular tetrahedra."""
    return np.array([3, -3 - 1j, 1, -3j, 1, -3j, 0, -1j]) / (2 * np.sqrt(10))


# ---------------------------------------------------------------------------
# qudits


def hesse_sic(theta: float = 0.0) -> np.ndarray:
    """Qutrit SIC fiducial ``(1, -e^{i theta}, 0) / sqrt(2)``."""
    return np.array([1.0, -np.exp(1j * theta), 0.0]) / np.sqrt(2)


def weyl_heisenberg_orbit(fid) -> np.ndarray:
    """Rows ``X^j Z^k |fid>`` ordered by ``(j, k)``."""
    fid = np.asarray(fid, dtype=complex)
    d = fid.size
    X, Z = pauli_x(d), pauli_z(d)
    return np.array(
        [np.linalg.matrix_power(X, j) @ np.linalg.matrix_power(Z, k) @ fid for j in range(d) for k in range(d)]
    )


def czartowski_bounds(d: int):
    s = np.sqrt(d + 1)
    return (s - 1) / d, (s + 1) / d


def czartowski_alpha(d: int, q: float) -> float:
    """Principal-branch ``alpha`` solving ``cos alpha = (d q^2 + 1) / (2 q sqrt(d + 1))``."""
    lo, hi = czartowski_bounds(d)
    if not lo - TOL_GEOM <= q <= hi + TOL_GEOM:
        raise ConstraintError(f"q={q} outside [{lo}, {hi}]")
    c = (d * q * q + 1) / (2 * q * np.sqrt(d + 1))
    return float(np.arccos(np.clip(c, -1.0, 1.0)))


def czartowski_fiducial(d: int, sic_fid, q: float, alpha: float, tol: float = TOL_GEOM) -> np.ndarray:
    """``sqrt((d+1)/d) |phi> (x) |phi^*> - q e^{i alpha} |Phi+_d>``."""
    sic_fid = np.asarray(sic_fid, dtype=complex)
    if sic_fid.shape != (d,) or abs(np.linalg.norm(sic_fid) - 1) > tol:
        raise ValueError("SIC fiducial must be a unit vector in C^d")
    lo, hi = czartowski_bounds(d)
    if not lo - tol <= q <= hi + tol:
        raise ConstraintError(f"q={q} outside [{lo}, {hi}]", residual=min(abs(q - lo), abs(q - hi)))
    residual = np.cos(alpha) - (d * q * q + 1) / (2 * q * np.sqrt(d + 1))
    if abs(residual) > tol:
        raise ConstraintError(f"cos(alpha) relation violated by {residual:.3e}", residual=float(residual))
    phi_plus = np.eye(d).reshape(-1) / np.sqrt(d)
    return np.sqrt((d + 1) / d) * np.kron(sic_fid, sic_fid.conj()) - q * np.exp(1j * alpha) * phi_plus


def eigen_overlaps(state, n: int, d: int) -> np.ndarray:
    """``<Phi_{z,x}|psi>`` in label order."""
    return eigenbasis_matrix(n, d).conj().T @ np.asarray(state, dtype=complex)


def phases_of(state, n: int, d: int) -> PhaseVector:
    """Read off the phase vector of an equal-weight fiducial (relative to label 0)."""
    ov = eigen_overlaps(state, n, d)
    return PhaseVector(n, d, np.angle(ov) - np.angle(ov[0]))
