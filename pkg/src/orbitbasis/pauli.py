"""Generalized Pauli operators and the abelian orbit groups.

The group used throughout is generated by adjacent pairs
``Z_d^(i) Z_d^(i+1)^*`` (i = 1..n-1) and the global shift ``X_d^{(x) n}``;
for qubits this is the tetrahedral group ``<Z1Z2, ..., Z_{n-1}Z_n, XX...X>``.
Group elements carry labels ``g = (z_1, ..., z_{n-1}, x)`` in Z_d^n: the
first n-1 entries power the Z-pair generators and the last one powers the
global shift. Labels are enumerated in lexicographic order, which matches
the computational index order of ``|g>``.
"""

from dataclasses import dataclass
from itertools import product

import numpy as np

from .linalg import kron_all


def omega(d: int) -> complex:
    return np.exp(2j * np.pi / d)


def pauli_z(d: int) -> np.ndarray:
    """Clock operator, ``Z_d|j> = omega_d^j |j>``."""
    if d < 2:
        raise ValueError("dimension must be at least 2")
    return np.diag(omega(d) ** np.arange(d))


def pauli_x(d: int) -> np.ndarray:
    """Shift operator, ``X_d|j> = |j + 1 mod d>``."""
    if d < 2:
        raise ValueError("dimension must be at least 2")
    return np.roll(np.eye(d, dtype=complex), 1, axis=0)


def pauli_y() -> np.ndarray:
    return 1j * pauli_x(2) @ pauli_z(2)


def fourier(d: int) -> np.ndarray:
    """Normalized DFT, ``H_d = d^{-1/2} sum_{j,k} omega^{jk} |j><k|``."""
    j = np.arange(d)
    return omega(d) ** np.outer(j, j) / np.sqrt(d)


def labels(n: int, d: int):
    """All group labels in Z_d^n in lexicographic (computational index) order."""
    return list(product(range(d), repeat=n))


@dataclass(frozen=True)
class PauliWord:
    """``omega_{2d}^phase_exp * (x)_i X_d^{x_i} Z_d^{z_i}``."""

    d: int
    x_exps: tuple
    z_exps: tuple
    phase_exp: int = 0

    def __post_init__(self):
        d = self.d
        object.__setattr__(self, "x_exps", tuple(int(e) % d for e in self.x_exps))
        object.__setattr__(self, "z_exps", tuple(int(e) % d for e in self.z_exps))
        object.__setattr__(self, "phase_exp", int(self.phase_exp) % (2 * d))
        if len(self.x_exps) != len(self.z_exps):
            raise ValueError("x and z exponent vectors differ in length")

    @property
    def n(self) -> int:
        return len(self.x_exps)

    def matrix(self) -> np.ndarray:
        X, Z = pauli_x(self.d), pauli_z(self.d)
        sites = [
            np.linalg.matrix_power(X, a) @ np.linalg.matrix_power(Z, b)
            for a, b in zip(self.x_exps, self.z_exps)
        ]
        return np.exp(1j * np.pi * self.phase_exp / self.d) * kron_all(sites)

    def __mul__(self, other: "PauliWord") -> "PauliWord":
        # Z^b X^a = omega^{ab} X^a Z^b, so X^a1 Z^b1 X^a2 Z^b2 = omega^{b1 a2} X^{a1+a2} Z^{b1+b2}
        if self.d != other.d or self.n != other.n:
            raise ValueError("incompatible Pauli words")
        twist = sum(b1 * a2 for b1, a2 in zip(self.z_exps, other.x_exps))
        return PauliWord(
            self.d,
            tuple(a + b for a, b in zip(self.x_exps, other.x_exps)),
            tuple(a + b for a, b in zip(self.z_exps, other.z_exps)),
            self.phase_exp + other.phase_exp + 2 * twist,
        )

    def __pow__(self, k: int) -> "PauliWord":
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = PauliWord(self.d, (0,) * self.n, (0,) * self.n)
        for _ in range(k):
            out = out * self
        return out


@dataclass(frozen=True)
class GroupDescriptor:
    n: int
    d: int
    generators: tuple

    @property
    def order(self) -> int:
        return self.d**self.n

    def element(self, label) -> PauliWord:
        """``prod_i gen_i^{g_i}`` with Z-pair powers on the left."""
        out = PauliWord(self.d, (0,) * self.n, (0,) * self.n)
        for gen, g in zip(self.generators, label):
            out = out * gen**g
        return out


def tetra_group(n: int, d: int = 2) -> GroupDescriptor:
    """Generators ``Z^(i) Z^(i+1)^*`` for i < n and ``X^{(x) n}``."""
    if n < 1 or d < 2:
        raise ValueError("need n >= 1 and d >= 2")
    gens = []
    for i in range(n - 1):
        z = [0] * n
        z[i], z[i + 1] = 1, d - 1
        gens.append(PauliWord(d, (0,) * n, tuple(z)))
    gens.append(PauliWord(d, (1,) * n, (0,) * n))
    return GroupDescriptor(n, d, tuple(gens))


def group_elements(gd: GroupDescriptor):
    """List of ``(label, matrix)`` for every group element, label 0 first."""
    return [(g, gd.element(g).matrix()) for g in labels(gd.n, gd.d)]


def sum_gate(n: int, d: int, control: int, target: int) -> np.ndarray:
    """``|.., j_target, .., k_control, ..> -> |.., j_target + k_control, ..>`` (0-based sites)."""
    dim = d**n
    digits = np.array(labels(n, d))
    out = digits.copy()
    out[:, target] = (digits[:, target] + digits[:, control]) % d
    weights = d ** np.arange(n - 1, -1, -1)
    perm = np.zeros((dim, dim), dtype=complex)
    perm[out @ weights, np.arange(dim)] = 1.0
    return perm


def sum_chain(n: int, d: int = 2) -> np.ndarray:
    """``S_d(n) = SUM(2->1) SUM(3->2) ... SUM(n->n-1)``; the rightmost factor acts first.

    For qubits this is the right-to-left CNOT chain.
    """
    out = np.eye(d**n, dtype=complex)
    for i in range(n - 1):
        out = out @ sum_gate(n, d, control=i + 1, target=i)
    return out


def x_eigenstate(x: int, d: int) -> np.ndarray:
    """``|x>_X = d^{-1/2} sum_j omega^{-jx} |j>`` with ``X_d|x>_X = omega^x |x>_X``."""
    return omega(d) ** (-np.arange(d) * x) / np.sqrt(d)


def eigenbasis(n: int, d: int = 2):
    """Joint eigenbasis of ``tetra_group(n, d)`` as a list of ``(label, state)``.

    Built constructively as ``S_d(n) (|z_1> ... |z_{n-1}> |x>_X)``.
    """
    chain = sum_chain(n, d)
    out = []
    for lab in labels(n, d):
        factors = [np.eye(d, dtype=complex)[z] for z in lab[:-1]]
        factors.append(x_eigenstate(lab[-1], d))
        out.append((lab, chain @ kron_all(factors)))
    return out


def eigenbasis_matrix(n: int, d: int = 2) -> np.ndarray:
    """Columns are the eigenstates in label order."""
    return np.column_stack([v for _, v in eigenbasis(n, d)])

