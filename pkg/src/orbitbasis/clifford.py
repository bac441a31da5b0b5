"""Phase polynomials, the diagonal-gate level formula and a Clifford-hierarchy oracle.

A phase polynomial over ``n`` Boolean variables with precision ``m`` is
``f(z) = sum_S a_S prod_{i in S} z_i mod 2^m`` over nonempty ``S``; the
diagonal gate ``D_f`` multiplies ``|z>`` by ``exp(2 pi i f(z) / 2^m)``.
Variable ``z_i`` is the bit of site ``i`` (site 1 most significant). For an
orbit-basis phase vector the variables are the label ``(z_1, .., z_{n-1}, x)``.
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

import numpy as np

from .basis import check_orthonormal, measurement_unitary, orbit
from .fiducial import PhaseVector, fiducial_from_phases
from .linalg import kron_all
from .pauli import labels, pauli_x, pauli_z, tetra_group

PHASE_TOL = 1e-9
MAX_PRECISION = 24  # grid 2 pi / 2^24 stays well above PHASE_TOL


class NotRepresentableError(ValueError):
    """A phase is not a dyadic multiple of 2 pi at the requested precision."""


class CostGuardError(RuntimeError):
    def __init__(self, message, work):
        super().__init__(message)
        self.work = work


# ---------------------------------------------------------------------------
# 2-adic arithmetic


def nu2(a: int):
    """Largest ``e`` with ``2^e | a``; ``math.inf`` for ``a = 0``."""
    a = int(a)
    if a == 0:
        return math.inf
    return (a & -a).bit_length() - 1


@dataclass(frozen=True)
class DyadicRational:
    """``numerator / 2^exponent`` in lowest terms (odd numerator, or zero with exponent 0)."""

    numerator: int
    exponent: int = 0

    def __post_init__(self):
        num, exp = int(self.numerator), int(self.exponent)
        if exp < 0:
            num, exp = num * 2 ** (-exp), 0
        if num == 0:
            exp = 0
        else:
            shift = min(nu2(num), exp)
            num, exp = num >> shift if num > 0 else -((-num) >> shift), exp - shift
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "exponent", exp)

    @classmethod
    def from_fraction(cls, fr) -> "DyadicRational":
        fr = Fraction(fr)
        den = fr.denominator
        if den & (den - 1):
            raise NotRepresentableError(f"{fr} does not have a power-of-two denominator")
        return cls(fr.numerator, den.bit_length() - 1)

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, 2**self.exponent)

    def __add__(self, other):
        return DyadicRational.from_fraction(self.to_fraction() + Fraction(other.to_fraction() if isinstance(other, DyadicRational) else other))

    def __float__(self):
        return self.numerator / 2**self.exponent

    def nu2(self):
        """Extended valuation ``nu2(num) - exponent``; ``math.inf`` at zero."""
        return nu2(self.numerator) - self.exponent

    def __str__(self):
        return f"{self.numerator}/2^{self.exponent}" if self.exponent else str(self.numerator)


def nu2_rational(r) -> float:
    """``nu2(p/q) = nu2(p) - nu2(q)`` for any nonzero rational."""
    fr = Fraction(r)
    if fr == 0:
        return math.inf
    return nu2(fr.numerator) - nu2(fr.denominator)


def dyadic_turns(phase: float, tol: float = PHASE_TOL, max_m: int = MAX_PRECISION) -> DyadicRational:
    """Write ``phase = 2 pi t`` with dyadic ``t`` in [0, 1), smallest denominator first."""
    turns = phase / (2 * np.pi)
    for m in range(max_m + 1):
        t = round(turns * 2**m)
        if abs(2 * np.pi * (turns * 2**m - t) / 2**m) <= tol:
            return DyadicRational(t % 2**m, m)
    raise NotRepresentableError(f"phase {float(phase):.12g} is not a dyadic multiple of 2*pi (up to 2^-{max_m})")


_PI_FORM = re.compile(r"^\s*([+-]?\d*)\s*\*?\s*pi\s*(?:/\s*(\d+))?\s*$")


def parse_angle(text: str):
    """Parse an angle string; return ``(radians, turns)`` with ``turns`` a
    :class:`DyadicRational` fraction of 2 pi when the input is exact, else None.

    Accepted: ``"3/16*2pi"``, ``"1/2^4*2pi"``, ``"pi/4"``, ``"-3pi/8"``, plain
    radians such as ``"0.3"``.
    """
    s = text.strip().replace(" ", "")
    if s.endswith("*2pi"):
        body = s[: -len("*2pi")]
        body = re.sub(r"2\^(\d+)", lambda mo: str(2 ** int(mo.group(1))), body)
        fr = Fraction(body)
        turns = DyadicRational.from_fraction(fr)
        return float(2 * np.pi * fr), turns
    mo = _PI_FORM.match(s)
    if mo:
        coef = mo.group(1)
        num = int(coef) if coef not in ("", "+", "-") else (-1 if coef == "-" else 1)
        den = int(mo.group(2) or 1)
        fr = Fraction(num, 2 * den)
        try:
            turns = DyadicRational.from_fraction(fr)
        except NotRepresentableError:
            turns = None
        return float(2 * np.pi * fr), turns
    value = float(s)
    return value, (DyadicRational(0) if value == 0 else None)


def format_turns(t: DyadicRational) -> str:
    return f"{t.numerator}/{2 ** t.exponent}*2pi"


# ---------------------------------------------------------------------------
# phase polynomials


def subsets(n: int):
    """Nonempty subsets of {1..n} ordered by size, then lexicographically."""
    return [s for r in range(1, n + 1) for s in combinations(range(1, n + 1), r)]


_TERM = re.compile(r"^(-?\d*)\*?((?:z\d+\*?)+)$")


@dataclass(frozen=True)
class PhasePolynomial:
    n: int
    m: int
    coeffs: tuple  # one entry per subsets(n), reduced mod 2^m

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("precision must be positive")
        c = tuple(int(a) % 2**self.m for a in self.coeffs)
        if len(c) != 2**self.n - 1:
            raise ValueError(f"expected {2 ** self.n - 1} coefficients for n={self.n}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_terms(cls, n: int, m: int, terms: dict) -> "PhasePolynomial":
        """``terms`` maps subsets (tuples of 1-based sites) to coefficients."""
        idx = {s: i for i, s in enumerate(subsets(n))}
        c = [0] * len(idx)
        for s, a in terms.items():
            c[idx[tuple(sorted(s))]] += a
        return cls(n, m, tuple(c))

    @classmethod
    def parse(cls, text: str, n: int, m: int) -> "PhasePolynomial":
        """Parse e.g. ``"z1 + 2 z1 z2"`` or ``"3*z1+z1*z2*z3"``."""
        terms = {}
        for raw in text.replace(" ", "").replace("-", "+-").split("+"):
            if not raw:
                continue
            mo = _TERM.match(raw)
            if not mo:
                raise ValueError(f"cannot parse term {raw!r}")
            coef = mo.group(1)
            coef = int(coef) if coef not in ("", "-") else (-1 if coef == "-" else 1)
            key = tuple(sorted({int(i) for i in re.findall(r"z(\d+)", mo.group(2))}))
            if any(i < 1 or i > n for i in key):
                raise ValueError(f"variable index out of range in {raw!r}")
            terms[key] = terms.get(key, 0) + coef
        return cls.from_terms(n, m, terms)

    def terms(self) -> dict:
        return {s: a for s, a in zip(subsets(self.n), self.coeffs) if a}

    def values(self) -> np.ndarray:
        """``f(z) mod 2^m`` for every ``z`` in computational order."""
        return evaluation_matrix(self.n) @ np.array(self.coeffs, dtype=np.int64) % 2**self.m

    def __str__(self):
        parts = []
        for s, a in self.terms().items():
            mono = " ".join(f"z{i}" for i in s)
            parts.append(mono if a == 1 else f"{a} {mono}")
        return " + ".join(parts) if parts else "0"


def evaluation_matrix(n: int) -> np.ndarray:
    """``E[z, S] = prod_{i in S} z_i`` for z in computational order."""
    subs = subsets(n)
    rows = []
    for z in product((0, 1), repeat=n):
        rows.append([int(all(z[i - 1] for i in s)) for s in subs])
    return np.array(rows, dtype=np.int64)


def term_levels(coeffs, m: int, n: int):
    """Per-term contributions ``m - nu2(a_S) - 1 + |S|``; ``-inf`` for ``a_S = 0``."""
    out = []
    for s, a in zip(subsets(n), coeffs):
        out.append(-math.inf if a % 2**m == 0 else m - nu2(a % 2**m) - 1 + len(s))
    return out


def cgk_level(f: PhasePolynomial) -> int:
    """Lowest Clifford-hierarchy level containing ``D_f`` (at least 1)."""
    return int(max([1] + [v for v in term_levels(f.coeffs, f.m, f.n) if v != -math.inf]))


def diagonal_gate(f: PhasePolynomial) -> np.ndarray:
    return np.diag(np.exp(2j * np.pi * f.values() / 2**f.m))


def interpolate_phase_polynomial(diag_phases, m: int, tol: float = PHASE_TOL) -> PhasePolynomial:
    """Recover the unique coefficients from the ``2^n`` diagonal phases.

    The phase at ``|0..0>`` is treated as global and removed.
    """
    ph = np.asarray(diag_phases, dtype=float)
    n = int(round(math.log2(ph.size)))
    if 2**n != ph.size:
        raise ValueError("number of phases must be a power of two")
    scaled = ph * 2**m / (2 * np.pi)
    vals = np.round(scaled).astype(np.int64)
    for i, (s, v) in enumerate(zip(scaled, vals)):
        if abs(2 * np.pi * (s - v) / 2**m) > tol:
            raise NotRepresentableError(f"entry {i} (phase {ph[i]:.12g}) is not a multiple of 2*pi/2^{m}")
    vals = (vals - vals[0]) % 2**m
    coeffs = []
    for s in subsets(n):
        acc = 0
        for r in range(len(s) + 1):
            for t in combinations(s, r):
                idx = sum(2 ** (n - i) for i in t)
                acc += (-1) ** (len(s) - r) * int(vals[idx])
        coeffs.append(acc)
    return PhasePolynomial(n, m, tuple(coeffs))


def phase_vector_from_polynomial(f: PhasePolynomial) -> PhaseVector:
    """``alpha_{z,x} = 2 pi f(z_1, .., z_{n-1}, x) / 2^m``."""
    return PhaseVector(f.n, 2, 2 * np.pi * f.values() / 2**f.m)


def polynomial_from_phase_vector(pv: PhaseVector, tol: float = PHASE_TOL) -> PhasePolynomial:
    if pv.d != 2:
        raise ValueError("phase polynomials are defined for qubits")
    turns = []
    for lab, a in zip(labels(pv.n, 2), pv.alphas):
        try:
            turns.append(dyadic_turns(a, tol))
        except NotRepresentableError as exc:
            raise NotRepresentableError(f"alpha{lab}: {exc}") from None
    m = max(1, max(t.exponent for t in turns))
    return interpolate_phase_polynomial(pv.alphas, m, tol)


def level_of_measurement(pv: PhaseVector, tol: float = PHASE_TOL) -> int:
    """Clifford level of ``D_alpha``, an upper bound on the orbit basis' localization level."""
    return cgk_level(polynomial_from_phase_vector(pv, tol))


def fiducial_from_polynomial(f: PhasePolynomial) -> np.ndarray:
    return fiducial_from_phases(phase_vector_from_polynomial(f))


def measurement_unitary_from_polynomial(f: PhasePolynomial) -> np.ndarray:
    ob = orbit(tetra_group(f.n, 2), fiducial_from_polynomial(f))
    if not check_orthonormal(ob).passed:
        raise RuntimeError("orbit of a phase-polynomial fiducial is not orthonormal")
    return measurement_unitary(ob)


# ---------------------------------------------------------------------------
# the EJM interpolating family


def _turns_of(theta) -> DyadicRational:
    if isinstance(theta, DyadicRational):
        return theta
    if isinstance(theta, Fraction):
        return DyadicRational.from_fraction(theta)
    return dyadic_turns(float(theta))


def ejm_family_polynomial(theta) -> PhasePolynomial:
    """Polynomial of ``diag(1, i, -i, i e^{i theta})``.

    ``theta`` is either radians or a :class:`DyadicRational` in turns
    (``theta / 2 pi``).
    """
    t = _turns_of(theta)
    m = max(2, t.exponent)
    ell = t.numerator * 2 ** (m - t.exponent)
    q = 2 ** (m - 2)
    return PhasePolynomial.from_terms(2, m, {(1,): -q, (2,): q, (1, 2): ell + q})


def ejm_family_level(theta) -> int:
    """``k = 1 - nu2(theta / 2 pi + 1/4)``, floored at 2.

    The floor comes from the linear terms; it never binds for theta in
    [0, pi/2].
    """
    t = _turns_of(theta)
    v = nu2_rational(t.to_fraction() + Fraction(1, 4))
    return 2 if v == math.inf else max(2, 1 - int(v))


# ---------------------------------------------------------------------------
# recursive Clifford-hierarchy oracle (qubits)

HIERARCHY_ENVELOPE = {1: 6, 2: 4, 3: 3}


def pauli_words(n: int, include_identity: bool = False) -> np.ndarray:
    """All ``4^n`` Pauli strings (no phases) as a stacked array, identity first."""
    single = [np.eye(2, dtype=complex), pauli_x(2), 1j * pauli_x(2) @ pauli_z(2), pauli_z(2)]
    words = np.array([kron_all(w) for w in product(single, repeat=n)])
    return words if include_identity else words[1:]


def is_pauli_proportional(w, tol: float = PHASE_TOL) -> np.ndarray:
    """For unitary ``w`` (or a stack): is it ``c * P`` with ``|c| = 1``?"""
    w = np.asarray(w, dtype=complex)
    single = w.ndim == 2
    w = w[None] if single else w
    dim = w.shape[-1]
    n = int(round(math.log2(dim)))
    paulis = pauli_words(n, include_identity=True)
    overlaps = np.abs(np.einsum("pij,bij->bp", paulis.conj(), w)) / dim
    ok = np.max(overlaps, axis=1) >= 1 - tol
    return bool(ok[0]) if single else ok


def hierarchy_work(n: int, k: int) -> int:
    """Rough flop count of the recursive membership test."""
    return (4**n - 1) ** max(k - 1, 0) * 8**n * 4**n


def hierarchy_member(u, k: int, n: int, tol: float = PHASE_TOL, force: bool = False) -> bool:
    """Recursive test of ``u`` in ``C_k``.

    ``C_1`` is the Pauli group up to any unit-modulus scalar, and ``u`` is in
    ``C_k`` iff ``u P u^dagger`` is in ``C_{k-1}`` for every Pauli word ``P``.
    All non-identity words are used because ``C_k`` is not closed under
    products for ``k >= 3``.
    """
    if k < 1:
        return False
    if not force and k > HIERARCHY_ENVELOPE.get(n, 0):
        raise CostGuardError(
            f"recursive membership for n={n}, k={k} exceeds the supported envelope "
            f"(~{hierarchy_work(n, k):.2e} flops); pass force=True to run anyway",
            hierarchy_work(n, k),
        )
    u = np.asarray(u, dtype=complex)
    paulis = pauli_words(n)
    batch = u[None]
    for _ in range(k - 1):
        conj = np.einsum("bij,pjk,blk->bpil", batch, paulis, batch.conj())
        batch = conj.reshape(-1, u.shape[0], u.shape[0])
    return bool(np.all(is_pauli_proportional(batch, tol)))


def clifford_level(u, n: int, max_k: int = None, tol: float = PHASE_TOL) -> int:
    """Smallest ``k`` with ``u`` in ``C_k`` inside the envelope; None if none found."""
    top = max_k or HIERARCHY_ENVELOPE.get(n, 0)
    for k in range(1, top + 1):
        if hierarchy_member(u, k, n, tol):
            return k
    return None
