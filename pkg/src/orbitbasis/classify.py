"""Level-k census of tetrahedral qubit bases built from phase polynomials.

Candidates are enumerated over the admissible precisions, filtered by the
level formula on coefficients alone, and only survivors get geometry. The
geometry pass is vectorized on fiducial Bloch vectors; exact reports are
built afterwards for one representative per class.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

import numpy as np

from .basis import check_orthonormal, orbit
from .clifford import (
    DyadicRational,
    PhasePolynomial,
    cgk_level,
    diagonal_gate,
    ejm_family_level,
    evaluation_matrix,
    fiducial_from_polynomial,
    hierarchy_member,
    HIERARCHY_ENVELOPE,
    nu2,
    subsets,
)
from .geometry import GeometryReport, bloch_vectors_batch, geometry_report
from .pauli import eigenbasis_matrix, tetra_group

SUPPORTED_SITES = (2, 3)
MAX_CANDIDATES = 50_000_000
CHUNK = 1 << 18
KEY_DECIMALS = 12


class EnvelopeError(ValueError):
    """Requested census is outside the supported size envelope."""

    def __init__(self, message, work):
        super().__init__(message)
        self.work = work


@dataclass(frozen=True)
class CensusEntry:
    polynomial: PhasePolynomial
    fiducial: np.ndarray
    report: GeometryReport
    level: int
    dedup_key: tuple

    @property
    def m(self):
        return self.polynomial.m

    @property
    def is_product(self) -> bool:
        """Every marginal is pure, so the fiducial is fully separable."""
        return all(abs(s.circumradius - 1) <= 1e-9 for s in self.report.per_site)

    def bloch_representatives(self):
        return np.array([s.representative for s in self.report.per_site])


def precisions(n: int, k: int):
    """An odd coefficient forces ``m <= k <= m - 1 + n``."""
    return list(range(max(1, k - n + 1), k + 1))


def allowed_values(n: int, k: int, m: int):
    """Per-subset coefficient values whose own contribution stays within ``k``."""
    out = []
    for s in subsets(n):
        vals = [a for a in range(2**m) if a == 0 or m - nu2(a) - 1 + len(s) <= k]
        out.append(np.array(vals, dtype=np.int64))
    return out


def work_estimate(n: int, k: int) -> int:
    """Number of coefficient tuples scanned before the level filter."""
    return sum(math.prod(len(v) for v in allowed_values(n, k, m)) for m in precisions(n, k))


def check_envelope(n: int, k: int):
    if n not in SUPPORTED_SITES or k < 1:
        raise EnvelopeError(f"census supports n in {SUPPORTED_SITES} and k >= 1, got n={n}, k={k}", None)
    work = work_estimate(n, k)
    if work > MAX_CANDIDATES:
        raise EnvelopeError(
            f"census n={n}, k={k} would scan {work:,} coefficient tuples (limit {MAX_CANDIDATES:,})", work
        )
    return work


def _split(allowed):
    """Index where the vectorized tail starts so that a chunk stays below CHUNK."""
    for j in range(len(allowed) + 1):
        if math.prod(len(v) for v in allowed[j:]) <= CHUNK:
            return j
    return len(allowed)


def _tail_grid(tail):
    if not tail:
        return np.zeros((1, 0), dtype=np.int64)
    idx = np.indices([len(v) for v in tail]).reshape(len(tail), -1).T
    return np.column_stack([v[idx[:, i]] for i, v in enumerate(tail)])


def _level_filter(block, n, k, m):
    sizes = np.array([len(s) for s in subsets(n)])
    nz = block != 0
    low = np.where(nz, block & -block, 1)
    val = np.log2(low).round().astype(np.int64)
    contrib = np.where(nz, m - val - 1 + sizes, -1)
    level = np.maximum(contrib.max(axis=1), 1)
    has_odd = np.any(block & 1, axis=1)
    return block[has_odd & (level == k)]


def _tasks(n, k):
    for m in precisions(n, k):
        allowed = allowed_values(n, k, m)
        j = _split(allowed)
        for prefix in product(*[v.tolist() for v in allowed[:j]]):
            yield m, prefix


def _task_block(n, k, m, prefix):
    allowed = allowed_values(n, k, m)
    tail = _tail_grid(allowed[len(prefix):])
    head = np.broadcast_to(np.array(prefix, dtype=np.int64), (tail.shape[0], len(prefix)))
    return _level_filter(np.hstack([head, tail]), n, k, m)


def coefficient_blocks(n: int, k: int):
    """Yield ``(m, block)`` with level-k coefficient rows, in enumeration order."""
    check_envelope(n, k)
    for m, prefix in _tasks(n, k):
        block = _task_block(n, k, m, prefix)
        if len(block):
            yield m, block


def enumerate_polynomials(n: int, k: int):
    """All level-k phase polynomials with an odd coefficient, ``m`` ascending then
    coefficients lexicographic (coefficients ordered as :func:`subsets`)."""
    for m, block in coefficient_blocks(n, k):
        for row in block:
            yield PhasePolynomial(n, m, tuple(int(a) for a in row))


def count_polynomials(n: int, k: int) -> int:
    return sum(len(b) for _, b in coefficient_blocks(n, k))


def fiducials_batch(block, n: int, m: int) -> np.ndarray:
    """Fiducials of many polynomials at once; rows are states."""
    vals = block @ evaluation_matrix(n).T % 2**m
    return np.exp(2j * np.pi * vals / 2**m) @ eigenbasis_matrix(n).T / np.sqrt(2**n)


def abs_keys(bloch, sort_sites=True) -> np.ndarray:
    """Rounded sorted ``|x|,|y|,|z|`` per site; it determines every site invariant."""
    a = np.sort(np.abs(bloch), axis=2).round(KEY_DECIMALS) + 0.0
    if sort_sites:
        order = np.lexsort(a.transpose(2, 0, 1)[::-1], axis=1)
        a = np.take_along_axis(a, order[:, :, None], axis=1)
    return a.reshape(len(a), -1)


def _task_candidates(args):
    n, k, m, prefix, sort_sites = args
    block = _task_block(n, k, m, prefix)
    found = {}
    if len(block) == 0:
        return found
    keys = abs_keys(bloch_vectors_batch(fiducials_batch(block, n, m), n), sort_sites)
    _, first = np.unique(keys, axis=0, return_index=True)
    for i in sorted(first):
        found.setdefault(tuple(keys[i]), (m, tuple(int(a) for a in block[i])))
    return found


def _candidates(n, k, sort_sites, workers):
    tasks = [(n, k, m, prefix, sort_sites) for m, prefix in _tasks(n, k)]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_task_candidates, tasks, chunksize=max(1, len(tasks) // (8 * workers))))
    else:
        results = map(_task_candidates, tasks)
    merged = {}
    for found in results:
        for key, rep in found.items():
            if key not in merged or rep < merged[key]:
                merged[key] = rep
    return merged


def make_entry(f: PhasePolynomial, sort_sites: bool = True) -> CensusEntry:
    fid = fiducial_from_polynomial(f)
    ob = orbit(tetra_group(f.n, 2), fid)
    if not check_orthonormal(ob, 1e-10).passed:
        raise RuntimeError(f"orbit of {f} is not orthonormal")
    rep = geometry_report(ob)
    return CensusEntry(f, fid, rep, cgk_level(f), rep.key(KEY_DECIMALS, sort_sites))


def census(n: int, k: int, sort_sites: bool = True, workers: int = 1, include_product: bool = False):
    """One representative per geometry class at level ``k``, sorted by ``(m, coefficients)``.

    Fully separable fiducials are dropped unless ``include_product``. With
    ``sort_sites`` the key ignores which site carries which shape.
    Representatives are the first polynomial of each class in enumeration
    order, so results do not depend on ``workers``.
    """
    check_envelope(n, k)
    reps = sorted(_candidates(n, k, sort_sites, workers).values())
    entries = {}
    for m, coeffs in reps:
        e = make_entry(PhasePolynomial(n, m, coeffs), sort_sites)
        if include_product or not e.is_product:
            entries.setdefault(e.dedup_key, e)
    return sorted(entries.values(), key=lambda e: (e.m, e.polynomial.coeffs))


def find_class(entries, f: PhasePolynomial, sort_sites: bool = True):
    """Census entry sharing the geometry class of ``f``, or None."""
    key = make_entry(f, sort_sites).dedup_key
    return next((e for e in entries if e.dedup_key == key), None)


def verify_sample(n: int, k: int, fraction: float = 0.01, seed: int = 0, max_checks: int = None):
    """Re-check a random sample of the stream with the recursive oracle.

    Returns ``(checked, failures)``; only possible inside the oracle envelope.
    """
    if k > HIERARCHY_ENVELOPE.get(n, 0):
        raise EnvelopeError(f"recursive oracle unavailable for n={n}, k={k}", None)
    rng = np.random.default_rng(seed)
    checked, failures = 0, []
    for f in enumerate_polynomials(n, k):
        if rng.random() >= fraction:
            continue
        d = diagonal_gate(f)
        if not hierarchy_member(d, k, n) or (k > 1 and hierarchy_member(d, k - 1, n)):
            failures.append(f)
        checked += 1
        if max_checks and checked >= max_checks:
            break
    return checked, failures


def fig3_data(max_m: int = 8):
    """``(theta, k)`` for every dyadic ``theta = 2 pi l / 2^m`` in ``[0, pi/2]``, ``m <= max_m``."""
    if not 2 <= max_m <= 12:
        raise ValueError("max_m must lie in 2..12")
    out = []
    for ell in range(2 ** (max_m - 2) + 1):
        t = DyadicRational(ell, max_m)
        out.append((2 * np.pi * float(t), ejm_family_level(t)))
    return out
