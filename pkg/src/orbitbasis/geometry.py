"""Bloch geometry of single-qubit marginals along an orbit basis.

Every element of the orbit group acts on a single qubit as I, X, Y or Z, so
the Bloch points of one site are the sign-pattern images of a single
representative ``(x, y, z)``::

    (x, y, z), (x, -y, -z), (-x, y, -z), (-x, -y, z)

The geometry class depends only on which of ``|x|, |y|, |z|`` vanish or
coincide.
"""

import enum
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .linalg import TOL_GEOM, partial_trace
from .pauli import pauli_x, pauli_y, pauli_z

SIGN_PATTERNS = np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], dtype=float)
_PAULIS = (pauli_x(2), pauli_y(), pauli_z(2))


class GeometryClass(str, enum.Enum):
    POINT = "Point"
    LINE_SEGMENT = "LineSegment"
    RECTANGLE = "Rectangle"
    SQUARE = "Square"
    REGULAR_TETRAHEDRON = "RegularTetrahedron"
    DISPHENOID = "Disphenoid"


class UnsupportedDimensionError(ValueError):
    pass


class MalformedOrbitError(ValueError):
    """The Bloch points are not the sign-pattern orbit of a single vector."""


def bloch_vector(state, site: int, d: int = 2) -> np.ndarray:
    """``(Tr rho X, Tr rho Y, Tr rho Z)`` of the marginal on ``site`` (0-based)."""
    if d != 2:
        raise UnsupportedDimensionError("Bloch vectors are defined for qubits only")
    rho = partial_trace(state, site, 2)
    return np.array([np.trace(rho @ p).real for p in _PAULIS])


def bloch_vectors(state, n: int) -> np.ndarray:
    """Bloch vectors of all ``n`` sites, shape ``(n, 3)``."""
    return np.array([bloch_vector(state, i) for i in range(n)])


def bloch_vectors_batch(states, n: int) -> np.ndarray:
    """Vectorized Bloch vectors for a stack of n-qubit states; shape ``(B, n, 3)``."""
    psi = np.asarray(states, dtype=complex).reshape((-1,) + (2,) * n)
    out = np.empty((psi.shape[0], n, 3))
    for i in range(n):
        t = np.moveaxis(psi, i + 1, 1).reshape(psi.shape[0], 2, -1)
        rho01 = np.einsum("bj,bj->b", t[:, 0], t[:, 1].conj())
        p0 = np.einsum("bj,bj->b", t[:, 0], t[:, 0].conj()).real
        p1 = np.einsum("bj,bj->b", t[:, 1], t[:, 1].conj()).real
        # rho = [[p0, rho01], [rho01*, p1]]; Tr(rho X) = 2 Re rho01, Tr(rho Y) = -2 Im rho01
        out[:, i, 0] = 2 * rho01.real
        out[:, i, 1] = -2 * rho01.imag
        out[:, i, 2] = p0 - p1
    return out


def two_qubit_bloch(pv):
    """Closed-form Bloch vectors ``(r1, r2)`` of a two-qubit tetrahedral fiducial."""
    if pv.n != 2 or pv.d != 2:
        raise ValueError("closed form holds for two qubits only")
    a00, a01, a10, a11 = pv.alphas
    r_plus = np.array([np.cos(a10 - a00), np.sin(a10 - a01), np.cos(a01 - a00)])
    r_minus = np.array([np.cos(a11 - a01), np.sin(a11 - a00), -np.cos(a11 - a10)])
    return (r_plus + r_minus) / 2, (r_plus - r_minus) / 2


def tetra_volume(p) -> float:
    """Volume of the sign-pattern tetrahedron of ``p``: ``(8/3)|x y z|``."""
    x, y, z = np.asarray(p, dtype=float)
    return 8.0 / 3.0 * abs(x * y * z)


def sign_images(p) -> np.ndarray:
    return SIGN_PATTERNS * np.asarray(p, dtype=float)


def snap(p, tol: float = TOL_GEOM) -> np.ndarray:
    p = np.array(p, dtype=float)
    p[np.abs(p) <= tol] = 0.0
    return p


@dataclass(frozen=True)
class SiteGeometry:
    representative: np.ndarray = field(repr=False)
    points: np.ndarray = field(repr=False)
    cls: GeometryClass
    circumradius: float
    edge_lengths: tuple
    volume: float
    orientation: int

    @property
    def sides(self) -> tuple:
        """Nonzero extents ``2|r_i|`` along the coordinate axes, ascending."""
        a = 2 * np.abs(self.representative)
        return tuple(sorted(float(v) for v in a if v > 0))

    def signature(self, decimals: int = 12) -> tuple:
        return (
            self.cls.value,
            round(self.circumradius, decimals) + 0.0,
            tuple(round(e, decimals) + 0.0 for e in self.edge_lengths),
        )


def classify_vector(p, tol: float = TOL_GEOM) -> GeometryClass:
    a = np.abs(snap(p, tol))
    nz = a[a > 0]
    if nz.size == 0:
        return GeometryClass.POINT
    if nz.size == 1:
        return GeometryClass.LINE_SEGMENT
    if nz.size == 2:
        return GeometryClass.SQUARE if abs(nz[0] - nz[1]) <= tol else GeometryClass.RECTANGLE
    if np.ptp(nz) <= tol:
        return GeometryClass.REGULAR_TETRAHEDRON
    return GeometryClass.DISPHENOID


def edge_lengths(p) -> tuple:
    imgs = sign_images(p)
    return tuple(sorted(float(np.linalg.norm(imgs[i] - imgs[j])) for i, j in combinations(range(4), 2)))


def site_geometry(p, tol: float = TOL_GEOM) -> SiteGeometry:
    """Classify the sign-pattern orbit of a single representative point."""
    p = snap(p, tol)
    x, y, z = p
    return SiteGeometry(
        representative=p,
        points=dedupe(sign_images(p), tol),
        cls=classify_vector(p, tol),
        circumradius=float(np.linalg.norm(p)),
        edge_lengths=edge_lengths(p),
        volume=tetra_volume(p),
        orientation=int(np.sign(x * y * z)),
    )


def dedupe(points, tol: float = TOL_GEOM) -> np.ndarray:
    out = []
    for q in np.asarray(points, dtype=float):
        if not any(np.max(np.abs(q - r)) <= tol for r in out):
            out.append(q)
    return np.array(out)


def classify_site_geometry(points, tol: float = TOL_GEOM) -> SiteGeometry:
    """Classify a set of Bloch points that must be one sign-pattern orbit.

    The first point is taken as representative. Duplicates are allowed.
    """
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if pts.shape[1] != 3 or pts.shape[0] == 0:
        raise MalformedOrbitError(f"expected Bloch points of shape (k, 3), got {pts.shape}")
    imgs = sign_images(snap(pts[0], tol))
    for q in pts:
        if np.min(np.max(np.abs(imgs - q), axis=1)) > tol:
            raise MalformedOrbitError(f"point {q} is not a sign-pattern image of {pts[0]}")
    for q in imgs:
        if np.min(np.max(np.abs(pts - q), axis=1)) > tol:
            raise MalformedOrbitError(f"sign-pattern image {q} missing from the point set")
    return site_geometry(pts[0], tol)


@dataclass(frozen=True)
class GeometryReport:
    per_site: tuple

    def key(self, decimals: int = 12, sort_sites: bool = True) -> tuple:
        sigs = [s.signature(decimals) for s in self.per_site]
        return tuple(sorted(sigs)) if sort_sites else tuple(sigs)

    @property
    def classes(self) -> tuple:
        return tuple(s.cls for s in self.per_site)


def geometry_report(ob, tol: float = TOL_GEOM) -> GeometryReport:
    """Per-site geometry of a qubit orbit basis.

    The representative of each site is the fiducial's Bloch vector; all
    orbit states must land on its sign-pattern images.
    """
    if ob.d != 2:
        raise UnsupportedDimensionError("geometry is defined for qubits only")
    sites = []
    for i in range(ob.n):
        pts = np.array([bloch_vector(s, i) for s in ob.states])
        uniq = dedupe(pts, tol)
        if len(uniq) > 4:
            raise MalformedOrbitError(f"site {i} has {len(uniq)} distinct Bloch points")
        sites.append(classify_site_geometry(pts, tol))
    return GeometryReport(tuple(sites))


def report_from_bloch(vectors, tol: float = TOL_GEOM) -> GeometryReport:
    """Geometry report from the fiducial's per-site Bloch vectors alone."""
    return GeometryReport(tuple(site_geometry(v, tol) for v in np.asarray(vectors, dtype=float)))
