"""Tetrahedral measurement bases as Pauli-group orbits of a single fiducial state."""

from .basis import OrbitBasis, check_completeness, check_orthonormal, measurement_unitary, orbit
from .classify import CensusEntry, census, enumerate_polynomials, fig3_data
from .clifford import (
    DyadicRational,
    PhasePolynomial,
    cgk_level,
    diagonal_gate,
    ejm_family_level,
    hierarchy_member,
    interpolate_phase_polynomial,
    level_of_measurement,
    nu2,
)
from .fiducial import PhaseVector, ejm_theta, fiducial_from_phases, normal_form_unitary, ppi_solve, rect_fiducial
from .geometry import GeometryClass, bloch_vector, geometry_report
from .pauli import GroupDescriptor, PauliWord, eigenbasis, tetra_group

__version__ = "0.1.0"

__all__ = [
    "CensusEntry",
    "DyadicRational",
    "GeometryClass",
    "GroupDescriptor",
    "OrbitBasis",
    "PauliWord",
    "PhasePolynomial",
    "PhaseVector",
    "bloch_vector",
    "census",
    "cgk_level",
    "check_completeness",
    "check_orthonormal",
    "diagonal_gate",
    "eigenbasis",
    "ejm_family_level",
    "ejm_theta",
    "enumerate_polynomials",
    "fiducial_from_phases",
    "fig3_data",
    "geometry_report",
    "hierarchy_member",
    "interpolate_phase_polynomial",
    "level_of_measurement",
    "measurement_unitary",
    "normal_form_unitary",
    "nu2",
    "orbit",
    "ppi_solve",
    "rect_fiducial",
    "tetra_group",
]
