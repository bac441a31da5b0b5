"""Published two-qubit level-4 representatives, transcribed as numbers.

Each row: precision, polynomial, fiducial amplitudes, Bloch vector of each
qubit, and the geometry label used in the table.
"""

import numpy as np

c, s = np.cos(np.pi / 8), np.sin(np.pi / 8)
r2 = np.sqrt(2)
h = 1 / (2 * r2)


def e(x):
    return np.exp(1j * x)


LEVEL4_ROWS = [
    (3, "z1 + z2 + z1 z2", [e(np.pi / 8) * c / r2, 0.5, 0.5j, e(-3 * np.pi / 8) * s / r2],
     [[h, h, h], [h, -h, h]], "Regular tetrahedra"),
    (3, "z1 z2", [1 / r2, e(-3 * np.pi / 8) * s / r2, e(np.pi / 8) * c / r2, 0],
     [[c**2, h, s**2], [s**2, -h, c**2]], "Irregular tetrahedra"),
    (4, "z1 + z2 + 2 z1 z2", [(1 + c + 1j * s) * h, (c + 1j * s - 1j) * h, (c + 1j * s + 1j) * h, (1 - c - 1j * s) * h],
     [[c / r2, 0.5, s / r2], [s / r2, -0.5, c / r2]], "Irregular tetrahedra"),
    (4, "z1 + z2 + 4 z1 z2", [(1 + c + 1j * s) * h, e(np.pi / 8) * (1 + s - 1j * c) * h, e(np.pi / 8) * (1 - s + 1j * c) * h, (1 - c - 1j * s) * h],
     [[s / r2, h, c / r2], [c / r2, -h, s / r2]], "Irregular tetrahedra"),
    (4, "z1 + z2", [(1 + c + 1j * s) * h, e(np.pi / 8) * (1 - c - 1j * s) * h, e(np.pi / 8) * (1 + c + 1j * s) * h, (1 - c - 1j * s) * h],
     [[c, h, 0], [0, -h, c]], "Rectangles"),
    (4, "3 z1 + 3 z2", [(1 + s + 1j * c) * h, e(3 * np.pi / 8) * (1 - s - 1j * c) * h, e(3 * np.pi / 8) * (1 + s + 1j * c) * h, (1 - s - 1j * c) * h],
     [[s, h, 0], [0, -h, s]], "Rectangles"),
    (4, "z1 + 4 z2", [e(np.pi / 4) / 2, e(-np.pi / 8) / 2, e(3 * np.pi / 8) / 2, e(-np.pi / 4) / 2],
     [[c, 0, 0], [0, -c, 0]], "Line segments"),
    (4, "3 z1 + 4 z2", [e(np.pi / 4) / 2, e(np.pi / 8) / 2, e(5 * np.pi / 8) / 2, e(-np.pi / 4) / 2],
     [[s, 0, 0], [0, -s, 0]], "Line segments"),
    (4, "z1 + 2 z1 z2", [1 / r2, e(-np.pi / 4) * s / r2, e(np.pi / 4) * c / r2, 0],
     [[c / r2, c / r2, s**2], [s / r2, -s / r2, c**2]], "Different tetrahedra"),
    (4, "z1 + 2 z2", [e(np.pi / 8) * c / r2, e(-np.pi / 4) * s / r2, e(np.pi / 4) * c / r2, e(-3 * np.pi / 8) * s / r2],
     [[c, s / r2, 0], [0, -c / r2, 1 / r2]], "Different rectangles"),
    (4, "3 z1 + 2 z2", [e(np.pi / 8) * c / r2, s / r2, 1j * c / r2, e(-3 * np.pi / 8) * s / r2],
     [[s, c / r2, 0], [0, -s / r2, 1 / r2]], "Different rectangles"),
    (4, "z1 + 3 z2", [(1 + s + 1j * c) * h, (c + 1j * s - 1j) * h, (c + 1j * s + 1j) * h, (1 - s - 1j * c) * h],
     [[c, s**2, 0], [0, -c**2, s]], "Different rectangles"),
]

# the count quoted alongside the table; the table itself lists len(LEVEL4_ROWS) rows
QUOTED_LEVEL4_CLASSES = 11

LEVEL3_REPRESENTATIVES = [
    (2, "z1 z2", "RegularTetrahedron", [0.5, 0.5, 0.5]),
    (3, "z1 + z2", "Rectangle", [1 / r2, 0.5, 0.0]),
    (3, "z1 + 2 z2", "LineSegment", [1 / r2, 0.0, 0.0]),
]

HALF_EJM_FIDUCIAL = 0.5 * np.array([1, 0, 0, (1 - 1j) / 2, (1 + 1j) / 2, 1, 1, 0])
