"""Permutation-invariant and rectangular fiducials for more qubits.

A fiducial invariant under qubit permutations exists only for odd n: for
even n the two orthogonality systems force incompatible values on the middle
Dicke weight. A real rectangular family works for every n instead.
"""

from orbitbasis import check_orthonormal, geometry_report, orbit, ppi_solve, rect_fiducial, tetra_group
from orbitbasis.fiducial import ppi_state

for n in range(2, 8):
    sol = ppi_solve(n)
    if sol:
        basis = orbit(tetra_group(n), ppi_state(sol))
        site = geometry_report(basis).per_site[0]
        print(f"n={n}: permutation-invariant basis, orthonormal {check_orthonormal(basis).passed}, {site.cls.value}")
    else:
        print(
            f"n={n}: impossible, middle weight must be {sol.middle_from_diagonal} and {sol.middle_from_flip} at once"
        )

print("\nRectangular family:")
for n in range(2, 9):
    basis = orbit(tetra_group(n), rect_fiducial(n))
    site = geometry_report(basis).per_site[0]
    sides = " x ".join(f"{s:.4f}" for s in site.sides)
    print(f"  n={n}: {site.cls.value:<12} sides {sides:<18} orthonormal {check_orthonormal(basis, 1e-10).passed}")
