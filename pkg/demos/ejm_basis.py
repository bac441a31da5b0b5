"""Build the elegant joint measurement from a single fiducial and look at it.

The four basis states are the orbit of one two-qubit state under the group
<ZZ, XX>. Each marginal traces out a regular tetrahedron in the Bloch ball,
and the two tetrahedra are mirror images.
"""

import numpy as np

from orbitbasis import check_completeness, check_orthonormal, ejm_theta, geometry_report, orbit, tetra_group
from orbitbasis.geometry import bloch_vector

group = tetra_group(2)
basis = orbit(group, ejm_theta(0.0))

ortho = check_orthonormal(basis)
print(f"orthonormal: {ortho.passed} (largest overlap {ortho.max_offdiag:.1e})")
print(f"complete:    {check_completeness(group, basis.fiducial).passed}")

print("\nBloch points of each basis state:")
for label, state in zip(basis.labels, basis.states):
    r1, r2 = bloch_vector(state, 0), bloch_vector(state, 1)
    print(f"  {label}  site 1 {np.round(r1, 3)}  site 2 {np.round(r2, 3)}")

report = geometry_report(basis)
for i, site in enumerate(report.per_site, start=1):
    print(f"site {i}: {site.cls.value}, radius {site.circumradius:.6f}, orientation {site.orientation:+d}")

print("\nSweeping the interpolating angle toward the Bell basis:")
for theta in np.linspace(0, np.pi / 2, 5):
    site = geometry_report(orbit(group, ejm_theta(theta))).per_site[0]
    print(f"  theta = {theta / np.pi:.3f} pi  ->  {site.cls.value:<18} radius {site.circumradius:.4f}")
