"""A two-qutrit orbit basis built from a qutrit SIC.

The fiducial mixes a SIC state, its conjugate and the maximally entangled
state. The nine orbit states are orthonormal and the single-qutrit marginals
are pairwise equidistant.
"""

import numpy as np

from orbitbasis import check_orthonormal, orbit, tetra_group
from orbitbasis.fiducial import czartowski_alpha, czartowski_bounds, czartowski_fiducial, hesse_sic
from orbitbasis.linalg import partial_trace

lo, hi = czartowski_bounds(3)
print(f"admissible overlap parameter: [{lo:.4f}, {hi:.4f}]")
for q in (lo, 0.5, 0.75, hi):
    fid = czartowski_fiducial(3, hesse_sic(0.0), q, czartowski_alpha(3, q))
    basis = orbit(tetra_group(2, 3), fid)
    rhos = [partial_trace(s, 0, 3) for s in basis.states]
    dists = [np.linalg.norm(rhos[i] - rhos[j]) for i in range(9) for j in range(i + 1, 9)]
    print(
        f"q = {q:.4f}: orthonormal {check_orthonormal(basis, 1e-10).passed}, "
        f"marginal distance {np.mean(dists):.4f} (spread {np.ptp(dists):.1e})"
    )
