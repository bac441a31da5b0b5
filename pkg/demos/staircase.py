"""Hierarchy level of the EJM family as a function of its angle.

For dyadic angles the family's diagonal gate is a phase polynomial, and its
level follows from the 2-adic valuation of theta/2pi + 1/4. The result is a
staircase: the EJM itself sits at level 3, the Bell basis at level 2, and
finer angles climb without bound.
"""

import numpy as np

from orbitbasis import ejm_family_level, fig3_data
from orbitbasis.clifford import DyadicRational, diagonal_gate, ejm_family_polynomial, hierarchy_member

print(f"EJM (theta = 0):        level {ejm_family_level(0.0)}")
print(f"Bell (theta = pi/2):    level {ejm_family_level(np.pi / 2)}")
print(f"theta = pi/8:           level {ejm_family_level(np.pi / 8)}")

print("\nCross-check against brute-force hierarchy membership (levels up to 4):")
for ell in range(8):
    t = DyadicRational(ell, 3)
    f = ejm_family_polynomial(t)
    k = ejm_family_level(t)
    if k > 4:
        print(f"  theta = {t}*2pi  level {k} lies beyond the brute-force envelope")
        continue
    print(f"  theta = {t}*2pi  poly {str(f):<22} level {k}  member: {hierarchy_member(diagonal_gate(f), k, 2)}")

print("\ntheta/pi   level")
for theta, k in fig3_data(6):
    print(f"  {theta / np.pi:7.4f}  {'#' * k} {k}")
