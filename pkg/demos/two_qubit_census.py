"""Classify two-qubit orbit bases by the Bloch geometry of their marginals.

Every diagonal gate in the Clifford hierarchy at a given level is a phase
polynomial over Z_{2^m}. Enumerating those polynomials, building the
fiducials and grouping them by marginal geometry gives a finite census.
"""

import time

from orbitbasis import census
from orbitbasis.classify import count_polynomials

for level in (2, 3, 4):
    start = time.perf_counter()
    entries = census(2, level)
    elapsed = time.perf_counter() - start
    print(f"level {level}: {count_polynomials(2, level)} polynomials -> {len(entries)} entangled classes ({elapsed:.2f}s)")
    for e in entries:
        shapes = ", ".join(f"{s.cls.value} r={s.circumradius:.4f}" for s in e.report.per_site)
        print(f"    m={e.m}  {str(e.polynomial):<28} {shapes}")
    print()
