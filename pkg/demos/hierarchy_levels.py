"""Reading a hierarchy level off a phase vector.

Dyadic phases are interpolated into a phase polynomial; its level is the
largest term level. The brute-force recursion confirms the answer.
"""

import numpy as np

from orbitbasis import PhaseVector, cgk_level, diagonal_gate, hierarchy_member, interpolate_phase_polynomial
from orbitbasis.clifford import clifford_level, measurement_unitary_from_polynomial

phases = 2 * np.pi * np.array([0, 1, 3, 2]) / 8
f = interpolate_phase_polynomial(phases, 3)
print(f"phases (turns of 1/8): [0, 1, 3, 2]  ->  f = {f} over Z_{2 ** f.m}")
print(f"formula level:       {cgk_level(f)}")
print(f"brute-force level:   {clifford_level(diagonal_gate(f), 2)}")
print(f"measurement unitary: level {clifford_level(measurement_unitary_from_polynomial(f), 2)}")

print("\nA non-dyadic phase has no finite level:")
try:
    interpolate_phase_polynomial([0, 0, 0, 1.0], 4)
except ValueError as exc:
    print(f"  {exc}")

print("\nT gate on one qubit, controlled-S on two:")
t_gate = np.diag([1, np.exp(1j * np.pi / 4)])
print(f"  T in level 3: {hierarchy_member(t_gate, 3, 1)}, in level 2: {hierarchy_member(t_gate, 2, 1)}")
pv = PhaseVector(2, 2, [0, 0, 0, np.pi / 2])
print(f"  controlled-S in level 3: {hierarchy_member(np.diag(np.exp(1j * pv.alphas)), 3, 2)}")
