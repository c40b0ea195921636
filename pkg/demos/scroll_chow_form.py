"""Chow form of the cubic scroll S(2,1) from its Eagon-Northcott complex.

The printed 3x3 bracket matrix disagrees with det(Psi); flipping the sign of
the [013] entry fixes it.
"""
import numpy as np

from chowkit.arith import GF, det
from chowkit.determinantal import chow_form_determinantal, eagon_northcott, incident_plane, scroll_matrix
from chowkit.fixtures import bracket_matrix, emit
from chowkit.grassmann import bracket_matrix_eval, proportional_on_random_points

F = GF()
rng = np.random.default_rng(0)

phi = scroll_matrix([2, 1])
print("EN ranks:", eagon_northcott(phi).ranks)
D = chow_form_determinantal(phi)
for row in D.matrix:
    print("   ", " | ".join(str(x) for x in row))

hits = sum(D.evaluate(incident_plane([2, 1], 3, F, rng)[0]) == 0 for _ in range(20))
print(f"det Psi vanishes on {hits}/20 planes meeting the scroll")

print(emit("scroll3", "text"))
printed = bracket_matrix("scroll3")
fixed = [r[:] for r in printed]
fixed[0][1] = -fixed[0][1]
for name, M in (("printed", printed), ("sign-fixed", fixed)):
    ratio, n, bad = proportional_on_random_points(lambda S: det(bracket_matrix_eval(M, S)), D.evaluate, 3, 5, rng)
    print(f"{name:>10}: ratio {ratio}, mismatches {bad}/{n}")
