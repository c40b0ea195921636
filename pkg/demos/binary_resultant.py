"""Resultant of two binary forms, three ways.

Sylvester determinant, the symmetric bracket (Bezout) matrix evaluated at the
coefficient rows, and the product of root differences.
"""
from chowkit.binary import bezout_bracket_matrix, bezout_constant, bezout_resultant, sylvester_resultant

f = [1, 0, -1]  # s^2 - t^2
g = [1, 0, -4]  # s^2 - 4t^2

print("Bezout bracket matrix for d=2:")
for row in bezout_bracket_matrix(2):
    print("   ", "  ".join(str(x) for x in row))

print("Sylvester:", sylvester_resultant(f, g))
print("Bezout:   ", bezout_resultant(f, g))

# roots s/t = +-1 and +-2
diffs = 1
for a in (1, -1):
    for b in (2, -2):
        diffs *= a - b
print("prod(a - b):", diffs)

# the two normalizations differ by a sign that depends only on d
print("c_d for d = 1..8:", " ".join(str(bezout_constant(d)) for d in range(1, 9)))
