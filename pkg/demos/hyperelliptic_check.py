"""Check B*A = 0 for the hyperelliptic Bezout matrix, then test it on a curve."""
import time

import numpy as np

from chowkit.arith import GF
from chowkit.hyperelliptic import planted_instance, random_instance, resultant, verify_BA_zero_hyper

t0 = time.perf_counter()
for k in range(1, 9):
    row = ["ok" if verify_BA_zero_hyper(g, k) else "FAIL" for g in range(k)]
    print(f"k={k}:", " ".join(row))
print(f"({time.perf_counter() - t0:.1f}s)")

F = GF()
rng = np.random.default_rng(1)
inst = random_instance(1, 3, F, rng)
print("generic   sylvester", resultant(inst), " bezout", resultant(inst, "bezout"))

inst, (t, s) = planted_instance(1, 3, F, rng)
print(f"planted at t = {t}, s = {s}")
print("          sylvester", resultant(inst), " bezout", resultant(inst, "bezout"))
