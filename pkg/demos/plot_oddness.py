"""
Oddness and the choice of construction
======================================

An orthogonal image with a distinguished involution c is odd when the
fixed space of c on the Lie algebra is as large as the flag variety.
"""

from oddrep import PrimeField
from oddrep.linalg import Matrix
from oddrep.ortho import BilinearSpace
from oddrep.reptheory import (RepImage, apply_construction, c_infinity, choose_construction,
                              extend_plus_one, involution_trace, is_odd)

F = PrimeField(101)

# the involutions c_infinity have trace 0 or -2
for N in (4, 6, 8, 10):
    print(N, "tr c_inf =", involution_trace(c_infinity(N, F)))

# one image per residue class, pushed through the matching construction
cases = [(8, 0, "0"), (10, -2, "2"), (12, 0, "4"), (6, 2, "6Omega"), (6, 0, "6O")]
for N, tr, label in cases:
    V = BilinearSpace.identity(N, F)
    k = (N + tr) // 2
    c = Matrix.diag([1] * k + [-1] * (N - k), F)
    gens = [c_infinity(N, F)]
    if label == "6O":
        gens.append(Matrix.diag([-1] + [1] * (N - 1), F))
    construction = choose_construction(label, tr)
    r = is_odd(apply_construction(RepImage(V, gens, c), construction))
    print(f"N = {N:2d} ({label:>6s}) {construction.name:16s} {r.root_type}: "
          f"fixed {r.fixed_dim} / flag {r.flag_dim}, odd = {r.verdict}")

# without the twist, a trace +2 involution is not odd after adding a line
V = BilinearSpace.identity(6, F)
c = Matrix.diag([1, 1, 1, 1, -1, -1], F)

print("untwisted:", is_odd(extend_plus_one(RepImage(V, [c], c))).verdict)
