"""
Spinor norms and the subgroup Omega
===================================

Decompose isometries into reflections and read off the spinor norm.
"""

import numpy as np

from oddrep import PrimeField
from oddrep.linalg import Matrix
from oddrep.ortho import (BilinearSpace, cartan_dieudonne, classify, discriminant,
                          reflection, reflection_product, spinor_norm)

F = PrimeField(11)
V = BilinearSpace.identity(5, F)
rng = np.random.default_rng(0)

# a reflection in a vector of nonsquare length (2 is not a square mod 11)
v = [1, 1, 0, 0, 0]
print("Q(v) =", V.norm(v), " sp =", spinor_norm(reflection(v, V), V).name)

# a random isometry and one decomposition of it
vs = [rng.integers(0, 11, size=5) for _ in range(4)]
vs = [x for x in vs if V.norm(x)]
g = reflection_product(vs, V)
ws = cartan_dieudonne(g, V, rng)
print(len(vs), "reflections in, ", len(ws), "reflections out")
print("product matches:", reflection_product(ws, V) == g)

# the class does not depend on the decomposition
print("sp(g) over three seeds:", {spinor_norm(g, V, np.random.default_rng(s)).name for s in range(3)})

# -1 has trivial spinor norm for the identity form, so it sits in Omega
# whenever its determinant is 1
print("disc =", discriminant(V).name)
for n in (4, 5):
    W = BilinearSpace.identity(n, F)
    print(n, classify(Matrix.scalar(n, -1, F), W))
