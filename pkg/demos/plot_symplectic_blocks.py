"""
Interleaving 2x2 blocks into GSp
================================

Blocks with a common determinant interleave into a symplectic similitude
whose multiplier is that determinant.
"""

from oddrep import PrimeField
from oddrep.linalg import Matrix
from oddrep.ortho import BilinearSpace, symplectic_multiplier
from oddrep.reptheory import RepImage, interleave_blocks, invariant_subspaces, is_g_irreducible, is_odd

F = PrimeField(7)
a = Matrix(F, [[0, 6], [1, 0]])
b = Matrix(F, [[0, 6], [1, 1]])
g = interleave_blocks([a, b])
print(g)

J = BilinearSpace.symplectic(2, F)
print("multiplier:", symplectic_multiplier(g, J))

# blocks diag(1, -1) give an odd conjugation
c = interleave_blocks([Matrix.diag([1, -1], F)] * 2)
rep = RepImage(J, [g], c)
r = is_odd(rep)
print(f"{r.root_type}: fixed {r.fixed_dim}, flag {r.flag_dim}, odd = {r.verdict}")
print("invariant subspaces:", len(invariant_subspaces(rep)), " G-irreducible:", is_g_irreducible(rep))
