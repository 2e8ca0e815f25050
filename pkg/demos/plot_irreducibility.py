"""
Invariant subspaces by spinning lines
=====================================

The permutation action of S_5 on F_7^5 preserves the identity form and
splits as the standard 4-dimensional module plus the trivial line.
"""

import time

from oddrep import PrimeField
from oddrep.ortho import BilinearSpace
from oddrep.reptheory import (RepImage, extend_plus_one, invariant_subspaces, is_g_irreducible,
                              line_count, permutation_matrix, standard_form,
                              standard_representation)

F = PrimeField(7)
gens = [permutation_matrix(p, F) for p in ([1, 0, 2, 3, 4], [1, 2, 3, 4, 0])]
rep = RepImage(BilinearSpace.identity(5, F), gens, gens[0])

t = time.perf_counter()
subs = invariant_subspaces(rep)
print(f"{line_count(rep)} lines spun in {time.perf_counter() - t:.2f}s")
for s in subs:
    print(f"  dim {s.dim}, totally isotropic: {rep.space.is_totally_isotropic(s)}")
print("G-irreducible:", is_g_irreducible(rep))

# the standard module on its own, with the form I + J
std = [standard_representation(p, F) for p in ([1, 0, 2, 3, 4], [1, 2, 3, 4, 0])]
rep4 = RepImage(standard_form(5, F), std, std[0])
print("standard module:", len(invariant_subspaces(rep4)), "invariant subspaces")
print("standard + 1:   ", len(invariant_subspaces(extend_plus_one(rep4))), "invariant subspaces")
