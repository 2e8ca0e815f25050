"""Exact verifier for orthogonal and symplectic mod-l representation images
and the real-elliptic-surface trace calculus.

Submodules:

``field``      prime fields and square classes
``linalg``     dense exact linear algebra over F_l
``ortho``      forms, isometries, reflections, spinor norm
``reptheory``  representation images, G-irreducibility, oddness
``surface``    Euler characteristics and F_infinity traces of real fibrations
``codec``      JSON encodings
``cli``        command-line front end (``python -m oddrep``)
"""

from .field import FieldElement, PrimeField, SquareClass, invert, square_class
from .linalg import Matrix, Subspace, determinant, fixed_space, kernel_basis, mat_mul, rank
from .ortho import (BilinearSpace, FormKind, OrthogonalVerdict, cartan_dieudonne,
                    classify, discriminant, is_isometry, project_to_SO, reflection,
                    spinor_norm, symplectic_multiplier)
from .reptheory import (Construction, RepImage, apply_construction, c_infinity,
                        choose_construction, extend_plus_one, flag_dimension,
                        interleave_blocks, invariant_subspaces, is_g_irreducible,
                        is_odd, lie_algebra, quadratic_twist, select_ht_weights)
from .surface import (KodairaFiber, SurfaceConfig, SurfaceReport, builtin_case,
                      chi_real, rank_N, surface_report, trace_c_mod_ell, trace_V,
                      trace_W)

__version__ = "0.1.0"
