"""Representation images and the two global verdicts.

A Galois representation enters this package only through its image: a
finite list of generator matrices plus one designated involution, the image
of complex conjugation.  Irreducibility of the image, oddness at the
involution, orthogonality and traces depend on nothing else, so number
fields and Galois groups are never modelled.

Oddness is tested only at the designated involution.  All complex
conjugations are conjugate in the group, and the dimension of the
Ad-fixed subspace is a conjugation invariant, so one representative is
enough.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

import numpy as np

from .errors import (EnumerationBudgetExceeded, EvenDimensionRequired,
                     NotAnInvolution, NotAnIsometry, ShapeError,
                     SignCountError, TraceOutOfRange)
from .field import PrimeField
from .linalg import Matrix, Subspace, _dot, direct_sum, fixed_space, kernel_basis, rank
from .ortho import (BilinearSpace, FormKind, is_isometry, orthogonal_multiplier,
                    project_to_SO, symplectic_multiplier)

#: Maximum number of seed lines spun by :func:`invariant_subspaces`.
LINE_BUDGET = 2_000_000


@dataclass(frozen=True)
class RepImage:
    """Generators of an image group plus the image of complex conjugation."""

    space: BilinearSpace
    generators: tuple[Matrix, ...]
    conjugation: Matrix

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if not self.generators:
            raise ShapeError("a representation image needs at least one generator")
        n = self.space.dim
        for g in self.matrices:
            if g.shape != (n, n):
                raise ShapeError(f"matrix of shape {g.shape} in dimension {n}")
            if g.field != self.space.field:
                raise ShapeError("all matrices must share the form's field")
        if not (self.conjugation @ self.conjugation).is_identity():
            raise NotAnInvolution("conjugation must square to the identity")
        for g in self.matrices:
            if self.space.symmetric:
                if not is_isometry(g, self.space):
                    raise NotAnIsometry("generator does not preserve the symmetric form")
            else:
                symplectic_multiplier(g, self.space)

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def field(self) -> PrimeField:
        return self.space.field

    @property
    def matrices(self) -> tuple[Matrix, ...]:
        return self.generators + (self.conjugation,)

    def conjugate_by(self, h: Matrix) -> RepImage:
        """The image ``h g h^-1`` of every matrix; ``h`` must preserve the form."""
        from .linalg import inverse
        hi = inverse(h)
        return RepImage(self.space, tuple(h @ g @ hi for g in self.generators),
                        h @ self.conjugation @ hi)


# --- constructions ---------------------------------------------------------

def interleave_blocks(blocks: Sequence[Matrix]) -> Matrix:
    """Spread ``n`` 2x2 blocks (a b; c d) over a 2n x 2n matrix.

    ``a_i`` fill the diagonal of the upper-left n x n block, ``b_i`` the
    upper-right, ``c_i`` the lower-left and ``d_i`` the lower-right.  When
    all blocks share the determinant ``d`` the result is a similitude of
    J = (0 1_n; -1_n 0) with multiplier ``d``.
    """
    if not blocks:
        raise ShapeError("need at least one block")
    field = blocks[0].field
    n = len(blocks)
    out = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for i, b in enumerate(blocks):
        if b.shape != (2, 2):
            raise ShapeError(f"block {i} has shape {b.shape}, expected (2, 2)")
        if b.field != field:
            raise ShapeError("blocks over different fields")
        a = b.array
        out[i, i], out[i, n + i] = a[0, 0], a[0, 1]
        out[n + i, i], out[n + i, n + i] = a[1, 0], a[1, 1]
    return Matrix._wrap(field, out)


def c_infinity(N: int, field: PrimeField) -> Matrix:
    """The fixed order-two element of SO_N for the identity form.

    For N = 0 mod 4 this is the swap (0 1_n; 1_n 0).  For N = 2 mod 4 the
    swap acts on the first n - 1 coordinates of each half and the two
    remaining coordinates are negated, giving trace -2.
    """
    if N % 2:
        raise EvenDimensionRequired(f"N = {N} is odd")
    if N < 4:
        raise ShapeError(f"N = {N} must be at least 4")
    n = N // 2
    c = np.zeros((N, N), dtype=np.int64)
    if N % 4 == 0:
        for i in range(n):
            c[i, n + i] = c[n + i, i] = 1
    else:
        for i in range(n - 1):
            c[i, n + i] = c[n + i, i] = 1
        c[n - 1, n - 1] = c[N - 1, N - 1] = -1
    return Matrix(field, c)


def extend_plus_one(rep: RepImage) -> RepImage:
    """``rep + 1``: add an orthogonal line of norm 1 fixed by everything."""
    if not rep.space.symmetric:
        raise ShapeError("extension by a trivial line needs an orthogonal image")
    one = Matrix.identity(1, rep.field)
    space = BilinearSpace(FormKind.SYMMETRIC, direct_sum(rep.space.gram, one))
    return RepImage(space, tuple(direct_sum(g, one) for g in rep.generators),
                    direct_sum(rep.conjugation, one))


def quadratic_twist(rep: RepImage, signs: Sequence[int]) -> RepImage:
    """Multiply each generator, then the conjugation, by its sign."""
    signs = list(signs)
    if len(signs) != len(rep.generators) + 1:
        raise SignCountError(
            f"{len(signs)} signs for {len(rep.generators)} generators plus conjugation")
    if any(s not in (1, -1) for s in signs):
        raise SignCountError("signs must be +1 or -1")
    gens = tuple(g.scale(s) for g, s in zip(rep.generators, signs))
    return RepImage(rep.space, gens, rep.conjugation.scale(signs[-1]))


class Construction(enum.Enum):
    DIRECT_SUM = "DirectSum"
    TWIST_THEN_SUM = "TwistThenSum"
    PROJECT_THEN_SUM = "ProjectThenSum"


N_MOD_8_LABELS = ("0", "2", "4", "6Omega", "6O")


def normalize_label(label) -> str:
    s = str(label).replace("_", "").replace("Ω", "Omega")
    aliases = {"6omega": "6Omega", "6o": "6O", "6Ω": "6Omega"}
    s = aliases.get(s.lower(), s)
    if s not in N_MOD_8_LABELS:
        raise ValueError(f"unknown N mod 8 label {label!r}; expected one of {N_MOD_8_LABELS}")
    return s


def choose_construction(n_mod_8, tr_theta_c: int) -> Construction:
    """Which residual representation built from theta is odd.

    trace 0 or -2 already gives |tr + 1| = 1 after adding a trivial line;
    trace +2 needs the imaginary quadratic twist first; the 6_O family has
    image meeting O \\ SO and is projected to the SO-component.
    """
    label = normalize_label(n_mod_8)
    if tr_theta_c not in (-2, 0, 2):
        raise TraceOutOfRange(f"trace {tr_theta_c} not in {{-2, 0, 2}}")
    if label == "6O":
        return Construction.PROJECT_THEN_SUM
    if tr_theta_c == 2:
        return Construction.TWIST_THEN_SUM
    return Construction.DIRECT_SUM


def apply_construction(theta: RepImage, construction: Construction,
                       signs: Optional[Sequence[int]] = None) -> RepImage:
    """Build the (N+1)-dimensional residual image from theta.

    ``signs`` are the twisting character values for TwistThenSum; by default
    every generator gets +1 and the conjugation -1 (an imaginary quadratic
    character).
    """
    if construction is Construction.DIRECT_SUM:
        return extend_plus_one(theta)
    if construction is Construction.TWIST_THEN_SUM:
        if signs is None:
            signs = [1] * len(theta.generators) + [-1]
        return extend_plus_one(quadratic_twist(theta, signs))
    ext = extend_plus_one(theta)
    return RepImage(ext.space, tuple(project_to_SO(g) for g in ext.generators),
                    project_to_SO(ext.conjugation))


# --- invariant subspaces ---------------------------------------------------

def _normalized_vectors(n: int, p: int):
    """One nonzero vector per line of F_p^n: first nonzero coordinate 1."""
    for lead in range(n):
        head = (0,) * lead + (1,)
        for tail in itertools.product(range(p), repeat=n - lead - 1):
            yield head + tail


def _spin(v, mats, p: int):
    """Basis of the smallest subspace containing ``v`` stable under ``mats``.

    ``mats`` are lists of rows.  Rows of the returned basis are in
    semi-echelon form with the recorded pivots.
    """
    n = len(v)
    basis: list[list[int]] = []
    pivots: list[int] = []
    queue = [list(v)]
    while queue:
        w = queue.pop()
        for row, c in zip(basis, pivots):
            if w[c]:
                f = w[c]
                w = [(x - f * y) % p for x, y in zip(w, row)]
        lead = next((i for i, x in enumerate(w) if x), None)
        if lead is None:
            continue
        inv = pow(w[lead], -1, p)
        w = [x * inv % p for x in w]
        basis.append(w)
        pivots.append(lead)
        if len(basis) == n:
            break
        for m in mats:
            queue.append([sum(a * b for a, b in zip(r, w)) % p for r in m])
    return basis


def line_count(rep: RepImage) -> int:
    p = rep.field.modulus
    return (p ** rep.dim - 1) // (p - 1)


def cyclic_subspaces(rep: RepImage, budget: int = LINE_BUDGET) -> set[Subspace]:
    """Spin every line of the ambient space; return the distinct results."""
    count = line_count(rep)
    if count > budget:
        raise EnumerationBudgetExceeded(
            f"{count} seed lines over F_{rep.field.modulus}^{rep.dim} exceeds budget {budget}")
    p = rep.field.modulus
    mats = [m.tolist() for m in rep.matrices]
    found: set[Subspace] = set()
    for v in _normalized_vectors(rep.dim, p):
        found.add(Subspace.span(rep.field, rep.dim, _spin(v, mats, p)))
    return found


def _minimal(subspaces) -> list[Subspace]:
    subs = sorted(subspaces, key=lambda s: s.dim)
    return [s for s in subs if not any(t.dim < s.dim and t <= s for t in subs)]


def _sort_key(s: Subspace):
    return (s.dim, s.basis)


def minimal_invariant_subspaces(rep: RepImage, budget: int = LINE_BUDGET) -> list[Subspace]:
    """Minimal nonzero invariant subspaces (the irreducible submodules)."""
    return sorted(_minimal(cyclic_subspaces(rep, budget)), key=_sort_key)


def invariant_subspaces(rep: RepImage, budget: int = LINE_BUDGET) -> list[Subspace]:
    """All proper nonzero subspaces stable under every generator and the conjugation.

    Every invariant subspace is the sum of the cyclic subspaces generated by
    its vectors, so closing the set of cyclic subspaces under sums gives the
    complete lattice.
    """
    cyclic = cyclic_subspaces(rep, budget)
    lattice = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        new = set()
        for a in frontier:
            for b in cyclic:
                s = a + b
                if s not in lattice:
                    new.add(s)
        lattice |= new
        frontier = new
    proper = [s for s in lattice if 0 < s.dim < rep.dim]
    return sorted(proper, key=_sort_key)


def is_g_irreducible(rep: RepImage, budget: int = LINE_BUDGET) -> bool:
    """True when no nonzero invariant subspace is totally isotropic.

    A totally isotropic invariant subspace contains a minimal invariant
    subspace, which is again totally isotropic, so the minimal ones suffice.
    """
    return not any(rep.space.is_totally_isotropic(s)
                   for s in minimal_invariant_subspaces(rep, budget))


# --- Lie algebras and oddness ----------------------------------------------

@dataclass(frozen=True)
class LieAlgebraBasis:
    type_tag: str  # "so" or "sp"
    space: BilinearSpace
    basis: tuple[Matrix, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def lie_algebra(space: BilinearSpace) -> LieAlgebraBasis:
    """Basis of ``{X : X^T G + G X = 0}``, from the kernel of that linear map."""
    m = space.dim
    p = space.field.modulus
    G = space.gram.array
    eye = np.eye(m, dtype=np.int64)
    A = np.kron(G, eye)  # X -> G X, row-major vectorisation
    for a in range(m):  # X -> X^T G
        A[a * m:(a + 1) * m, a::m] += G.T
    K = kernel_basis(Matrix._wrap(space.field, A % p))
    basis = tuple(Matrix._wrap(space.field, np.asarray(row, dtype=np.int64).reshape(m, m))
                  for row in K.basis)
    tag = "so" if space.symmetric else "sp"
    expected = m * (m - 1) // 2 if space.symmetric else (m // 2) * (m + 1)
    assert len(basis) == expected, (len(basis), expected)
    return LieAlgebraBasis(tag, space, basis)


def flag_dimension(type_tag: str, n: int) -> int:
    """Number of positive roots of the root system A_n, B_n, C_n or D_n."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    t = type_tag.upper()
    if t == "A":
        return n * (n + 1) // 2
    if t in ("B", "C"):
        return n * n
    if t == "D":
        return n * (n - 1)
    raise ValueError(f"unknown type {type_tag!r}")


def root_type(space: BilinearSpace) -> tuple[str, int]:
    m = space.dim
    if not space.symmetric:
        return "C", m // 2
    return ("B", (m - 1) // 2) if m % 2 else ("D", m // 2)


def involution_trace(c: Matrix) -> int:
    """Trace of an involution as an integer: dim(+1) - dim(-1) eigenspaces."""
    return fixed_space(c).dim - fixed_space(-c).dim


@dataclass(frozen=True)
class OddnessReport:
    verdict: bool
    fixed_dim: int
    flag_dim: int
    trace_check: bool
    adjoint_trace: int
    lie_dim: int
    root_type: str = dc_field(default="")


def is_odd(rep: RepImage) -> OddnessReport:
    """Compare the Ad(c)-fixed part of the derived Lie algebra with the flag dimension.

    The fixed dimension is computed directly as the kernel of
    ``X -> c X c^-1 - X`` on a basis of so or sp.  Independently, Ad on so_m
    is the exterior square of the standard representation and Ad on sp_2n is
    the symmetric square twisted by the multiplier, which gives the trace
    of Ad(c) from tr(c) alone; ``trace_check`` confirms both routes agree,
    over the integers and modulo l.
    """
    c = rep.conjugation
    if not (c @ c).is_identity():
        raise NotAnInvolution("conjugation must square to the identity")
    space = rep.space
    m, p = space.dim, space.field.modulus
    tag, r = root_type(space)
    flag = flag_dimension(tag, r) if r >= 1 else 0
    lie = lie_algebra(space)
    d = lie.dim
    if d == 0:
        fixed = 0
    else:
        X = np.stack([b.array for b in lie.basis])
        Xc = _dot(X, c.array, p)
        cXc = _dot(Xc.transpose(0, 2, 1), c.array.T, p).transpose(0, 2, 1)
        diff = ((cXc - X) % p).reshape(d, m * m)
        fixed = d - rank(Matrix._wrap(space.field, diff))

    t = involution_trace(c)
    if space.symmetric:
        adj = (t * t - m) // 2
        mod_l = (c.trace().value ** 2 - (c @ c).trace().value) * pow(2, -1, p) % p
    else:
        nu = orthogonal_multiplier(c, space)
        sign = 1 if nu == 1 else -1
        adj = sign * (t * t + m) // 2
        mod_l = sign * (c.trace().value ** 2 + (c @ c).trace().value) * pow(2, -1, p) % p
    trace_check = adj == 2 * fixed - d and mod_l == adj % p
    return OddnessReport(verdict=fixed == flag, fixed_dim=fixed, flag_dim=flag,
                         trace_check=trace_check, adjoint_trace=adj, lie_dim=d,
                         root_type=f"{tag}{r}")


# --- Hodge-Tate weight selection -------------------------------------------

@dataclass(frozen=True)
class WeightAssignment:
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        flat = [w for pair in self.pairs for w in pair]
        if len(set(flat)) != len(flat):
            raise ValueError("weights must be pairwise distinct")
        if len({a + b for a, b in self.pairs}) > 1:
            raise ValueError("all pairs must have the same sum")


def select_ht_weights(n: int, target_sum: int) -> WeightAssignment:
    """``n`` pairs ``(-i, s + i)`` with common sum ``s`` and 2n distinct entries.

    With ``i = M+1, ..., M+n`` a clash ``-i = s + j`` happens exactly when
    ``-s`` lies in ``[2M + 2, 2M + 2n]``; ``M`` is the smallest offset
    avoiding that window.
    """
    if n < 1:
        raise ValueError("n must be positive")
    s = target_sum
    M = 0
    while 2 * M + 2 <= -s <= 2 * M + 2 * n:
        M += 1
    return WeightAssignment(tuple((-i, s + i) for i in range(M + 1, M + n + 1)))


# --- permutation fixtures --------------------------------------------------

def permutation_matrix(perm: Sequence[int], field: PrimeField) -> Matrix:
    """Matrix sending ``e_i`` to ``e_perm[i]`` (0-based)."""
    n = len(perm)
    a = np.zeros((n, n), dtype=np.int64)
    for i, j in enumerate(perm):
        a[j, i] = 1
    return Matrix._wrap(field, a)


def standard_representation(perm: Sequence[int], field: PrimeField) -> Matrix:
    """Action on the sum-zero hyperplane in the basis ``e_i - e_n``."""
    n = len(perm)
    a = np.zeros((n - 1, n - 1), dtype=np.int64)
    last = perm[n - 1]
    for i in range(n - 1):
        j = perm[i]
        if j != n - 1:
            a[j, i] += 1
        if last != n - 1:
            a[last, i] -= 1
    return Matrix(field, a)


def standard_form(n: int, field: PrimeField) -> BilinearSpace:
    """Restriction of the dot product to the sum-zero hyperplane of F^n."""
    return BilinearSpace(FormKind.SYMMETRIC,
                         Matrix(field, np.eye(n - 1, dtype=np.int64) + 1))
