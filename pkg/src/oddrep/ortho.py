"""Bilinear forms, isometries, reflections and the spinor norm.

Vectors are columns: a matrix ``g`` acts by ``x -> g x`` and the form is
``B(x, y) = x^T G y`` for the Gram matrix ``G``.  We write ``Q(v) = B(v, v)``.

Spinor norm convention: the reflection in an anisotropic ``v`` has spinor
norm equal to the square class of ``Q(v)``.  With this choice the
discriminant ``sp(-1)`` is the square class of ``det(G)``, so it is trivial
for the identity form in every dimension.  The convention lives only in
:func:`reflection_spinor_class`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import (DecompositionFailed, DegenerateForm, IsotropicVector,
                     NotAnIsometry, NotASimilitude, NotOrthogonalShape,
                     OddDimensionRequired, ShapeError)
from .field import FieldElement, PrimeField, SquareClass
from .linalg import Matrix, Subspace, _dot, determinant, kernel_basis


class FormKind(enum.Enum):
    SYMMETRIC = "symmetric"
    ALTERNATING = "alternating"


@dataclass(frozen=True)
class BilinearSpace:
    """A nondegenerate symmetric or alternating form on F_l^dim."""

    kind: FormKind
    gram: Matrix

    def __post_init__(self):
        g = self.gram
        if not g.is_square:
            raise ShapeError(f"Gram matrix must be square, got {g.shape}")
        if self.kind is FormKind.SYMMETRIC:
            if g != g.T:
                raise DegenerateForm("symmetric form needs a symmetric Gram matrix")
        else:
            if g != -g.T or np.diag(g.array).any():
                raise DegenerateForm("alternating form needs G = -G^T with zero diagonal")
        if determinant(g).value == 0:
            raise DegenerateForm("Gram matrix is singular")

    @property
    def dim(self) -> int:
        return self.gram.rows

    @property
    def field(self) -> PrimeField:
        return self.gram.field

    @property
    def symmetric(self) -> bool:
        return self.kind is FormKind.SYMMETRIC

    @classmethod
    def identity(cls, n: int, field: PrimeField) -> BilinearSpace:
        return cls(FormKind.SYMMETRIC, Matrix.identity(n, field))

    @classmethod
    def diagonal(cls, values: Sequence[int], field: PrimeField) -> BilinearSpace:
        return cls(FormKind.SYMMETRIC, Matrix.diag(values, field))

    @classmethod
    def hyperbolic(cls, k: int, field: PrimeField) -> BilinearSpace:
        """Orthogonal sum of ``k`` hyperbolic planes with Gram (0 1; 1 0)."""
        one = np.eye(k, dtype=np.int64)
        zero = np.zeros((k, k), dtype=np.int64)
        return cls(FormKind.SYMMETRIC, Matrix(field, np.block([[zero, one], [one, zero]])))

    @classmethod
    def symplectic(cls, n: int, field: PrimeField) -> BilinearSpace:
        """The standard form J = (0 1_n; -1_n 0) on F_l^{2n}."""
        one = np.eye(n, dtype=np.int64)
        zero = np.zeros((n, n), dtype=np.int64)
        return cls(FormKind.ALTERNATING, Matrix(field, np.block([[zero, one], [-one, zero]])))

    def pair(self, x, y) -> int:
        """B(x, y) as a reduced integer."""
        p = self.field.modulus
        x = np.asarray(x, dtype=np.int64) % p
        y = np.asarray(y, dtype=np.int64) % p
        return int(_dot(x, _dot(self.gram.array, y, p), p))

    def norm(self, v) -> int:
        """Q(v) = B(v, v)."""
        return self.pair(v, v)

    def is_totally_isotropic(self, subspace: Subspace) -> bool:
        basis = subspace.matrix()
        if basis.shape[0] == 0:
            return True
        p = self.field.modulus
        return not _dot(_dot(basis, self.gram.array, p), basis.T, p).any()

    def orthogonal_sum(self, other: BilinearSpace) -> BilinearSpace:
        from .linalg import direct_sum
        if self.kind is not other.kind:
            raise ShapeError("orthogonal sum of forms of different kinds")
        return BilinearSpace(self.kind, direct_sum(self.gram, other.gram))


def _check_square(g: Matrix, V: BilinearSpace):
    if g.shape != (V.dim, V.dim):
        raise ShapeError(f"matrix of shape {g.shape} on a space of dimension {V.dim}")


def is_isometry(g: Matrix, V: BilinearSpace) -> bool:
    _check_square(g, V)
    return g.T @ V.gram @ g == V.gram


def symplectic_multiplier(g: Matrix, V: BilinearSpace) -> FieldElement:
    """The scalar ``nu`` with ``g^T J g = nu J``."""
    if V.symmetric:
        raise ShapeError("symplectic multiplier needs an alternating form")
    _check_square(g, V)
    lhs = (g.T @ V.gram @ g).array
    J = V.gram.array
    i, j = map(int, np.argwhere(J)[0])
    p = V.field.modulus
    nu = int(lhs[i, j]) * pow(int(J[i, j]), -1, p) % p
    if not np.array_equal(lhs, (nu * J) % p):
        raise NotASimilitude("g^T J g is not a scalar multiple of J")
    return V.field(nu)


def orthogonal_multiplier(g: Matrix, V: BilinearSpace) -> FieldElement:
    """Like :func:`symplectic_multiplier` for either kind of form."""
    _check_square(g, V)
    lhs = (g.T @ V.gram @ g).array
    G = V.gram.array
    i, j = map(int, np.argwhere(G)[0])
    p = V.field.modulus
    nu = int(lhs[i, j]) * pow(int(G[i, j]), -1, p) % p
    if not np.array_equal(lhs, (nu * G) % p):
        raise NotASimilitude("g does not scale the form")
    return V.field(nu)


def reflection(v, V: BilinearSpace) -> Matrix:
    """Matrix of ``x -> x - 2 B(x, v) / Q(v) v``."""
    if not V.symmetric:
        raise ShapeError("reflections need a symmetric form")
    p = V.field.modulus
    v = np.asarray(v, dtype=np.int64) % p
    if v.shape != (V.dim,):
        raise ShapeError(f"vector of length {v.shape} in dimension {V.dim}")
    q = V.norm(v)
    if q == 0:
        raise IsotropicVector(f"Q(v) = 0 for v = {v.tolist()}")
    c = 2 * pow(q, -1, p) % p
    row = _dot(v, V.gram.array, p)  # v^T G
    r = (np.eye(V.dim, dtype=np.int64) - (c * np.outer(v, row) % p)) % p
    return Matrix._wrap(V.field, r)


def reflection_product(vectors, V: BilinearSpace) -> Matrix:
    out = Matrix.identity(V.dim, V.field)
    for v in vectors:
        out = out @ reflection(v, V)
    return out


def _anisotropic_in(U: np.ndarray, V: BilinearSpace, rng) -> np.ndarray:
    """An anisotropic vector in the row span of ``U`` (nondegenerate there)."""
    p = V.field.modulus
    k = U.shape[0]
    if rng is not None:
        for _ in range(16 * V.dim):
            coeffs = rng.integers(0, p, size=k)
            if not coeffs.any():
                continue
            x = _dot(coeffs, U, p)
            if V.norm(x):
                return x
    for row in U:
        if V.norm(row):
            return row
    # all basis vectors isotropic: Q(u + w) = 2 B(u, w) for some pair is nonzero
    for i in range(k):
        for j in range(i + 1, k):
            x = (U[i] + U[j]) % p
            if V.norm(x):
                return x
    raise DecompositionFailed("no anisotropic vector found; restricted form is degenerate")


def cartan_dieudonne(g: Matrix, V: BilinearSpace, rng: Optional[np.random.Generator] = None) -> list[np.ndarray]:
    """Write an isometry as a product of reflections.

    Returns anisotropic vectors ``v_1, ..., v_k`` (``k <= 2 dim``) with
    ``g = s(v_1) s(v_2) ... s(v_k)``.  Each round picks an anisotropic ``x``
    in the part of the space not yet fixed and spends at most two
    reflections to make the running product fix ``x``: reflect in
    ``h x - x`` when that is anisotropic, otherwise in ``h x + x`` followed
    by ``x``.  Since ``Q(hx - x) + Q(hx + x) = 4 Q(x)`` one of the two
    always works.  ``rng`` randomizes the choice of each ``x``.
    """
    if not V.symmetric:
        raise ShapeError("Cartan-Dieudonne needs a symmetric form")
    if not is_isometry(g, V):
        raise NotAnIsometry("matrix does not preserve the form")
    p = V.field.modulus
    n = V.dim
    h = g
    U = np.eye(n, dtype=np.int64)
    out: list[np.ndarray] = []
    while U.shape[0]:
        x = _anisotropic_in(U, V, rng)
        y = h.apply(x)
        if not np.array_equal(y, x):
            d = (y - x) % p
            if V.norm(d):
                out.append(d)
                h = reflection(d, V) @ h
            else:
                s = (y + x) % p
                out.append(s)
                out.append(x)
                h = reflection(x, V) @ reflection(s, V) @ h
        # shrink U to the orthogonal complement of x inside U
        coeffs = _dot(U, _dot(V.gram.array, x, p), p)
        rel = kernel_basis(Matrix._wrap(V.field, coeffs.reshape(1, -1))).matrix()
        U = _dot(rel, U, p) if rel.shape[0] else np.zeros((0, n), dtype=np.int64)
    if not h.is_identity():
        raise DecompositionFailed("residual isometry is not the identity")
    if len(out) > 2 * n:
        raise DecompositionFailed(f"{len(out)} reflections exceeds 2 * {n}")
    return out


def reflection_spinor_class(v, V: BilinearSpace) -> SquareClass:
    """Spinor norm of the reflection in ``v``: the class of Q(v)."""
    q = V.norm(v)
    if q == 0:
        raise IsotropicVector("isotropic vector has no reflection")
    return V.field.square_class(q)


def spinor_norm(g: Matrix, V: BilinearSpace, rng: Optional[np.random.Generator] = None) -> SquareClass:
    return SquareClass.product(reflection_spinor_class(v, V) for v in cartan_dieudonne(g, V, rng))


def discriminant(V: BilinearSpace) -> SquareClass:
    """``sp(-1)`` for the form ``V``."""
    if not V.symmetric:
        raise ShapeError("discriminant needs a symmetric form")
    return spinor_norm(Matrix.scalar(V.dim, -1, V.field), V)


@dataclass(frozen=True)
class OrthogonalVerdict:
    in_O: bool
    det: Optional[FieldElement] = None
    spinor: Optional[SquareClass] = None
    in_Omega: Optional[bool] = None

    def __post_init__(self):
        present = self.spinor is not None and self.in_Omega is not None
        if present != self.in_O:
            raise ValueError("spinor and in_Omega are present exactly when in_O")
        if self.in_O and self.in_Omega != (self.det == 1 and self.spinor is SquareClass.TRIVIAL):
            raise ValueError("in_Omega must equal det == 1 and trivial spinor norm")


def classify(g: Matrix, V: BilinearSpace, rng: Optional[np.random.Generator] = None) -> OrthogonalVerdict:
    """Membership of ``g`` in O(V), SO(V) and Omega(V)."""
    _check_square(g, V)
    d = determinant(g)
    if not V.symmetric or not is_isometry(g, V):
        return OrthogonalVerdict(in_O=False, det=d)
    sp = spinor_norm(g, V, rng)
    return OrthogonalVerdict(in_O=True, det=d, spinor=sp,
                             in_Omega=(d == 1 and sp is SquareClass.TRIVIAL))


def project_to_SO(g: Matrix) -> Matrix:
    """``det(g) g``: the SO-component of ``g`` in O_m = SO_m x {+-1}, m odd."""
    if not g.is_square:
        raise ShapeError("projection needs a square matrix")
    if g.rows % 2 == 0:
        raise OddDimensionRequired(f"size {g.rows} is even")
    d = determinant(g)
    if d != 1 and d != -1:
        raise NotOrthogonalShape(f"det = {d.value} is not +-1")
    return g.scale(d.value)
