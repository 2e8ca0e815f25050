"""Dense exact linear algebra over a prime field.

Matrices are immutable wrappers around ``int64`` numpy arrays holding the
reduced representatives in ``[0, l)``.  Since ``l < 2**31`` every entrywise
product fits in a signed word; inner products are accumulated in chunks
short enough that the partial sums cannot overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DivisionByZero, ModulusMismatch, ShapeError
from .field import FieldElement, PrimeField

_I64_MAX = (1 << 63) - 1


def _as_array(entries, p: int) -> np.ndarray:
    try:
        arr = np.asarray(entries)
    except ValueError as exc:
        raise ShapeError(f"ragged matrix entries: {exc}") from None
    if arr.size == 0:
        return arr.astype(np.int64)
    if arr.dtype.kind in "iu":
        return np.mod(arr.astype(np.int64), p)
    if arr.dtype.kind == "b":
        return arr.astype(np.int64)
    try:
        return np.vectorize(lambda x: _as_int(x) % p, otypes=[np.int64])(arr)
    except (TypeError, ValueError) as exc:
        raise ShapeError(f"matrix entries must be integers: {exc}") from None


def _as_int(x) -> int:
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return int(x)
    if isinstance(x, FieldElement):
        return x.value
    raise TypeError(f"non-integer entry {x!r}")


def _dot(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """``a @ b mod p`` without int64 overflow."""
    inner = a.shape[-1]
    step = max(1, _I64_MAX // ((p - 1) ** 2 + 1))
    if inner <= step:
        return np.mod(a @ b, p)
    out = np.zeros(a.shape[:-1] + b.shape[1:], dtype=np.int64)
    for s in range(0, inner, step):
        out = np.mod(out + np.mod(a[..., s:s + step] @ b[s:s + step], p), p)
    return out


def rref(arr: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p.

    The pivot in each column is the first row (from the current position
    down) holding a nonzero entry.  Returns the reduced array and the list of
    pivot columns.
    """
    R = np.array(arr, dtype=np.int64) % p
    m, n = R.shape
    pivots: list[int] = []
    r = 0
    for col in range(n):
        if r == m:
            break
        nz = np.flatnonzero(R[r:, col])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            R[[r, k]] = R[[k, r]]
        inv = pow(int(R[r, col]), -1, p)
        R[r] = (R[r] * inv) % p
        f = R[:, col].copy()
        f[r] = 0
        if f.any():
            R = (R - np.outer(f, R[r]) % p) % p
        pivots.append(col)
        r += 1
    return R, pivots


class Matrix:
    """Immutable dense matrix over a :class:`PrimeField`."""

    __slots__ = ("field", "_a")

    def __init__(self, field: PrimeField, entries):
        p = field.modulus
        a = _as_array(entries, p)
        if a.ndim != 2:
            if a.size == 0:
                a = a.reshape(0, 0)
            else:
                raise ShapeError(f"matrix entries must be 2-dimensional, got shape {a.shape}")
        a.setflags(write=False)
        self.field = field
        self._a = a

    @classmethod
    def _wrap(cls, field: PrimeField, a: np.ndarray) -> Matrix:
        m = cls.__new__(cls)
        a = np.ascontiguousarray(a, dtype=np.int64)
        a.setflags(write=False)
        m.field = field
        m._a = a
        return m

    # construction helpers
    @classmethod
    def identity(cls, n: int, field: PrimeField) -> Matrix:
        return cls._wrap(field, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, rows: int, cols: int, field: PrimeField) -> Matrix:
        return cls._wrap(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def diag(cls, values: Sequence[int], field: PrimeField) -> Matrix:
        return cls._wrap(field, np.diag([int(v) % field.modulus for v in values]).astype(np.int64))

    @classmethod
    def scalar(cls, n: int, value: int, field: PrimeField) -> Matrix:
        return cls.diag([value] * n, field)

    # basic accessors
    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the reduced entries."""
        return self._a

    @property
    def entries(self) -> tuple[FieldElement, ...]:
        """Row-major tuple of field elements."""
        return tuple(FieldElement(int(v), self.field) for v in self._a.ravel())

    def tolist(self) -> list[list[int]]:
        return self._a.tolist()

    def __getitem__(self, idx):
        i, j = idx
        return FieldElement(int(self._a[i, j]), self.field)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def _check_field(self, other: Matrix):
        if other.field != self.field:
            raise ModulusMismatch(f"{self.field} vs {other.field}")

    # arithmetic
    def __matmul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        return NotImplemented

    def __add__(self, other: Matrix) -> Matrix:
        self._check_field(other)
        if self.shape != other.shape:
            raise ShapeError(f"{self.shape} + {other.shape}")
        return Matrix._wrap(self.field, (self._a + other._a) % self.field.modulus)

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_field(other)
        if self.shape != other.shape:
            raise ShapeError(f"{self.shape} - {other.shape}")
        return Matrix._wrap(self.field, (self._a - other._a) % self.field.modulus)

    def __neg__(self) -> Matrix:
        return Matrix._wrap(self.field, (-self._a) % self.field.modulus)

    def scale(self, c) -> Matrix:
        p = self.field.modulus
        return Matrix._wrap(self.field, (self._a * (int(c) % p)) % p)

    def __pow__(self, k: int) -> Matrix:
        if not self.is_square:
            raise ShapeError("power of a non-square matrix")
        if k < 0:
            return inverse(self) ** (-k)
        out = Matrix.identity(self.rows, self.field)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    @property
    def T(self) -> Matrix:
        return Matrix._wrap(self.field, self._a.T)

    def trace(self) -> FieldElement:
        if not self.is_square:
            raise ShapeError("trace of a non-square matrix")
        return self.field(int(np.trace(self._a) % self.field.modulus))

    def apply(self, v) -> np.ndarray:
        """``self @ v`` for a column vector given as a 1-d sequence."""
        v = np.asarray(v, dtype=np.int64) % self.field.modulus
        if v.shape != (self.cols,):
            raise ShapeError(f"vector of length {v.shape} for {self.shape} matrix")
        return _dot(self._a, v, self.field.modulus)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and bool(
            np.array_equal(self._a, other._a))

    def __hash__(self):
        return hash((self.field.modulus, self.shape, self._a.tobytes()))

    def __repr__(self):
        return f"Matrix({self.field}, {self.tolist()})"

    def is_identity(self) -> bool:
        return self.is_square and bool(np.array_equal(self._a, np.eye(self.rows, dtype=np.int64)))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    a._check_field(b)
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return Matrix._wrap(a.field, _dot(a.array, b.array, a.field.modulus))


def determinant(m: Matrix) -> FieldElement:
    """Determinant by Gaussian elimination over F_l."""
    if not m.is_square:
        raise ShapeError(f"determinant of non-square {m.shape} matrix")
    p = m.field.modulus
    R = np.array(m.array, dtype=np.int64)
    n = m.rows
    det = 1
    for col in range(n):
        nz = np.flatnonzero(R[col:, col])
        if nz.size == 0:
            return m.field.zero
        k = col + nz[0]
        if k != col:
            R[[col, k]] = R[[k, col]]
            det = -det
        piv = int(R[col, col])
        det = det * piv % p
        inv = pow(piv, -1, p)
        f = (R[col + 1:, col] * inv) % p
        if f.any():
            R[col + 1:] = (R[col + 1:] - np.outer(f, R[col]) % p) % p
    return m.field(det)


def rank(m: Matrix) -> int:
    return len(rref(m.array, m.field.modulus)[1])


def inverse(m: Matrix) -> Matrix:
    if not m.is_square:
        raise ShapeError("inverse of a non-square matrix")
    n = m.rows
    aug = np.hstack([m.array, np.eye(n, dtype=np.int64)])
    R, piv = rref(aug, m.field.modulus)
    if piv[:n] != list(range(n)):
        raise DivisionByZero("matrix is singular")
    return Matrix._wrap(m.field, R[:, n:])


def direct_sum(*blocks: Matrix) -> Matrix:
    field = blocks[0].field
    r = sum(b.rows for b in blocks)
    c = sum(b.cols for b in blocks)
    out = np.zeros((r, c), dtype=np.int64)
    i = j = 0
    for b in blocks:
        if b.field != field:
            raise ModulusMismatch("direct sum over different fields")
        out[i:i + b.rows, j:j + b.cols] = b.array
        i += b.rows
        j += b.cols
    return Matrix._wrap(field, out)


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_l^n held as its reduced row echelon basis.

    Because the basis is canonical, two instances compare equal exactly when
    they describe the same subspace.
    """

    field: PrimeField
    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, field: PrimeField, ambient_dim: int, vectors: Iterable) -> Subspace:
        rows = [np.asarray(v, dtype=np.int64) for v in vectors]
        if not rows:
            return cls(field, ambient_dim, ())
        arr = np.vstack(rows)
        if arr.shape[1] != ambient_dim:
            raise ShapeError(f"vectors of length {arr.shape[1]} in ambient dim {ambient_dim}")
        R, piv = rref(arr, field.modulus)
        return cls(field, ambient_dim, tuple(tuple(int(x) for x in row) for row in R[:len(piv)]))

    @classmethod
    def full(cls, field: PrimeField, n: int) -> Subspace:
        return cls.span(field, n, np.eye(n, dtype=np.int64))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> np.ndarray:
        """Basis vectors as the rows of a ``(dim, ambient_dim)`` array."""
        if not self.basis:
            return np.zeros((0, self.ambient_dim), dtype=np.int64)
        return np.array(self.basis, dtype=np.int64)

    def pivots(self) -> list[int]:
        return [next(i for i, x in enumerate(row) if x) for row in self.basis]

    def contains(self, v) -> bool:
        v = np.asarray(v, dtype=np.int64) % self.field.modulus
        p = self.field.modulus
        for row, c in zip(self.basis, self.pivots()):
            if v[c]:
                v = (v - v[c] * np.asarray(row, dtype=np.int64)) % p
        return not v.any()

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace.span(self.field, self.ambient_dim, list(self.basis) + list(other.basis))

    def __le__(self, other: Subspace) -> bool:
        return all(other.contains(v) for v in self.basis)

    def __lt__(self, other: Subspace) -> bool:
        return self.dim < other.dim and self <= other


def kernel_basis(m: Matrix) -> Subspace:
    """Canonical basis of ``{v : m v = 0}``."""
    p = m.field.modulus
    n = m.cols
    if m.rows == 0:
        return Subspace.full(m.field, n)
    R, piv = rref(m.array, p)
    free = [j for j in range(n) if j not in set(piv)]
    vecs = []
    for f in free:
        v = np.zeros(n, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(piv):
            v[c] = (-R[i, f]) % p
        vecs.append(v)
    return Subspace.span(m.field, n, vecs)


def fixed_space(g: Matrix) -> Subspace:
    if not g.is_square:
        raise ShapeError(f"fixed space of non-square {g.shape} matrix")
    return kernel_basis(g - Matrix.identity(g.rows, g.field))
