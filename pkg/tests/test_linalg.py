import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oddrep.errors import ShapeError
from oddrep.field import PrimeField
from oddrep.linalg import (Matrix, Subspace, determinant, fixed_space, inverse,
                           kernel_basis, mat_mul, rank)
from oddrep.reptheory import c_infinity

from conftest import random_invertible
from oracles import brute_kernel_size, leibniz_det


def test_mat_mul_examples(F7, rng):
    m = Matrix(F7, rng.integers(0, 7, size=(3, 4)))
    assert mat_mul(Matrix.identity(3, F7), m) == m
    assert (m @ Matrix.zeros(4, 2, F7)) == Matrix.zeros(3, 2, F7)
    with pytest.raises(ShapeError):
        m @ m


@pytest.mark.parametrize("N", [4, 6, 8, 10])
def test_c_infinity_squares_to_identity_and_has_det_one(N, F7):
    c = c_infinity(N, F7)
    assert (c @ c).is_identity()
    assert determinant(c) == 1


def test_determinant_examples(F7):
    assert determinant(Matrix.identity(5, F7)) == 1
    assert determinant(Matrix(F7, [[1, 2], [2, 4]])) == 0
    with pytest.raises(ShapeError):
        determinant(Matrix(F7, [[1, 2, 3]]))


@pytest.mark.parametrize("seed", range(20))
def test_determinant_matches_leibniz(seed):
    rng = np.random.default_rng(seed)
    F = PrimeField(11)
    n = 1 + seed % 5
    rows = rng.integers(0, 11, size=(n, n)).tolist()
    assert determinant(Matrix(F, rows)).value == leibniz_det(rows, 11)


def test_kernel_examples(F7):
    assert kernel_basis(Matrix.identity(3, F7)).dim == 0
    assert kernel_basis(Matrix.zeros(2, 3, F7)) == Subspace.full(F7, 3)
    assert kernel_basis(Matrix(F7, [[1, 1], [1, 1]])).basis == ((1, 6),)


@pytest.mark.parametrize("seed", range(10))
def test_kernel_size_matches_enumeration(seed):
    rng = np.random.default_rng(seed)
    F = PrimeField(5)
    rows = rng.integers(0, 3, size=(3, 4)).tolist()  # small entries give rank drops
    K = kernel_basis(Matrix(F, rows))
    assert 5 ** K.dim == brute_kernel_size(rows, 5)
    for v in K.basis:
        assert not Matrix(F, rows).apply(v).any()


def test_fixed_space_examples(F7):
    assert fixed_space(Matrix.identity(4, F7)).dim == 4
    assert fixed_space(Matrix.scalar(4, -1, F7)).dim == 0
    fs = fixed_space(c_infinity(4, F7))
    assert fs.dim == 2
    assert fs == Subspace.span(F7, 4, [[1, 0, 1, 0], [0, 1, 0, 1]])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.integers(1, 12), st.integers(0, 2**32 - 1))
def test_rank_nullity(r, c, seed):
    F = PrimeField(7)
    rng = np.random.default_rng(seed)
    a = rng.integers(0, 7, size=(r, c))
    if seed % 3 == 0 and r > 1:
        a[-1] = (a[0] * 3) % 7  # force dependence
    m = Matrix(F, a)
    assert rank(m) + kernel_basis(m).dim == c


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 8), st.integers(0, 2**32 - 1))
def test_determinant_is_multiplicative(n, seed):
    F = PrimeField(7)
    rng = np.random.default_rng(seed)
    a = Matrix(F, rng.integers(0, 7, size=(n, n)))
    b = Matrix(F, rng.integers(0, 7, size=(n, n)))
    assert determinant(a @ b) == determinant(a) * determinant(b)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 10), st.integers(0, 10), st.integers(0, 2**32 - 1))
def test_involution_eigenspaces_fill_the_space(n, k, seed):
    F = PrimeField(7)
    rng = np.random.default_rng(seed)
    k = min(k, n)
    d = Matrix.diag([1] * k + [-1] * (n - k), F)
    h = random_invertible(n, F, rng)
    g = h @ d @ inverse(h)
    assert (g @ g).is_identity()
    assert fixed_space(g).dim + fixed_space(-g).dim == n
    assert fixed_space(g).dim == k


def test_subspace_is_canonical(F7):
    a = Subspace.span(F7, 3, [[1, 2, 3], [0, 1, 1]])
    b = Subspace.span(F7, 3, [[1, 3, 4], [2, 4, 6], [0, 2, 2]])
    assert a == b and hash(a) == hash(b)
    assert a.contains([1, 3, 4]) and not a.contains([0, 0, 1])


def test_large_modulus_products_do_not_overflow():
    p = 2147483647
    F = PrimeField(p)
    a = Matrix(F, [[p - 1] * 40] * 40)
    assert (a @ a).tolist()[0][0] == 40
    assert determinant(Matrix(F, [[p - 1, 3], [5, p - 2]])).value == (2 - 15) % p
