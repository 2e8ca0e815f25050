import pytest
from hypothesis import given, strategies as st

from oddrep.errors import DivisionByZero, ModulusMismatch, NotAUnit, NotPrime
from oddrep.field import (PrimeField, SmallPrimeWarning, SquareClass, arith,
                          check_prime_bound, invert, square_class)

from oracles import brute_inverse, squares_mod

PRIMES = [p for p in range(5, 102) if all(p % d for d in range(2, p))]


def test_arith_examples(F7):
    assert arith(F7(3), F7(5), "add") == 1
    assert arith(F7(0), F7(6), "mul") == 0
    assert arith(F7(6), F7(1), "add") == 0
    assert arith(F7(2), F7(5), "sub") == 4


def test_arith_rejects_mismatched_moduli(F7, F11):
    with pytest.raises(ModulusMismatch):
        arith(F7(1), F11(1), "add")
    with pytest.raises(ModulusMismatch):
        F7(1) * F11(2)


def test_invert(F7):
    assert invert(F7(1)) == 1
    assert invert(F7(3)) == brute_inverse(3, 7) == 5
    assert invert(F7(6)) == 6
    with pytest.raises(DivisionByZero):
        invert(F7(0))


def test_square_class_examples(F7):
    assert square_class(F7(4)) is SquareClass.TRIVIAL
    assert squares_mod(7) == {1, 2, 4}
    assert square_class(F7(3)) is SquareClass.NONTRIVIAL
    assert square_class(F7(6)) is SquareClass.NONTRIVIAL
    with pytest.raises(NotAUnit):
        square_class(F7(0))


@pytest.mark.parametrize("p", PRIMES)
def test_square_class_is_a_character(p):
    F = PrimeField(p)
    sq = squares_mod(p)
    classes = {a: square_class(F(a)) for a in range(1, p)}
    assert {a for a, c in classes.items() if c is SquareClass.TRIVIAL} == sq
    assert sum(c is SquareClass.TRIVIAL for c in classes.values()) == (p - 1) // 2
    for a in range(1, p):
        for b in range(1, p):
            assert classes[a * b % p] is classes[a] * classes[b]


@pytest.mark.parametrize("p", [5, 7, 11, 13, 101])
def test_minus_one_is_square_iff_p_is_1_mod_4(p):
    F = PrimeField(p)
    assert (square_class(F(-1)) is SquareClass.TRIVIAL) == (p % 4 == 1)


@given(st.sampled_from(PRIMES), st.integers())
def test_invert_is_an_involution(p, a):
    F = PrimeField(p)
    x = F(a)
    if x.value == 0:
        return
    assert invert(invert(x)) == x
    assert x * invert(x) == 1


@pytest.mark.parametrize("bad", [1, 2, 3, 4, 9, 15, 91, 1 << 31])
def test_rejects_non_primes_and_small_primes(bad):
    with pytest.raises(NotPrime):
        PrimeField(bad)


def test_large_word_sized_prime():
    F = PrimeField(2147483647)
    assert F(-1) * F(-1) == 1
    assert square_class(F(-1)) is SquareClass.NONTRIVIAL


def test_small_prime_warning():
    with pytest.warns(SmallPrimeWarning):
        assert not check_prime_bound(PrimeField(13), 6)
    assert check_prime_bound(PrimeField(29), 6)
