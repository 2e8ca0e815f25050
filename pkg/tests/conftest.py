import numpy as np
import pytest

from oddrep.field import PrimeField
from oddrep.linalg import Matrix
from oddrep.ortho import BilinearSpace, reflection_product


@pytest.fixture
def F7():
    return PrimeField(7)


@pytest.fixture
def F11():
    return PrimeField(11)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_anisotropic(V: BilinearSpace, rng) -> np.ndarray:
    p = V.field.modulus
    while True:
        v = rng.integers(0, p, size=V.dim)
        if V.norm(v):
            return v


def random_reflection_product(V: BilinearSpace, rng, k: int):
    """An isometry built from ``k`` random reflections, plus the vectors used."""
    vs = [random_anisotropic(V, rng) for _ in range(k)]
    return reflection_product(vs, V), vs


def random_invertible(n: int, F: PrimeField, rng) -> Matrix:
    from oddrep.linalg import determinant
    while True:
        m = Matrix(F, rng.integers(0, F.modulus, size=(n, n)))
        if determinant(m).value:
            return m


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
