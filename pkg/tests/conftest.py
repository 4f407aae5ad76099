import numpy as np
import pytest

from cgrank.config import Settings
from cgrank.cube import LinIneq, PointSet
from cgrank.polyhedra import HPolytope


@pytest.fixture
def settings():
    return Settings()


@pytest.fixture
def corner_cut():
    """[0,1]^2 with x1 + x2 <= 3/2, stored as -2x1 - 2x2 >= -3."""
    return HPolytope(2, (LinIneq((-2, -2), -3),))


@pytest.fixture
def triangle_points():
    """{00, 10, 01}: the 0/1 points of the corner cut."""
    return PointSet.from_points(2, [(0, 0), (1, 0), (0, 1)])


@pytest.fixture
def weight_two():
    """{x in {0,1}^3 : x1 + x2 + x3 >= 2}."""
    return PointSet.from_predicate(3, lambda bits: sum(bits) >= 2)


@pytest.fixture
def random_ineq():
    """Factory for seeded nonzero integer inequalities with entries in [-3, 3]."""
    def make(rng: np.random.Generator, n: int) -> LinIneq:
        coeffs = [int(v) for v in rng.integers(-3, 4, size=n)]
        if not any(coeffs):
            coeffs[int(rng.integers(0, n))] = 1
        return LinIneq(tuple(coeffs), int(rng.integers(-3, 4)))
    return make
