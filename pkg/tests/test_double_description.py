import pytest

from cgrank.double_description import extreme_rays
from cgrank.errors import PreconditionError


def test_orthant():
    assert extreme_rays([(1, 0), (0, 1)], 2) == [(0, 1), (1, 0)]


def test_homogenized_square():
    # x >= 0, y >= 0, t - x >= 0, t - y >= 0
    rows = [(1, 0, 0), (0, 1, 0), (-1, 0, 1), (0, -1, 1)]
    assert extreme_rays(rows, 3) == [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)]


def test_redundant_row_adds_no_ray():
    rows = [(1, 0, 0), (0, 1, 0), (-1, 0, 1), (0, -1, 1), (1, 1, 0)]
    assert len(extreme_rays(rows, 3)) == 4


def test_cone_collapses_to_origin():
    assert extreme_rays([(1, 0), (0, 1), (-1, -1)], 2) == []


def test_non_pointed_cone_is_rejected():
    with pytest.raises(PreconditionError):
        extreme_rays([(1, 0)], 2)
