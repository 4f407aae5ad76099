from fractions import Fraction

import pytest

from cgrank.errors import PreconditionError
from cgrank.generators import (
    badfacet_coefficients,
    badfacet_instance,
    badfacet_seven_smallest,
    notch_p_example,
    random_pointset,
    support_at_least,
    unit_relaxation,
    worst_relaxation,
)
from cgrank.polyhedra import integer_points, is_valid
from cgrank.cube import LinIneq, PointSet


def test_relaxations_keep_exactly_the_points(weight_two):
    worst = worst_relaxation(weight_two)
    unit = unit_relaxation(weight_two)
    assert len(worst.ineqs) == 2 * 3 + 4
    assert integer_points(worst) == weight_two
    assert integer_points(unit) == weight_two
    assert LinIneq((2, 2, 2), 1) in worst.ineqs
    assert LinIneq((1, 1, 1), 1) in unit.ineqs


def test_unit_relaxation_lies_inside_worst(weight_two):
    worst = worst_relaxation(weight_two)
    unit = unit_relaxation(weight_two)
    assert all(is_valid(unit, q) for q in worst.ineqs)


def test_badfacet_coefficients():
    assert badfacet_coefficients(1) == (2, 1, 1, 1)
    assert badfacet_coefficients(2) == (4, 2, 2, 1, 1, 3)
    assert len(badfacet_coefficients(5)) == 12
    with pytest.raises(PreconditionError):
        badfacet_coefficients(0)


def test_badfacet_instance():
    inst = badfacet_instance(2)
    assert inst.dim == 6
    assert inst.threshold == 8
    assert inst.facet == LinIneq((4, 2, 2, 1, 1, 3), 8)
    assert all(inst.facet.satisfied_by(p.bits) for p in inst.S)
    assert not inst.facet.satisfied_by((0,) * 6)


def test_badfacet_seven_smallest():
    assert badfacet_seven_smallest(1) == 5
    assert badfacet_seven_smallest(3) == sum(sorted(badfacet_coefficients(3))[:7])


def test_notch_p_example():
    S = notch_p_example(5, 3)
    assert len(S) == 32 - 4
    assert (1, 1, 0, 0, 0) not in S
    with pytest.raises(PreconditionError):
        notch_p_example(3, 4)


def test_support_at_least():
    assert len(support_at_least(3, 2)) == 4
    assert support_at_least(3, 0).is_full()
    assert support_at_least(3, 4).is_empty()
    with pytest.raises(PreconditionError):
        support_at_least(3, 5)


def test_random_pointset_is_seeded():
    assert random_pointset(4, Fraction(1, 2), 7) == random_pointset(4, Fraction(1, 2), 7)
    assert random_pointset(4, 0, 7).is_empty()
    assert random_pointset(4, 1, 7).is_full()
    assert isinstance(random_pointset(3, "1/3", 1), PointSet)
    with pytest.raises(PreconditionError):
        random_pointset(3, Fraction(3, 2), 1)
