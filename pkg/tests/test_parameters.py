from fractions import Fraction

import numpy as np
import pytest

from cgrank.config import Settings
from cgrank.cube import CubePoint, LinIneq, PointSet, Switching, switch_points
from cgrank.errors import GapCapExceededError, NoFeasibleInBallError, NormBudgetExceededError, PreconditionError
from cgrank.generators import notch_p_example, random_pointset
from cgrank.parameters import (
    Notch3Tag,
    classify_hull_facet,
    classify_notch3_facet,
    gap,
    k4_subdivision_free,
    notch,
    oracle_ball_bound,
    oracle_optimize,
    switched_delta,
)
from cgrank.polyhedra import HPolytope, box_rows, hull_facets, is_full_dimensional, polytopes_equal
from cgrank.subdivision import forbidden_graph, max_subdivision_order
from suites.corpus import permute_points


def test_notch_values(weight_two):
    assert notch(PointSet.empty(4)) == 5
    assert notch(PointSet.full(3)) == 0
    assert notch(notch_p_example(5, 3)) == 3
    assert notch(weight_two) == 2


def test_switched_delta():
    assert switched_delta(LinIneq((1, 1, 1), 2)) == 2
    assert switched_delta(LinIneq((-1, 0), -1)) == 0
    assert switched_delta(LinIneq((2, -1), 0)) == 1


def test_gap_of_trivial_sets():
    assert gap(PointSet.empty(3)).delta == 1
    full = gap(PointSet.full(3))
    assert full.delta == 0
    assert full.witness_system == box_rows(3)


def test_gap_by_facets(weight_two):
    cert = gap(weight_two)
    assert cert.delta == 2
    assert cert.method == "fast"
    assert cert.lower_bound_facet == LinIneq((1, 1, 1), 2)
    assert gap(notch_p_example(5, 3)).delta == 1


def test_gap_by_deepening_on_a_flat_set():
    S = PointSet.from_points(2, [(0, 0), (1, 1)])
    cert = gap(S)
    assert cert.delta == 1
    assert cert.method == "deepening"
    assert LinIneq((1, -1), 0) in cert.witness_system
    assert polytopes_equal(HPolytope(2, cert.witness_system), hull_facets(S))
    assert all(form.delta <= 1 for form in cert.switched_forms())


def test_gap_methods_agree_on_full_dimensional_sets(weight_two):
    assert gap(weight_two, method="deepening").delta == gap(weight_two, method="fast").delta


def test_gap_preconditions_and_budgets():
    flat = PointSet.from_points(2, [(0, 0), (1, 1)])
    with pytest.raises(PreconditionError):
        gap(flat, method="fast")
    with pytest.raises(PreconditionError):
        gap(flat, method="bogus")
    with pytest.raises(GapCapExceededError):
        gap(flat, settings=Settings(gap_cap=0))
    with pytest.raises(NormBudgetExceededError):
        gap(flat, settings=Settings(enum_budget=4))


@pytest.mark.parametrize(
    "row, tag",
    [
        (LinIneq((0, 0, 1, 1), 1), Notch3Tag.FORM1),
        (LinIneq((1, 1, 1), 2), Notch3Tag.FORM2),
        (LinIneq((1, 1, 1, 1), 3), Notch3Tag.FORM3),
        (LinIneq((1, 1, 2, 3), 4), Notch3Tag.FORM4),
        (LinIneq((2, 2, 2, 3), 6), Notch3Tag.FORM5),
        (LinIneq((1, 0, 0), 0), Notch3Tag.BOX),
        (LinIneq((-1, 0), -1), Notch3Tag.BOX),
        (LinIneq((5, 1), 1), Notch3Tag.NONE),
    ],
)
def test_classify_notch3_facet(row, tag):
    assert classify_notch3_facet(row).tag is tag


def test_classification_reads_switched_form():
    form = classify_notch3_facet(LinIneq((-1, -1, -1), -1))
    assert form.tag is Notch3Tag.FORM2
    assert form.switching.flipped == frozenset({0, 1, 2})
    with pytest.raises(PreconditionError):
        classify_notch3_facet(LinIneq((0, 0), 1))


def test_classify_hull_facet_on_flat_set():
    S = PointSet.from_points(3, [(1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1)])
    for row in hull_facets(S).ineqs:
        assert classify_hull_facet(S, row).matched


def test_k4_subdivision_free(weight_two):
    assert k4_subdivision_free(weight_two)
    assert not k4_subdivision_free(PointSet.from_predicate(4, lambda bits: sum(bits) >= 3))


def test_oracle_finds_minimum_within_ball():
    S = PointSet.from_predicate(4, lambda bits: sum(bits) >= 3)
    result = oracle_optimize(S, 4, [1, 2, 3, 4], 3)
    assert result.point == CubePoint(4, (1, 1, 1, 0))
    assert result.cost == 6
    assert result.calls == 15
    point, calls = result
    assert calls == 15


def test_oracle_breaks_ties_by_index():
    S = notch_p_example(5, 3)
    result = oracle_optimize(S, 5, [1] * 5, 3)
    assert result.cost == 1
    assert str(result.point) == "00100"


def test_oracle_accepts_callables_and_negative_costs():
    result = oracle_optimize(lambda bits: bits[0] == 1, 2, [Fraction(-1, 2), 1], 1)
    assert result.point == CubePoint(2, (1, 0))
    assert result.cost == Fraction(-1, 2)
    assert result.calls == 3


def test_oracle_reports_too_small_radius():
    S = PointSet.from_points(3, [(1, 1, 1)])
    with pytest.raises(NoFeasibleInBallError):
        oracle_optimize(S, 3, [1, 1, 1], 2)
    with pytest.raises(PreconditionError):
        oracle_optimize(S, 3, [1, 1], 3)


def test_oracle_ball_bound():
    assert oracle_ball_bound(4, 3) == (15, 125)
    assert oracle_ball_bound(3, 0) == (1, 1)
    assert oracle_ball_bound(3, 5) == (8, 4 ** 5)


def test_notch_and_gap_are_symmetry_invariant():
    S = PointSet.from_points(3, [(1, 0, 0), (1, 1, 0), (1, 1, 1), (0, 1, 1)])
    images = [switch_points(S, Switching(3, frozenset({1}))), permute_points(S, (1, 2, 0))]
    for image in images:
        assert notch(image) == notch(S)
        assert gap(image).delta == gap(S).delta


@pytest.mark.parametrize("n", [3, 4, 5])
def test_gap_and_subdivision_order_are_symmetry_invariant(n):
    density = Fraction(3, 4) if n == 5 else Fraction(1, 2)
    for seed in range(4):
        rng = np.random.Generator(np.random.Philox(100 + seed))
        S = random_pointset(n, density, seed)
        f = Switching.from_mask(n, int(rng.integers(0, 1 << n)))
        perm = tuple(int(i) for i in rng.permutation(n))
        image = permute_points(switch_points(S, f), perm)
        assert notch(image) == notch(S)
        assert gap(image).delta == gap(S).delta
        assert max_subdivision_order(forbidden_graph(image)) == max_subdivision_order(forbidden_graph(S))


def test_notch_is_monotone_on_nested_sets():
    n = 3
    for mask in range(1 << (1 << n)):
        S = PointSet.from_indices(n, (v for v in range(1 << n) if (mask >> v) & 1))
        p = notch(S)
        for v in range(1 << n):
            if not (mask >> v) & 1:
                bigger = PointSet.from_indices(n, list(S.indices()) + [v])
                assert notch(bigger) <= p


@pytest.mark.parametrize("n", range(1, 7))
def test_notch_p_example_has_notch_p_and_gap_1(n):
    for p in range(1, n + 1):
        S = notch_p_example(n, p)
        assert notch(S) == p
        assert gap(S).delta == 1


@pytest.mark.parametrize("n", [3, 4])
def test_gap_methods_agree_on_seeded_sets(n):
    checked = 0
    for seed in range(12):
        S = random_pointset(n, Fraction(3, 4), seed)
        if S.is_full() or not is_full_dimensional(S):
            continue
        assert gap(S, method="fast").delta == gap(S, method="deepening").delta
        checked += 1
    assert checked > 0
