from fractions import Fraction

import joblib
import pytest

from cgrank.closure import (
    approx_closure_check,
    cg_rank,
    closure_sequence,
    dump_certificate,
    elementary_closure,
    is_integral,
    load_certificate,
    validity_depth,
)
from cgrank.config import Settings
from cgrank.cube import LinIneq, PointSet
from cgrank.errors import IntegerPointMismatchError, NormBudgetExceededError, PreconditionError
from cgrank.generators import worst_relaxation
from cgrank.parameters import gap, notch
from cgrank.polyhedra import HPolytope, box, hull_facets, integer_points, is_valid, polytopes_equal


def test_corner_cut_closes_to_triangle(corner_cut, triangle_points, settings):
    step = elementary_closure(corner_cut, settings)
    assert polytopes_equal(step.output, hull_facets(triangle_points))
    assert LinIneq((-1, -1), -1) in step.output.ineqs
    assert step.input_norm == 2
    assert step.cuts_kept >= 1
    assert 0 < step.max_cut_norm <= 2 * step.input_norm
    assert step.summary()["round"] == 1


def test_lower_corner_cut_rounds_up(settings):
    P = HPolytope(2, (LinIneq((2, 2), 1),))
    S = integer_points(P)
    assert S == PointSet.from_points(2, [(1, 0), (0, 1), (1, 1)])
    step = elementary_closure(P, settings)
    assert is_valid(step.output, LinIneq((1, 1), 1))
    assert cg_rank(P, S, settings=settings).rank == 1


def test_integral_and_empty_inputs_are_fixed_points(settings):
    step = elementary_closure(box(2), settings)
    assert step.candidates_enumerated == 0
    assert polytopes_equal(step.output, box(2))
    empty = elementary_closure(HPolytope(2, (LinIneq((1, 1), 3),)), settings)
    assert empty.candidates_enumerated == 0
    assert integer_points(empty.output).is_empty()


def test_closure_budget(corner_cut):
    with pytest.raises(NormBudgetExceededError) as info:
        elementary_closure(corner_cut, Settings(enum_budget=10))
    assert info.value.layer == 1
    assert info.value.requested == 81


def test_cg_rank_of_corner_cut(corner_cut, triangle_points, settings):
    cert = cg_rank(corner_cut, triangle_points, settings=settings)
    assert cert.rank == 1
    assert cert.converged
    assert len(cert.trace()) == 1


def test_cg_rank_cap(corner_cut, triangle_points, settings):
    cert = cg_rank(corner_cut, triangle_points, cap=0, settings=settings)
    assert cert.rank is None
    assert not cert.converged
    assert cg_rank(box(2), PointSet.full(2), settings=settings).rank == 0


def test_cg_rank_checks_integer_points(settings):
    with pytest.raises(IntegerPointMismatchError) as info:
        cg_rank(box(2), PointSet.empty(2), settings=settings)
    assert info.value.in_polytope
    with pytest.raises(PreconditionError):
        cg_rank(box(2), PointSet.full(3), settings=settings)


def test_worst_relaxation_rank_within_notch_and_gap(weight_two, settings):
    p = notch(weight_two)
    delta = gap(weight_two, settings=settings).delta
    cert = cg_rank(worst_relaxation(weight_two), weight_two, settings=settings)
    assert cert.converged
    assert p - 1 <= cert.rank <= p + delta - 1


def test_closure_sequence_is_shared_and_stabilizes(corner_cut, settings):
    seq = closure_sequence(corner_cut, settings)
    assert closure_sequence(corner_cut, settings) is seq
    assert seq.polytope(0) == seq.start
    final = seq.polytope(5)
    assert seq.stable
    assert len(seq.rounds) == 2
    assert is_integral(final)
    with pytest.raises(PreconditionError):
        seq.polytope(-1)


def test_validity_depth(corner_cut, triangle_points, settings):
    assert validity_depth(corner_cut, LinIneq((-1, -1), -1), triangle_points, settings=settings) == 1
    assert validity_depth(corner_cut, LinIneq((1, 0), 0), triangle_points, settings=settings) == 0
    assert validity_depth(corner_cut, LinIneq((-1, -1), -1), triangle_points, cap=0, settings=settings) is None
    with pytest.raises(PreconditionError):
        validity_depth(corner_cut, LinIneq((1, 1), 1), triangle_points, settings=settings)


def test_approx_closure_check(weight_two, settings):
    report = approx_closure_check(weight_two, worst_relaxation(weight_two), 1, settings)
    assert report.notch == 2
    assert report.t == 1
    assert report.passed
    assert any(f.applicable for f in report.facets)
    half = approx_closure_check(weight_two, worst_relaxation(weight_two), Fraction(1, 2), settings)
    assert half.t == 3
    assert half.passed


def test_approx_closure_check_preconditions(weight_two, settings):
    R = worst_relaxation(weight_two)
    with pytest.raises(PreconditionError):
        approx_closure_check(weight_two, R, Fraction(3, 5), settings)
    with pytest.raises(PreconditionError):
        approx_closure_check(weight_two, R, 0, settings)


def test_certificate_persistence(tmp_path, corner_cut, triangle_points, settings):
    cert = cg_rank(corner_cut, triangle_points, settings=settings)
    path = tmp_path / "rank.joblib"
    dump_certificate(cert, str(path))
    loaded = load_certificate(str(path))
    assert loaded.rank == cert.rank
    assert loaded.trace() == cert.trace()

    other = tmp_path / "other.joblib"
    joblib.dump({"rank": 1}, other)
    with pytest.raises(PreconditionError):
        load_certificate(str(other))
