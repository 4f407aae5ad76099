from fractions import Fraction

from cgrank.simplex import INFEASIBLE, solve_lp


def test_fractional_optimum():
    result = solve_lp(2, [1, 0], [((2, 2), 3)])
    assert result.feasible
    assert result.value == Fraction(1, 2)


def test_box_bounds_apply():
    result = solve_lp(2, [-1, -1], [])
    assert result.value == -2
    assert result.point == (1, 1)


def test_equality_rows():
    result = solve_lp(2, [1, 0], [((1, 1), 1)], [((1, -1), 0)])
    assert result.value == Fraction(1, 2)
    assert result.point == (Fraction(1, 2), Fraction(1, 2))


def test_infeasible_system():
    result = solve_lp(2, [1, 1], [((1, 1), 3)])
    assert not result.feasible
    assert result.value is None


def test_degenerate_rows_terminate():
    rows = [((1, 1), 1), ((1, 1), 1), ((2, 2), 2), ((1, 0), 0)]
    assert solve_lp(2, [1, 2], rows).value == 1


def test_infeasible_marker_is_a_singleton():
    assert type(INFEASIBLE)() is INFEASIBLE
    assert repr(INFEASIBLE) == "INFEASIBLE"
