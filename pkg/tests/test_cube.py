import math

import numpy as np
import pytest

from cgrank.cube import (
    CG_NORMALIZED,
    HALFSPACE,
    CubeFace,
    CubePoint,
    LinIneq,
    PointSet,
    Switching,
    bits_of,
    cube_matrix,
    enumerate_faces,
    face_intersects,
    index_of,
    primitive_form,
    spanned_by_01,
    switch_ineq,
    switch_points,
)
from cgrank.errors import DimensionMismatchError, PreconditionError


def test_coordinate_one_is_the_low_bit():
    assert index_of((1, 0, 1)) == 5
    assert bits_of(5, 3) == (1, 0, 1)
    assert cube_matrix(2).tolist() == [[0, 0], [1, 0], [0, 1], [1, 1]]
    assert str(CubePoint.from_index(3, 6)) == "011"


def test_pointset_membership_and_order(triangle_points):
    S = triangle_points
    assert len(S) == 3
    assert (1, 1) not in S
    assert CubePoint(2, (1, 0)) in S
    assert 2 in S
    assert [str(p) for p in S] == ["00", "10", "01"]
    assert S.complement() == PointSet.from_points(2, [(1, 1)])
    assert S.issubset(PointSet.full(2))
    assert S.bitmask() == 0b0111


def test_pointset_rejects_wrong_sizes():
    with pytest.raises(DimensionMismatchError):
        PointSet(2, [True, False])
    with pytest.raises(DimensionMismatchError):
        PointSet.from_points(3, [(0, 1)])
    with pytest.raises(PreconditionError):
        PointSet.from_indices(2, [4])


def test_pointset_is_immutable(triangle_points):
    with pytest.raises(ValueError):
        triangle_points.members[3] = True


def test_faces():
    assert len(enumerate_faces(3, 1)) == 12
    assert len(enumerate_faces(4, 0)) == 16
    assert len(enumerate_faces(4, 4)) == 1
    F = CubeFace.from_mapping(3, {0: 1, 2: 0})
    assert F.dimension == 1
    assert F.free == (1,)
    assert sorted(F.vertex_indices().tolist()) == [1, 3]
    assert face_intersects(F, PointSet.from_indices(3, [3]))
    assert not face_intersects(F, PointSet.from_indices(3, [5]))
    with pytest.raises(PreconditionError):
        CubeFace(2, ((0, 1), (0, 0)))


def test_switching_points_and_inequalities():
    f = Switching(2, frozenset({0}))
    S = PointSet.from_points(2, [(1, 0)])
    assert switch_points(S, f) == PointSet.from_points(2, [(0, 0)])
    assert f.apply(CubePoint(2, (1, 1))) == CubePoint(2, (0, 1))
    q = switch_ineq(LinIneq((1, 1), 1), f)
    assert q == LinIneq((-1, 1), 0)
    for bits in cube_matrix(2).tolist():
        flipped = (1 - bits[0], bits[1])
        assert q.satisfied_by(bits) == LinIneq((1, 1), 1).satisfied_by(flipped)


def test_switched_form_reading():
    form = LinIneq((1, -2, 0), 0).switched_form()
    assert form.I == frozenset({0})
    assert form.J == frozenset({1})
    assert form.c == (1, 2, 0)
    assert form.delta == 2
    assert LinIneq.from_switched(form.I, form.J, form.c, form.delta) == LinIneq((1, -2, 0), 0)


def test_primitive_forms():
    assert primitive_form(LinIneq((2, 4), 6), HALFSPACE) == LinIneq((1, 2), 3)
    assert primitive_form(LinIneq((2, 4), 3), CG_NORMALIZED) == LinIneq((1, 2), 2)
    with pytest.raises(PreconditionError):
        primitive_form(LinIneq((0, 0), 1))


def test_spanned_by_01():
    assert spanned_by_01(LinIneq((1, 1, 1), 2))
    assert not spanned_by_01(LinIneq((2, 2), 1))


def test_inequality_data_must_be_integral():
    with pytest.raises(PreconditionError):
        LinIneq((0.5, 1), 0)
    assert LinIneq((np.int64(2), 1), 0).coeffs == (2, 1)
    assert str(LinIneq((1, -1), 0)) == "+1x1 -1x2 >= 0"


def test_switching_is_an_involution():
    for seed in range(100):
        rng = np.random.Generator(np.random.Philox(seed))
        n = int(rng.integers(1, 7))
        S = PointSet(n, rng.integers(0, 2, size=1 << n).astype(bool))
        f = Switching.from_mask(n, int(rng.integers(0, 1 << n)))
        assert switch_points(switch_points(S, f), f) == S
        assert len(switch_points(S, f)) == len(S)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_switching_commutes_with_membership_and_inequalities(n, random_ineq):
    rng = np.random.Generator(np.random.Philox(n))
    S = PointSet(n, rng.integers(0, 2, size=1 << n).astype(bool))
    rows = [random_ineq(rng, n) for _ in range(5)]
    for mask in range(1 << n):
        f = Switching.from_mask(n, mask)
        image = switch_points(S, f)
        for v in range(1 << n):
            x = CubePoint.from_index(n, v)
            y = f.apply(x)
            assert image.members[y.index] == S.members[v]
            for q in rows:
                switched = switch_ineq(q, f)
                assert switched.evaluate(y.bits) - switched.rhs == q.evaluate(x.bits) - q.rhs
        for q in rows:
            assert switch_ineq(switch_ineq(q, f), f) == q


def test_face_counts():
    for n in range(1, 7):
        for d in range(n + 1):
            faces = enumerate_faces(n, d)
            assert len(faces) == math.comb(n, d) * 2 ** (n - d)
            assert len(set(faces)) == len(faces)
            assert all(F.dimension == d and len(F.vertex_indices()) == 2 ** d for F in faces)


def test_primitive_form_is_idempotent(random_ineq):
    rng = np.random.Generator(np.random.Philox(11))
    for _ in range(100):
        q = random_ineq(rng, int(rng.integers(1, 6))).scaled(int(rng.integers(1, 5)))
        for mode in (HALFSPACE, CG_NORMALIZED):
            once = primitive_form(q, mode)
            assert primitive_form(once, mode) == once
        assert primitive_form(q, HALFSPACE).satisfied_by((0,) * q.n) == q.satisfied_by((0,) * q.n)


def test_spanned_by_01_ignores_switching_and_scaling(random_ineq):
    rng = np.random.Generator(np.random.Philox(12))
    for _ in range(60):
        n = int(rng.integers(1, 5))
        q = random_ineq(rng, n)
        expected = spanned_by_01(q)
        f = Switching.from_mask(n, int(rng.integers(0, 1 << n)))
        assert spanned_by_01(switch_ineq(q, f)) == expected
        assert spanned_by_01(q.scaled(int(rng.integers(2, 5)))) == expected
