"""
Exact polyhedral engine: V<->H conversion, LP, redundancy removal, equality.

Every polytope handled here lives inside [0,1]^n; the box rows are adjoined
whenever a computation needs a bounded system.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from .cube import HALFSPACE, LinIneq, PointSet, cube_matrix, primitive_form
from .double_description import extreme_rays
from .errors import CGRankError, DimensionMismatchError, PreconditionError
from .rational import independent_rows, integer_row, matrix_rank, nullspace, primitive_vector, rref
from .simplex import INFEASIBLE, solve_lp

logger = logging.getLogger(__name__)

RationalPoint = Tuple[Fraction, ...]


@dataclass(frozen=True)
class HPolytope:
    """{x : a.x >= b for every inequality, a.x = b for every equation}."""
    n: int
    ineqs: Tuple[LinIneq, ...] = ()
    eqs: Tuple[LinIneq, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "ineqs", tuple(self.ineqs))
        object.__setattr__(self, "eqs", tuple(self.eqs))
        for row in self.ineqs + self.eqs:
            if row.n != self.n:
                raise DimensionMismatchError(self.n, row.n, "polytope row")

    @property
    def norm(self) -> int:
        """||A||_inf over inequalities and equations."""
        return max((row.norm for row in self.ineqs + self.eqs), default=0)

    def ge_rows(self) -> List[LinIneq]:
        """Every row as an inequality (equations contribute both directions)."""
        rows = list(self.ineqs)
        for eq in self.eqs:
            rows.append(eq)
            rows.append(eq.negated())
        return rows

    def contains(self, x: Sequence) -> bool:
        values = [Fraction(v) for v in x]
        if len(values) != self.n:
            raise DimensionMismatchError(self.n, len(values), "point")
        if any(v < 0 or v > 1 for v in values):
            return False
        if any(sum(a * v for a, v in zip(q.coeffs, values)) < q.rhs for q in self.ineqs):
            return False
        return all(sum(a * v for a, v in zip(q.coeffs, values)) == q.rhs for q in self.eqs)

    def with_rows(self, extra: Iterable[LinIneq]) -> "HPolytope":
        return HPolytope(self.n, self.ineqs + tuple(extra), self.eqs)


@dataclass(frozen=True)
class VPolytope:
    n: int
    vertices: Tuple[RationalPoint, ...] = ()

    def __post_init__(self):
        verts = tuple(tuple(Fraction(v) for v in p) for p in self.vertices)
        if len(set(verts)) != len(verts):
            raise PreconditionError("vertex list contains duplicates")
        for p in verts:
            if len(p) != self.n:
                raise DimensionMismatchError(self.n, len(p), "vertex")
            if any(v < 0 or v > 1 for v in p):
                raise PreconditionError(f"vertex {p} lies outside the unit box")
        object.__setattr__(self, "vertices", verts)

    def is_empty(self) -> bool:
        return not self.vertices

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for p in self.vertices for v in p)

    def as_pointset(self) -> PointSet:
        """The 0/1 vertices as a point set (fractional vertices are ignored)."""
        return PointSet.from_points(
            self.n, [tuple(int(v) for v in p) for p in self.vertices if all(v.denominator == 1 for v in p)]
        )


def box_rows(n: int) -> Tuple[LinIneq, ...]:
    """The 2n rows x_i >= 0 and -x_i >= -1, interleaved per coordinate."""
    rows = []
    for i in range(n):
        unit = [0] * n
        unit[i] = 1
        rows.append(LinIneq(tuple(unit), 0))
        unit[i] = -1
        rows.append(LinIneq(tuple(unit), -1))
    return tuple(rows)


def box(n: int) -> HPolytope:
    """The unit cube [0,1]^n as an H-system."""
    return HPolytope(n, box_rows(n))


def empty_polytope(n: int) -> HPolytope:
    """Canonical infeasible system 0.x >= 1."""
    return HPolytope(n, (LinIneq((0,) * n, 1),))


def with_box(P: HPolytope) -> HPolytope:
    present = set(P.ineqs)
    missing = [row for row in box_rows(P.n) if row not in present]
    return P.with_rows(missing) if missing else P


def _check(P: HPolytope, n: int, what: str = "objective"):
    if P.n != n:
        raise DimensionMismatchError(P.n, n, what)


def affine_hull(points: Sequence[Sequence], n: int) -> Tuple[Tuple[LinIneq, ...], Tuple[int, ...]]:
    """
    Canonical equation basis of aff(points) and a coordinate set K onto which
    the projection of aff(points) is bijective (|K| = affine dimension).
    """
    if not points:
        raise PreconditionError("affine hull of an empty point set")
    m_rows = [[Fraction(v) for v in p] + [Fraction(-1)] for p in points]
    basis = nullspace(m_rows, n + 1)
    reduced, _ = rref(basis)
    eqs = []
    for row in reduced:
        vec = primitive_vector(row)
        eqs.append(LinIneq(vec[:n], vec[n]))
    columns = [tuple(Fraction(1) for _ in points)] + [tuple(Fraction(p[j]) for p in points) for j in range(n)]
    chosen = independent_rows(columns, len(columns))
    coords = tuple(c - 1 for c in chosen if c > 0)
    return tuple(eqs), coords


def _facets_from_points(points: Sequence[Sequence], n: int, coords: Tuple[int, ...]) -> List[LinIneq]:
    """Facet rows of conv(points), supported on coords, via the cone of valid inequalities."""
    d = len(coords)
    if d == 0:
        return []
    cone_rows = [primitive_vector([p[j] for j in coords] + [-1]) for p in points]
    facets = []
    for ray in extreme_rays(cone_rows, d + 1):
        a_k, beta = ray[:d], ray[d]
        if not any(a_k):
            continue
        coeffs = [0] * n
        for j, a in zip(coords, a_k):
            coeffs[j] = a
        facets.append(primitive_form(LinIneq(tuple(coeffs), beta), HALFSPACE))
    return facets


def _sorted_rows(rows: Iterable[LinIneq]) -> Tuple[LinIneq, ...]:
    return tuple(sorted(set(rows), key=lambda q: (q.coeffs, q.rhs)))


def hull_facets(S: PointSet) -> HPolytope:
    """Irredundant exact description of conv(S): affine-hull equations plus facets."""
    if S.is_empty():
        return empty_polytope(S.n)
    points = [tuple(int(v) for v in row) for row in S.points_array()]
    eqs, coords = affine_hull(points, S.n)
    facets = _facets_from_points(points, S.n, coords)
    logger.debug(f"conv(S) for |S|={len(points)}: {len(eqs)} equations, {len(facets)} facets")
    return HPolytope(S.n, _sorted_rows(facets), eqs)


def vertices(P: HPolytope) -> VPolytope:
    """Exact vertex list of P intersected with the unit box."""
    n = P.n
    rows = []
    for i in range(n):
        rows.append(tuple(int(j == i) for j in range(n)) + (0,))
    rows.append((0,) * n + (1,))
    for i in range(n):
        rows.append(tuple(-int(j == i) for j in range(n)) + (1,))
    extra = []
    for q in P.ge_rows():
        extra.append(q.coeffs + (-q.rhs,))
    rows.extend(sorted(set(extra)))
    verts = []
    for ray in extreme_rays(rows, n + 1):
        t = ray[n]
        if t <= 0:
            raise CGRankError("unbounded direction found for a polytope inside the unit box")
        verts.append(tuple(Fraction(v, t) for v in ray[:n]))
    return VPolytope(n, tuple(sorted(verts)))


def lp_min(P: HPolytope, c: Sequence[int]):
    """Exact min of c.x over P (inside the box), or INFEASIBLE."""
    _check(P, len(c))
    result = solve_lp(
        P.n,
        [int(v) for v in c],
        [(q.coeffs, q.rhs) for q in P.ineqs],
        [(q.coeffs, q.rhs) for q in P.eqs],
    )
    return result.value if result.feasible else INFEASIBLE


def lp_min_by_vertices(V: VPolytope, c: Sequence) -> Union[Fraction, object]:
    """Vertex-scan LP oracle: min of c.x over the listed vertices."""
    if len(c) != V.n:
        raise DimensionMismatchError(V.n, len(c), "objective")
    if V.is_empty():
        return INFEASIBLE
    return min(sum(Fraction(a) * v for a, v in zip(c, p)) for p in V.vertices)


def is_valid(P: HPolytope, q: LinIneq) -> bool:
    """True iff q holds on all of P (vacuously true when P is empty)."""
    _check(P, q.n, "inequality")
    value = lp_min(P, q.coeffs)
    return value is INFEASIBLE or value >= q.rhs


def _tight_mask(q: LinIneq, verts: Sequence[RationalPoint]) -> int:
    mask = 0
    for k, p in enumerate(verts):
        if sum(a * v for a, v in zip(q.coeffs, p)) == q.rhs:
            mask |= 1 << k
    return mask


def remove_redundancy(P: HPolytope, certify: bool = True) -> HPolytope:
    """
    Minimal description of P inside the box: one row per facet, chosen among the
    given rows (box rows included), plus a canonical equation basis when P is not
    full-dimensional. Every dropped row is checked with lp_min unless certify is off.
    """
    boxed = with_box(P)
    V = vertices(boxed)
    if V.is_empty():
        return empty_polytope(P.n)
    verts = V.vertices
    eqs, coords = affine_hull(verts, P.n)
    dim = len(coords)
    everything = (1 << len(verts)) - 1

    candidates = sorted(
        {primitive_form(q, HALFSPACE) for q in boxed.ineqs if not q.is_zero()},
        key=lambda q: (q.norm, q.coeffs, q.rhs),
    )
    kept = {}
    for q in candidates:
        mask = _tight_mask(q, verts)
        if mask == 0 or mask == everything or mask in kept:
            continue
        tight = [tuple(p) + (Fraction(1),) for k, p in enumerate(verts) if (mask >> k) & 1]
        if len(independent_rows(tight, dim)) == dim:
            kept[mask] = q

    result = HPolytope(P.n, _sorted_rows(kept.values()), eqs if dim < P.n else ())
    if certify:
        kept_rows = set(kept.values())
        dropped = [q for q in candidates if q not in kept_rows]
        for q in dropped:
            if not is_valid(result, q):
                raise CGRankError(f"redundancy removal dropped a non-implied row: {q}")
    return result


def polytopes_equal(P: HPolytope, Q: HPolytope) -> bool:
    """Set equality inside the box, checked row by row with lp_min in both directions."""
    if P.n != Q.n:
        raise DimensionMismatchError(P.n, Q.n, "polytope")
    return all(is_valid(Q, q) for q in P.ge_rows()) and all(is_valid(P, q) for q in Q.ge_rows())


def integer_points(P: HPolytope) -> PointSet:
    """Membership scan: the 0/1 points of P."""
    cube = cube_matrix(P.n)
    inside = np.ones(len(cube), dtype=bool)
    for q in P.ineqs:
        inside &= ((cube @ np.array(q.coeffs, dtype=object)) >= q.rhs).astype(bool)
    for q in P.eqs:
        inside &= ((cube @ np.array(q.coeffs, dtype=object)) == q.rhs).astype(bool)
    return PointSet(P.n, inside)


def is_full_dimensional(S: PointSet) -> bool:
    """True iff the affine hull of S is all of R^n (n+1 affinely independent points)."""
    if S.is_empty():
        return False
    points = [tuple(int(v) for v in row) + (1,) for row in S.points_array()]
    return matrix_rank(points) == S.n + 1


def clear_denominators(coeffs: Sequence, rhs) -> LinIneq:
    """Integer row from rational data, scaled by the lcm of denominators."""
    row = integer_row(list(coeffs) + [rhs])
    return LinIneq(row[:-1], row[-1])
