"""
Structural parameters of a point set S: notch, gap, forbidden-vertex graph,
clique-subdivision order, notch-3 facet classification and the Hamming-ball
optimization oracle.
"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .config import Settings
from .cube import (
    HALFSPACE,
    CubePoint,
    LinIneq,
    PointSet,
    SwitchedForm,
    Switching,
    bits_of,
    enumerate_faces,
    face_intersects,
    primitive_form,
    spanned_by_01,
    switch_ineq,
)
from .errors import GapCapExceededError, NoFeasibleInBallError, NormBudgetExceededError, PreconditionError
from .polyhedra import HPolytope, affine_hull, box_rows, hull_facets, is_full_dimensional, is_valid, polytopes_equal
from .rational import independent_rows
from .subdivision import ForbiddenGraph, contains_clique_subdivision, forbidden_graph, max_subdivision_order

logger = logging.getLogger(__name__)

GAP_FAST = "fast"
GAP_DEEPENING = "deepening"
GAP_AUTO = "auto"

_CHUNK = 1 << 16


def notch(S: PointSet) -> int:
    """Smallest p such that every p-dimensional face of the cube meets S; n+1 for empty S."""
    if S.is_empty():
        return S.n + 1
    for d in range(S.n + 1):
        if all(face_intersects(F, S) for F in enumerate_faces(S.n, d)):
            return d
    return S.n + 1


def switched_delta(q: LinIneq) -> int:
    """delta of q read in switched form: rhs plus the absolute negative coefficients."""
    return q.switched_form().delta


@dataclass(frozen=True)
class GapCertificate:
    delta: int
    witness_system: Tuple[LinIneq, ...]
    lower_bound_facet: Optional[LinIneq] = None
    method: str = GAP_DEEPENING

    def switched_forms(self) -> List[SwitchedForm]:
        return [q.switched_form() for q in self.witness_system]


def _empty_set_certificate(n: int) -> GapCertificate:
    unit = tuple(int(i == 0) for i in range(n))
    rows = (LinIneq(unit, 1), LinIneq(tuple(-v for v in unit), 0))
    return GapCertificate(1, rows, None, GAP_DEEPENING)


def gap(S: PointSet, method: str = GAP_AUTO, settings: Optional[Settings] = None) -> GapCertificate:
    """
    Gap of S with a witness system of switched-form inequalities.

    auto uses the facet reading when conv(S) is full-dimensional and
    iterative deepening otherwise.
    """
    settings = settings or Settings()
    if method not in (GAP_AUTO, GAP_FAST, GAP_DEEPENING):
        raise PreconditionError(f"unknown gap method {method!r}")
    if S.n < 1:
        raise PreconditionError("gap needs n >= 1")
    if S.is_full():
        return GapCertificate(0, box_rows(S.n), None, method if method != GAP_AUTO else GAP_FAST)
    if S.is_empty():
        return _empty_set_certificate(S.n)
    full_dim = is_full_dimensional(S)
    if method == GAP_FAST or (method == GAP_AUTO and full_dim):
        if not full_dim:
            raise PreconditionError("the facet reading of the gap needs a full-dimensional conv(S)")
        return _gap_from_facets(S)
    return _gap_by_deepening(S, settings)


def _gap_from_facets(S: PointSet) -> GapCertificate:
    facets = hull_facets(S).ineqs
    best = max(facets, key=lambda q: (switched_delta(q), tuple(-a for a in q.coeffs)))
    delta = switched_delta(best)
    logger.debug(f"facet reading: {len(facets)} facets, gap {delta}")
    return GapCertificate(delta, tuple(facets), best, GAP_FAST)


def _coefficient_grid(n: int, values: Sequence[int]) -> np.ndarray:
    axes = np.meshgrid(*([np.asarray(values, dtype=np.int64)] * n), indexing="ij")
    return np.stack(axes, axis=-1).reshape(-1, n)


def _level_candidates(points: np.ndarray, n: int, delta: int) -> Iterator[Tuple[LinIneq, bytes]]:
    """
    Tight valid primitive inequalities a.x >= min_S a.x with switched delta in [1, delta]
    and every |a_i| <= switched delta, paired with their tight pattern on S.
    """
    grid = _coefficient_grid(n, range(-delta, delta + 1))
    for start in range(0, len(grid), _CHUNK):
        a = grid[start:start + _CHUNK]
        values = a @ points.T
        beta = values.min(axis=1)
        neg = np.where(a < 0, -a, 0).sum(axis=1)
        dprime = beta + neg
        norm = np.abs(a).max(axis=1)
        keep = (norm > 0) & (dprime >= 1) & (dprime <= delta) & (norm <= dprime)
        g = np.gcd.reduce(np.concatenate([np.abs(a), np.abs(beta)[:, None]], axis=1), axis=1)
        keep &= g == 1
        for k in np.flatnonzero(keep):
            q = LinIneq(tuple(int(v) for v in a[k]), int(beta[k]))
            if spanned_by_01(q):
                yield q, (values[k] == beta[k]).tobytes()


def _affine_rank(points: np.ndarray) -> int:
    rows = [tuple(int(v) for v in p) + (1,) for p in points]
    return len(independent_rows(rows, len(rows[0]))) if rows else 0


def _gap_by_deepening(S: PointSet, settings: Settings) -> GapCertificate:
    n = S.n
    points = S.points_array().astype(np.int64)
    hull = hull_facets(S)
    dim = _affine_rank(points) - 1
    box = box_rows(n)
    for delta in range(1, settings.gap_cap + 1):
        requested = (2 * delta + 1) ** n
        if requested > settings.enum_budget:
            raise NormBudgetExceededError(requested, settings.enum_budget, delta)
        equalities: List[LinIneq] = []
        by_tight: Dict[bytes, List[LinIneq]] = {}
        for q, tight in _level_candidates(points, n, delta):
            mask = np.frombuffer(tight, dtype=bool)
            if mask.all():
                equalities.append(q)
            else:
                by_tight.setdefault(tight, []).append(q)
        candidates = equalities + [q for group in by_tight.values() for q in group]
        system = HPolytope(n, box + tuple(candidates))
        # every candidate is valid on S, so only conv(S) -> system needs checking
        if all(is_valid(system, q) for q in hull.ge_rows()):
            witness = _reduce_witness(S, points, dim, box, equalities, by_tight, hull)
            logger.info(f"gap {delta} reached by deepening ({len(candidates)} candidates)")
            return GapCertificate(delta, witness, None, GAP_DEEPENING)
        logger.debug(f"gap level {delta}: {len(candidates)} candidates do not describe conv(S)")
    raise GapCapExceededError(settings.gap_cap)


def _reduce_witness(S, points, dim, box, equalities, by_tight, hull) -> Tuple[LinIneq, ...]:
    """Implicit equalities plus one representative per facet; falls back to the full family."""
    facets = []
    for tight, group in by_tight.items():
        mask = np.frombuffer(tight, dtype=bool)
        if _affine_rank(points[mask]) == dim:
            facets.append(min(group, key=lambda q: (switched_delta(q), q.coeffs)))
    witness = box + tuple(equalities) + tuple(facets)
    if polytopes_equal(HPolytope(S.n, witness), hull):
        return witness
    return box + tuple(equalities) + tuple(q for group in by_tight.values() for q in group)


class Notch3Tag(str, Enum):
    FORM1 = "FORM1"
    FORM2 = "FORM2"
    FORM3 = "FORM3"
    FORM4 = "FORM4"
    FORM5 = "FORM5"
    BOX = "BOX"
    NONE = "NONE"


@dataclass(frozen=True)
class _Template:
    tag: Notch3Tag
    rhs: int
    values: Tuple[int, ...]
    side: Callable[[Mapping[int, FrozenSet[int]]], bool]


_TEMPLATES = (
    _Template(Notch3Tag.FORM1, 1, (0, 1), lambda p: len(p[0]) == 2),
    _Template(Notch3Tag.FORM2, 2, (0, 1, 2), lambda p: len(p[0]) <= 1),
    _Template(Notch3Tag.FORM3, 3, (1, 2, 3), lambda p: len(p[1]) >= 3),
    _Template(Notch3Tag.FORM4, 4, (1, 2, 3, 4), lambda p: len(p[1]) == 2 and len(p[2]) >= 1),
    _Template(Notch3Tag.FORM5, 6, (2, 3, 4, 6), lambda p: len(p[2]) >= 3),
)
_BOX = _Template(Notch3Tag.BOX, 0, (0, 1), lambda p: len(p[1]) == 1)


@dataclass(frozen=True)
class Notch3Form:
    tag: Notch3Tag
    partition: Mapping[int, FrozenSet[int]] = field(default_factory=dict)
    switching: Optional[Switching] = None
    representative: Optional[LinIneq] = None

    @property
    def matched(self) -> bool:
        return self.tag is not Notch3Tag.NONE


def _partition(c: Sequence[int], values: Sequence[int]) -> Dict[int, FrozenSet[int]]:
    return {v: frozenset(i for i, ci in enumerate(c) if ci == v) for v in values}


def _match(c: Sequence[int], delta: int) -> Optional[Tuple[_Template, Dict[int, FrozenSet[int]]]]:
    """Match a nonnegative switched inequality c.y >= delta against BOX and the five forms."""
    if delta == 0:
        if sum(1 for v in c if v) == 1:
            return _BOX, _partition([1 if v else 0 for v in c], _BOX.values)
        return None
    if delta < 0:
        return None
    for template in _TEMPLATES:
        if template.rhs % delta:
            continue
        scale = template.rhs // delta
        scaled = [scale * v for v in c]
        if any(v not in template.values for v in scaled):
            continue
        partition = _partition(scaled, template.values)
        if template.side(partition):
            return template, partition
    return None


def classify_notch3_facet(q: LinIneq) -> Notch3Form:
    """
    Bring q into nonnegative switched form and match it against the box
    inequalities and the five notch-3 facet forms (scaled to their rhs).
    """
    if q.is_zero():
        raise PreconditionError("cannot classify an inequality with all-zero coefficients")
    n = q.n
    negative = sum(1 << i for i, a in enumerate(q.coeffs) if a < 0)
    zeros = [i for i, a in enumerate(q.coeffs) if a == 0]
    for r in range(len(zeros) + 1):
        for extra in itertools.combinations(zeros, r):
            f = Switching.from_mask(n, negative | sum(1 << i for i in extra))
            switched = primitive_form(switch_ineq(q, f), HALFSPACE)
            found = _match(switched.coeffs, switched.rhs)
            if found is not None:
                template, partition = found
                return Notch3Form(template.tag, partition, f, primitive_form(q, HALFSPACE))
    return Notch3Form(Notch3Tag.NONE)


def classify_hull_facet(S: PointSet, row: LinIneq) -> Notch3Form:
    """
    Classify a facet of conv(S). For lower-dimensional conv(S) the given row is
    one representative among many; every form with the same tight set on S is tried.
    """
    direct = classify_notch3_facet(row)
    if direct.matched or S.is_empty() or is_full_dimensional(S):
        return direct
    n = S.n
    points = S.points_array().astype(np.int64)
    tight = points @ np.asarray(row.coeffs, dtype=np.int64) == row.rhs
    for template in (_BOX,) + _TEMPLATES:
        grid = _coefficient_grid(n, template.values)
        grid = grid[np.abs(grid).sum(axis=1) > 0]
        grid = grid[[template.side(_partition(c, template.values)) for c in grid.tolist()]]
        if not len(grid):
            continue
        for mask in range(1 << n):
            flip = np.asarray(bits_of(mask, n), dtype=np.int64)
            values = grid @ (points ^ flip).T
            ok = (values.min(axis=1) >= template.rhs) & ((values == template.rhs) == tight).all(axis=1)
            hits = np.flatnonzero(ok)
            if len(hits):
                c = [int(v) for v in grid[hits[0]]]
                f = Switching.from_mask(n, mask)
                representative = switch_ineq(LinIneq(tuple(c), template.rhs), f)
                return Notch3Form(template.tag, _partition(c, template.values), f, representative)
    return direct


def k4_subdivision_free(S: PointSet) -> bool:
    return not contains_clique_subdivision(forbidden_graph(S).graph, 4)


Oracle = Union[PointSet, Callable[[Tuple[int, ...]], bool]]


@dataclass(frozen=True)
class OracleResult:
    point: CubePoint
    calls: int
    cost: Fraction

    def __iter__(self):
        # unpacks as (point, calls)
        return iter((self.point, self.calls))


def oracle_optimize(member: Oracle, n: int, c: Sequence, p: int) -> OracleResult:
    """
    Minimize c.x over S using only membership queries on the Hamming ball of
    radius p around the unconstrained minimizer.
    """
    if len(c) != n:
        raise PreconditionError(f"cost vector has {len(c)} entries, expected {n}")
    if p < 0:
        raise PreconditionError("ball radius must be nonnegative")
    query = (lambda bits: bits in member) if isinstance(member, PointSet) else member
    cost = [Fraction(v) for v in c]
    center = tuple(0 if ci >= 0 else 1 for ci in cost)
    radius = min(p, n)
    calls = 0
    best: Optional[Tuple[Fraction, int]] = None
    for k in range(radius + 1):
        for flipped in itertools.combinations(range(n), k):
            bits = list(center)
            for i in flipped:
                bits[i] ^= 1
            bits = tuple(bits)
            calls += 1
            if not query(bits):
                continue
            value = sum(ci * b for ci, b in zip(cost, bits))
            key = (value, CubePoint(n, bits).index)
            if best is None or key < best:
                best = key
    if best is None:
        raise NoFeasibleInBallError(radius, calls)
    return OracleResult(CubePoint.from_index(n, best[1]), calls, best[0])


def oracle_ball_bound(n: int, p: int) -> Tuple[int, int]:
    """(exact number of points within Hamming distance p, the simplified (n+1)^p bound)."""
    radius = min(max(p, 0), n)
    return sum(math.comb(n, k) for k in range(radius + 1)), (n + 1) ** max(p, 0)


__all__ = [
    "ForbiddenGraph",
    "GapCertificate",
    "Notch3Form",
    "Notch3Tag",
    "OracleResult",
    "classify_hull_facet",
    "classify_notch3_facet",
    "forbidden_graph",
    "gap",
    "k4_subdivision_free",
    "max_subdivision_order",
    "notch",
    "oracle_ball_bound",
    "oracle_optimize",
    "switched_delta",
]
