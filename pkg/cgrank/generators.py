"""
Instance families: relaxations of a point set, the bad-facet construction,
the notch-p family, support thresholds and seeded random point sets.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import numpy as np

from .cube import LinIneq, PointSet, cube_matrix
from .errors import ConstructionError, PreconditionError
from .polyhedra import HPolytope, box_rows

logger = logging.getLogger(__name__)


def _relaxation(S: PointSet, scale: int, rhs: int) -> HPolytope:
    """Box plus, for every excluded vertex a, scale * (distance-to-a form) >= rhs."""
    rows = list(box_rows(S.n))
    for a in S.complement():
        coeffs = tuple(-scale if b else scale for b in a.bits)
        rows.append(LinIneq(coeffs, rhs - scale * a.weight))
    return HPolytope(S.n, tuple(rows))


def worst_relaxation(S: PointSet) -> HPolytope:
    """Each excluded vertex is cut at L1 distance 1/2, stored as 2*(...) >= 1."""
    return _relaxation(S, 2, 1)


def unit_relaxation(S: PointSet) -> HPolytope:
    """Each excluded vertex is cut at L1 distance 1."""
    return _relaxation(S, 1, 1)


@dataclass(frozen=True)
class BadFacetInstance:
    n_param: int
    dim: int
    c: Tuple[int, ...]
    threshold: int
    S: PointSet

    @property
    def facet(self) -> LinIneq:
        return LinIneq(self.c, self.threshold)


def _closed_form(n: int, i: int) -> Fraction:
    return Fraction(2 ** n) * (1 - Fraction(-1, 2) ** i) / 3


def badfacet_coefficients(n: int) -> Tuple[int, ...]:
    if n < 1:
        raise PreconditionError("the bad-facet construction needs n >= 1")
    top = 2 ** n
    c = [top, top // 2]
    for i in range(3, 2 * n + 2):
        if i % 2:
            c.append(c[-1])
        else:
            if (top - c[-1]) % 2:
                raise ConstructionError(f"coefficient {i} is not integral")
            c.append((top - c[-1]) // 2)
    c.append(top - c[-1])

    for i in range(1, n + 1):
        expected = _closed_form(n, i)
        if c[2 * i - 1] != expected or c[2 * i] != expected:
            raise ConstructionError(f"recurrence and closed form disagree at i={i}")
    if math.gcd(*c) != 1:
        raise ConstructionError(f"coefficients {c} are not coprime")
    return tuple(c)


def badfacet_instance(n: int) -> BadFacetInstance:
    """S_n = {x in {0,1}^(2n+2) : c.x >= 2^(n+1)} with the recurrence coefficients c."""
    c = badfacet_coefficients(n)
    dim = 2 * n + 2
    threshold = 2 ** (n + 1)
    values = cube_matrix(dim) @ np.asarray(c, dtype=np.int64)
    S = PointSet(dim, values >= threshold)
    logger.debug(f"bad-facet instance n={n}: c={c}, |S|={len(S)}")
    return BadFacetInstance(n, dim, c, threshold, S)


def badfacet_seven_smallest(n: int) -> int:
    """Sum of the seven smallest coefficients (all of them when fewer than seven)."""
    return sum(sorted(badfacet_coefficients(n))[:7])


def notch_p_example(n: int, p: int) -> PointSet:
    """{x : x_p + ... + x_n >= 1} with 1-based p."""
    if not 1 <= p <= n:
        raise PreconditionError(f"need 1 <= p <= n, got p={p}, n={n}")
    tail = cube_matrix(n)[:, p - 1:]
    return PointSet(n, tail.sum(axis=1) >= 1)


def support_at_least(n: int, k: int) -> PointSet:
    """All points with at least k ones."""
    if not 0 <= k <= n + 1:
        raise PreconditionError(f"support threshold {k} outside [0, {n + 1}]")
    return PointSet(n, cube_matrix(n).sum(axis=1) >= k)


def random_pointset(n: int, density, seed: int) -> PointSet:
    """
    Each vertex is kept independently with probability density.

    Draws come from numpy's Philox counter-based generator keyed by seed: one
    integer draw in [0, q) per vertex (density = p/q), kept iff it is below p.
    """
    density = Fraction(density)
    if not 0 <= density <= 1:
        raise PreconditionError(f"density must lie in [0, 1], got {density}")
    rng = np.random.Generator(np.random.Philox(seed))
    draws = rng.integers(0, density.denominator, size=1 << n)
    return PointSet(n, draws < density.numerator)
