"""
Double description method for pointed polyhedral cones {y : row . y >= 0}.

Rays are kept as primitive integer vectors and their zero sets as int bitmasks
over row indices, so the adjacency test is a handful of bit operations.
"""

import logging
from typing import List, Sequence, Tuple

from .errors import PreconditionError
from .rational import dot, independent_rows, inverse_columns, primitive_vector

logger = logging.getLogger(__name__)

Ray = Tuple[int, ...]


def extreme_rays(rows: Sequence[Sequence[int]], dim: int) -> List[Ray]:
    """
    Extreme rays of the pointed cone {y in R^dim : row . y >= 0 for every row}.

    The first dim linearly independent rows (in the given order) seed the
    iteration; the remaining rows are inserted in lexicographic order.
    An empty list means the cone is {0}.
    """
    rows = [tuple(int(v) for v in row) for row in rows if any(row)]
    if any(len(row) != dim for row in rows):
        raise PreconditionError(f"every cone row must have length {dim}")
    basis = independent_rows(rows, dim)
    if len(basis) < dim:
        raise PreconditionError("cone is not pointed: its rows do not have full rank")

    rays = [primitive_vector(col) for col in inverse_columns([rows[i] for i in basis])]
    zero_sets = []
    for j in range(dim):
        mask = 0
        for k, i in enumerate(basis):
            if k != j:
                mask |= 1 << i
        zero_sets.append(mask)

    seeded = set(basis)
    remaining = sorted((i for i in range(len(rows)) if i not in seeded), key=lambda i: rows[i])
    for i in remaining:
        rays, zero_sets = _insert_row(rays, zero_sets, rows[i], i, dim)
        if not rays:
            logger.debug("Cone collapsed to the origin")
            break
    return sorted(rays)


def _insert_row(rays: List[Ray], zero_sets: List[int], row: Ray, row_index: int, dim: int):
    bit = 1 << row_index
    values = [dot(row, r) for r in rays]
    positive = [k for k, v in enumerate(values) if v > 0]
    negative = [k for k, v in enumerate(values) if v < 0]

    new_rays: List[Ray] = []
    new_zero: List[int] = []
    for k, v in enumerate(values):
        if v > 0:
            new_rays.append(rays[k])
            new_zero.append(zero_sets[k])
        elif v == 0:
            new_rays.append(rays[k])
            new_zero.append(zero_sets[k] | bit)

    for a in positive:
        for b in negative:
            common = zero_sets[a] & zero_sets[b]
            if common.bit_count() < dim - 2:
                continue
            if not _adjacent(a, b, common, zero_sets):
                continue
            va, vb = values[a], values[b]
            combo = [va * rb - vb * ra for ra, rb in zip(rays[a], rays[b])]
            new_rays.append(primitive_vector(combo))
            new_zero.append(common | bit)
    return new_rays, new_zero


def _adjacent(a: int, b: int, common: int, zero_sets: List[int]) -> bool:
    """Combinatorial test: no third ray is tight on every row both a and b are tight on."""
    for k, z in enumerate(zero_sets):
        if k != a and k != b and (z & common) == common:
            return False
    return True
