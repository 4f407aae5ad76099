"""
Instance corpus for the verification suites.

Small dimensions are covered exhaustively up to the hyperoctahedral group
(coordinate permutations combined with switchings); larger ones by seeded samples.
"""

import itertools
import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from typing import Callable, List, Sequence

import joblib
import numpy as np

from cgrank.config import Settings
from cgrank.cube import PointSet, cube_matrix
from cgrank.errors import PreconditionError
from cgrank.formats import emit_pointset
from cgrank.generators import random_pointset
from cgrank.report import VerificationReport

logger = logging.getLogger(__name__)

MAX_EXHAUSTIVE_N = 4
SAMPLE_DENSITY = Fraction(1, 2)


@dataclass(frozen=True)
class Instance:
    name: str
    S: PointSet

    @property
    def n(self) -> int:
        return self.S.n

    def replay(self) -> str:
        """The instance in point-set format, embedded into failure witnesses."""
        return emit_pointset(self.S)


def instance_name(S: PointSet) -> str:
    width = max(1, (1 << S.n) // 4)
    return f"n{S.n}-{S.bitmask():0{width}x}"


def permute_points(S: PointSet, perm: Sequence[int]) -> PointSet:
    """Image of S under x -> y with y[perm[i]] = x[i]."""
    if sorted(perm) != list(range(S.n)):
        raise PreconditionError(f"{perm} is not a permutation of range({S.n})")
    table = _symmetry_table(S.n, tuple(perm), 0)
    image = np.zeros_like(S.members)
    image[table] = S.members
    return PointSet(S.n, image)


def _symmetry_table(n: int, perm: tuple, mask: int) -> np.ndarray:
    """Vertex index v -> index of its image under (perm, switching mask)."""
    cube = cube_matrix(n)
    moved = np.zeros_like(cube)
    moved[:, list(perm)] = cube
    return (moved @ (1 << np.arange(n, dtype=np.int64))) ^ mask


@lru_cache(maxsize=8)
def _group_tables(n: int) -> np.ndarray:
    tables = [
        _symmetry_table(n, perm, mask)
        for perm in itertools.permutations(range(n))
        for mask in range(1 << n)
    ]
    return np.stack(tables)


def orbit_representatives(n: int) -> List[PointSet]:
    """One canonical point set per orbit of subsets of {0,1}^n, in increasing bitmask order."""
    if n > MAX_EXHAUSTIVE_N:
        raise PreconditionError(f"symmetry reduction is limited to n <= {MAX_EXHAUSTIVE_N}")
    size = 1 << n
    masks = np.arange(1 << size, dtype=np.int64)
    members = ((masks[:, None] >> np.arange(size, dtype=np.int64)) & 1).astype(bool)
    weights = 1 << np.arange(size, dtype=np.int64)
    canon = masks.copy()
    for table in _group_tables(n):
        image = np.zeros_like(members)
        image[:, table] = members
        canon = np.minimum(canon, image @ weights)
    reps = np.flatnonzero(canon == masks)
    logger.info(f"{len(reps)} orbit representatives for n={n}")
    return [PointSet(n, members[r]) for r in reps]


def build_corpus(n: int, samples: int = 0, seed: int = 1, proper: bool = True) -> List[Instance]:
    """
    Exhaustive orbit representatives when samples is 0, otherwise that many
    seeded random point sets. proper drops the full cube.
    """
    if samples <= 0:
        sets = orbit_representatives(n)
    else:
        sets = [random_pointset(n, SAMPLE_DENSITY, seed * 1_000_003 + 7919 * n + i) for i in range(samples)]
    if proper:
        sets = [S for S in sets if not S.is_full()]
    return [Instance(instance_name(S), S) for S in sets]


def run_instances(
    check: Callable[[Instance, Settings], VerificationReport],
    instances: List[Instance],
    report: VerificationReport,
    settings: Settings,
) -> VerificationReport:
    """Fan instances out over the worker pool and merge the partial reports in order."""
    inner = replace(settings, threads=1)
    partials = joblib.Parallel(n_jobs=settings.threads)(
        joblib.delayed(check)(instance, inner) for instance in instances
    )
    for partial in partials:
        report.extend(partial)
    logger.info(f"[{report.suite}] {len(instances)} instances checked")
    return report
