"""Validity depth: a valid unit inequality with support k holds on R^(n+1-k)."""

import itertools
import logging
from typing import Iterator, Optional

from cgrank.closure import validity_depth
from cgrank.config import Settings
from cgrank.cube import LinIneq, PointSet
from cgrank.errors import BudgetExceededError
from cgrank.generators import worst_relaxation
from cgrank.report import VerificationReport

from .corpus import Instance, build_corpus, run_instances

logger = logging.getLogger(__name__)

NAME = "depth"


def unit_inequalities(S: PointSet) -> Iterator[LinIneq]:
    """sum_I x_i + sum_J (1 - x_j) >= 1 for every nonempty disjoint I, J, valid on S."""
    for signs in itertools.product((-1, 0, 1), repeat=S.n):
        if not any(signs):
            continue
        q = LinIneq(signs, 1 - sum(1 for s in signs if s < 0))
        if all(q.satisfied_by(p.bits) for p in S):
            yield q


def check(instance: Instance, settings: Settings) -> VerificationReport:
    """Every valid unit inequality with support k holds within n + 1 - k rounds."""
    report = VerificationReport(NAME, instances=1)
    S = instance.S
    R = worst_relaxation(S)
    for q in unit_inequalities(S):
        k = sum(1 for a in q.coeffs if a)
        bound = S.n + 1 - k
        try:
            depth = validity_depth(R, q, S, cap=bound, settings=settings)
        except BudgetExceededError as e:
            report.skip("depth-at-most-n+1-k", f"{instance.name}:{q}", str(e))
            return report
        report.add("depth-at-most-n+1-k", f"{instance.name}:{q}", depth is not None, support=k, depth=depth)
    return report


def run(settings: Settings, n: Optional[int] = None, samples: Optional[int] = None) -> VerificationReport:
    n = 3 if n is None else n
    instances = build_corpus(n, samples or 0, settings.seed)
    report = VerificationReport(NAME, config={"n": n, "samples": samples or 0, "seed": settings.seed})
    return run_instances(check, instances, report, settings)
