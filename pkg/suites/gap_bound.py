"""Gap lower bound: the unit relaxation has CG-rank at least log(gap)/log(n) - 1."""

import logging
from typing import Optional

from cgrank.closure import cg_rank
from cgrank.config import Settings
from cgrank.errors import BudgetExceededError
from cgrank.generators import unit_relaxation
from cgrank.parameters import gap
from cgrank.report import VerificationReport

from .corpus import Instance, build_corpus, run_instances

logger = logging.getLogger(__name__)

NAME = "gap-bound"


def rank_meets_gap_bound(rank: int, delta: int, n: int) -> bool:
    """rank >= log(delta)/log(n) - 1, compared exactly as n^(rank+1) >= delta."""
    return n ** (rank + 1) >= delta


def check(instance: Instance, settings: Settings) -> VerificationReport:
    """Rank of the unit relaxation against the logarithmic gap lower bound (sets with gap >= 2)."""
    report = VerificationReport(NAME)
    S = instance.S
    if S.n < 2:
        return report
    try:
        delta = gap(S, settings=settings).delta
        if delta < 2:
            return report
        report.instances = 1
        cert = cg_rank(unit_relaxation(S), S, settings=settings)
    except BudgetExceededError as e:
        report.skip("rank-at-least-log-gap", instance.name, str(e))
        return report
    if not cert.converged:
        report.skip("rank-at-least-log-gap", instance.name, f"no convergence within {cert.cap} rounds")
        return report
    ok = rank_meets_gap_bound(cert.rank, delta, S.n)
    report.add("rank-at-least-log-gap", instance.name, ok, rank=cert.rank, gap=delta, replay=instance.replay())
    report.notes["observed"] = [{"instance": instance.name, "rank": cert.rank, "gap": delta}]
    return report


def run(settings: Settings, n: Optional[int] = None, samples: Optional[int] = None) -> VerificationReport:
    n = 3 if n is None else n
    instances = build_corpus(n, samples or 0, settings.seed)
    report = VerificationReport(NAME, config={"n": n, "samples": samples or 0, "seed": settings.seed})
    report.notes["observed"] = []
    return run_instances(check, instances, report, settings)
