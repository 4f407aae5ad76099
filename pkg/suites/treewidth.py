"""
Subdivision bounds: with t the largest K_{t+1}-subdivision order of the forbidden
graph, p <= t + 1, gap <= 2 t^(t/2) and CG-rank <= t + 2 t^(t/2).
"""

import logging
from typing import Optional

from cgrank.closure import cg_rank
from cgrank.config import Settings
from cgrank.errors import BudgetExceededError
from cgrank.generators import worst_relaxation
from cgrank.parameters import forbidden_graph, gap, max_subdivision_order, notch
from cgrank.report import VerificationReport

from .corpus import Instance, build_corpus, run_instances

logger = logging.getLogger(__name__)

NAME = "treewidth"


def within_power_bound(value: int, t: int) -> bool:
    """value <= 2 * t^(t/2), compared exactly as value^2 <= 4 * t^t."""
    return value <= 0 or value * value <= 4 * t ** t


def check(instance: Instance, settings: Settings) -> VerificationReport:
    """Notch, gap and rank against the largest clique-subdivision order t."""
    report = VerificationReport(NAME)
    S = instance.S
    t = max_subdivision_order(forbidden_graph(S))
    if t < 1:
        return report
    report.instances = 1
    p = notch(S)
    report.add("notch-at-most-t+1", instance.name, p <= t + 1, notch=p, t=t, replay=instance.replay())
    try:
        delta = gap(S, settings=settings).delta
        report.add("gap-at-most-2t^(t/2)", instance.name, within_power_bound(delta, t), gap=delta, t=t)
        cert = cg_rank(worst_relaxation(S), S, cap=p + delta - 1, settings=settings)
    except BudgetExceededError as e:
        report.skip("rank-at-most-t+2t^(t/2)", instance.name, str(e))
        return report
    ok = cert.converged and within_power_bound(cert.rank - t, t)
    report.add("rank-at-most-t+2t^(t/2)", instance.name, ok, rank=cert.rank, t=t, replay=instance.replay())
    return report


def run(settings: Settings, n: Optional[int] = None, samples: Optional[int] = None) -> VerificationReport:
    n = 3 if n is None else n
    instances = build_corpus(n, samples or 0, settings.seed)
    report = VerificationReport(NAME, config={"n": n, "samples": samples or 0, "seed": settings.seed})
    return run_instances(check, instances, report, settings)
