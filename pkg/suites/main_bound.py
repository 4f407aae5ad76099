"""Theorem check: p - 1 <= CG-rank of the worst relaxation <= p + gap - 1."""

import logging
from typing import Optional

from cgrank.closure import cg_rank
from cgrank.config import Settings
from cgrank.errors import BudgetExceededError
from cgrank.generators import worst_relaxation
from cgrank.parameters import gap, notch
from cgrank.report import VerificationReport

from .corpus import Instance, build_corpus, run_instances

logger = logging.getLogger(__name__)

NAME = "main-bound"


def check(instance: Instance, settings: Settings) -> VerificationReport:
    """p - 1 <= rank <= p + gap - 1 for the worst relaxation of one instance."""
    report = VerificationReport(NAME, instances=1)
    S = instance.S
    try:
        p = notch(S)
        delta = gap(S, settings=settings).delta
        upper = p + delta - 1
        cert = cg_rank(worst_relaxation(S), S, cap=upper, settings=settings)
    except BudgetExceededError as e:
        report.skip("rank-upper-bound", instance.name, str(e))
        report.skip("rank-notch-lower-bound", instance.name, str(e))
        return report

    witness = {"notch": p, "gap": delta, "rank": cert.rank, "cap": upper, "replay": instance.replay()}
    report.add("rank-upper-bound", instance.name, cert.converged, **witness)
    # a rank beyond the cap also exceeds p - 1
    report.add("rank-notch-lower-bound", instance.name, not cert.converged or cert.rank >= p - 1, **witness)
    return report


def run(settings: Settings, n: Optional[int] = None, samples: Optional[int] = None) -> VerificationReport:
    n = 3 if n is None else n
    instances = build_corpus(n, samples or 0, settings.seed)
    report = VerificationReport(NAME, config={"n": n, "samples": samples or 0, "seed": settings.seed})
    return run_instances(check, instances, report, settings)
