"""
Notch-3 sets: every hull facet has one of the five forms (or is a box facet),
the gap is at most 6 and the worst relaxation has CG-rank at most 8; sets whose
forbidden graph has no K4 subdivision have rank at most 4.
"""

import logging
from dataclasses import replace
from typing import Optional

from cgrank.closure import cg_rank
from cgrank.config import Settings
from cgrank.errors import BudgetExceededError, GapCapExceededError
from cgrank.generators import worst_relaxation
from cgrank.parameters import classify_hull_facet, gap, k4_subdivision_free, notch
from cgrank.polyhedra import hull_facets
from cgrank.report import VerificationReport

from .corpus import Instance, build_corpus, run_instances

logger = logging.getLogger(__name__)

NAME = "notch3"
GAP_LIMIT = 6
RANK_LIMIT = 8
K4_FREE_RANK_LIMIT = 4


def check(instance: Instance, settings: Settings) -> VerificationReport:
    """Facet forms, gap and rank limits for one instance of notch at most 3."""
    report = VerificationReport(NAME)
    S = instance.S
    if S.is_empty() or notch(S) > 3:
        return report
    report.instances = 1

    unmatched = [str(row) for row in hull_facets(S).ineqs if not classify_hull_facet(S, row).matched]
    report.add("facet-forms", instance.name, not unmatched, unmatched=unmatched, replay=instance.replay())

    try:
        delta = gap(S, settings=replace(settings, gap_cap=GAP_LIMIT)).delta
        report.add("gap-at-most-6", instance.name, delta <= GAP_LIMIT, gap=delta)
    except GapCapExceededError:
        report.add("gap-at-most-6", instance.name, False, gap=f">{GAP_LIMIT}", replay=instance.replay())
    except BudgetExceededError as e:
        report.skip("gap-at-most-6", instance.name, str(e))

    k4_free = k4_subdivision_free(S)
    try:
        cert = cg_rank(worst_relaxation(S), S, cap=RANK_LIMIT, settings=settings)
    except BudgetExceededError as e:
        report.skip("rank-at-most-8", instance.name, str(e))
        return report
    report.add("rank-at-most-8", instance.name, cert.converged, rank=cert.rank, replay=instance.replay())
    if k4_free:
        ok = cert.converged and cert.rank <= K4_FREE_RANK_LIMIT
        report.add("k4-free-rank-at-most-4", instance.name, ok, rank=cert.rank, replay=instance.replay())
        if cert.rank == K4_FREE_RANK_LIMIT:
            report.notes["rank-4-witnesses"] = [instance.name]
    return report


def run(settings: Settings, n: Optional[int] = None, samples: Optional[int] = None) -> VerificationReport:
    n = 3 if n is None else n
    instances = build_corpus(n, samples or 0, settings.seed)
    report = VerificationReport(NAME, config={"n": n, "samples": samples or 0, "seed": settings.seed})
    report.notes["rank-4-witnesses"] = []
    run_instances(check, instances, report, settings)
    # informational: the K4-free bound of 4 is attained somewhere in this corpus
    report.notes["rank-4-witness-found"] = bool(report.notes["rank-4-witnesses"])
    return report

