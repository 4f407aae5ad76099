"""Approximation corollary: facets scaled by (1 - eps) are valid on R^(p/eps - 1)."""

import logging
from fractions import Fraction
from typing import Optional

from cgrank.closure import approx_closure_check
from cgrank.config import Settings
from cgrank.errors import BudgetExceededError
from cgrank.generators import worst_relaxation
from cgrank.parameters import notch
from cgrank.report import VerificationReport

from .corpus import Instance, build_corpus, run_instances

logger = logging.getLogger(__name__)

NAME = "approx"
EPSILONS = (Fraction(1), Fraction(1, 2))
NOTCHES = (1, 2, 3)


def check(instance: Instance, settings: Settings) -> VerificationReport:
    """Scaled gap facets must hold for R^(t) with t = p/eps - 1, for eps in EPSILONS."""
    report = VerificationReport(NAME)
    S = instance.S
    if S.is_empty() or notch(S) not in NOTCHES:
        return report
    report.instances = 1
    R = worst_relaxation(S)
    for eps in EPSILONS:
        claim = f"scaled-facets-valid-eps-{eps}"
        try:
            result = approx_closure_check(S, R, eps, settings)
        except BudgetExceededError as e:
            report.skip(claim, instance.name, str(e))
            continue
        failing = [str(f.facet) for f in result.facets if not f.passed]
        report.add(claim, instance.name, result.passed, t=result.t, failing=failing, replay=instance.replay())
    return report


def run(settings: Settings, n: Optional[int] = None, samples: Optional[int] = None) -> VerificationReport:
    n = 3 if n is None else n
    instances = build_corpus(n, samples or 0, settings.seed)
    report = VerificationReport(NAME, config={"n": n, "samples": samples or 0, "seed": settings.seed})
    return run_instances(check, instances, report, settings)
