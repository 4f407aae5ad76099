"""Bad-facet family: notch at most 7, gap at least 2^(n+1), and c.x >= 2^(n+1) is a facet."""

import logging
import math
from typing import Optional

from cgrank.config import Settings
from cgrank.errors import BudgetExceededError
from cgrank.generators import badfacet_instance, badfacet_seven_smallest
from cgrank.parameters import gap, notch
from cgrank.polyhedra import hull_facets
from cgrank.report import VerificationReport

logger = logging.getLogger(__name__)

NAME = "badfacet"
NOTCH_LIMIT = 7
SEVEN_SMALLEST_RANGE = range(3, 13)


def check(n: int, settings: Settings) -> VerificationReport:
    """Notch, coefficient gcd, facet presence and the gap lower bound of one bad-facet instance."""
    report = VerificationReport(NAME, instances=1)
    inst = badfacet_instance(n)
    name = f"badfacet-{n}"
    p = notch(inst.S)
    report.add("notch-at-most-7", name, p <= NOTCH_LIMIT, notch=p)
    report.add("coefficients-coprime", name, math.gcd(*inst.c) == 1, c=list(inst.c))

    facets = hull_facets(inst.S).ineqs
    report.add("facet-present", name, inst.facet in facets, c=list(inst.c), threshold=inst.threshold)

    try:
        delta = gap(inst.S, settings=settings).delta
    except BudgetExceededError as e:
        report.skip("gap-at-least-2^(n+1)", name, str(e))
        return report
    report.add("gap-at-least-2^(n+1)", name, delta >= inst.threshold, gap=delta, bound=inst.threshold)
    report.notes["exact-gaps"] = [{"n": n, "gap": delta}]
    return report


def run(settings: Settings, n: Optional[int] = None, samples: Optional[int] = None) -> VerificationReport:
    params = [n] if n is not None else [2, 3]
    report = VerificationReport(NAME, config={"n": params, "seed": settings.seed})
    for k in params:
        report.extend(check(k, settings))
    # the seven smallest coefficients alone already reach the threshold
    for k in SEVEN_SMALLEST_RANGE:
        total = badfacet_seven_smallest(k)
        report.add("seven-smallest-reach-threshold", f"badfacet-{k}", total >= 2 ** (k + 1), total=total)
    logger.info(f"[{NAME}] checked n in {params}")
    return report
