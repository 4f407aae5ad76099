"""
Closure laws on one round of the worst relaxation R: shrinking, integer-point
preservation, coefficient growth, integral fixed point, monotonicity on a nested
pair, and dominance of R' over the closure of another relaxation with the same 0/1 points.
"""

import logging
from typing import Optional

from cgrank.closure import elementary_closure
from cgrank.config import Settings
from cgrank.cube import LinIneq, PointSet
from cgrank.errors import BudgetExceededError
from cgrank.generators import unit_relaxation, worst_relaxation
from cgrank.polyhedra import HPolytope, box_rows, hull_facets, integer_points, is_valid, polytopes_equal, vertices
from cgrank.report import VerificationReport

from .corpus import Instance, build_corpus, run_instances

logger = logging.getLogger(__name__)

NAME = "closure-laws"


def loose_relaxation(S: PointSet) -> HPolytope:
    """
    Unit relaxation whose first excluded vertex is only cut at distance 1/3.
    Its 0/1 points are still S, but it is not contained in the worst relaxation.
    """
    rows = list(box_rows(S.n))
    for k, a in enumerate(S.complement()):
        scale = 3 if k == 0 else 1
        coeffs = tuple(-scale if b else scale for b in a.bits)
        rows.append(LinIneq(coeffs, 1 - scale * a.weight))
    return HPolytope(S.n, tuple(rows))


def check(instance: Instance, settings: Settings) -> VerificationReport:
    """Closure laws on one instance: shrinking, integer points kept, coefficient growth, fixed points."""
    report = VerificationReport(NAME, instances=1)
    S, name = instance.S, instance.name
    R = worst_relaxation(S)
    try:
        step = elementary_closure(R, settings)
        unit_step = elementary_closure(unit_relaxation(S), settings)
        loose_step = elementary_closure(loose_relaxation(S), settings)
        hull = hull_facets(S)
        hull_step = elementary_closure(hull, settings)
    except BudgetExceededError as e:
        report.skip("closure-laws", name, str(e))
        return report

    out = step.output
    report.add("shrinking", name, all(is_valid(out, q) for q in R.ge_rows()), replay=instance.replay())
    report.add("integer-points-preserved", name, integer_points(out) == S, replay=instance.replay())
    report.add(
        "coefficient-bound",
        name,
        step.max_cut_norm <= S.n * step.input_norm,
        max_cut_norm=step.max_cut_norm,
        input_norm=step.input_norm,
    )
    report.add("integral-fixed-point", name, polytopes_equal(hull_step.output, hull), replay=instance.replay())
    # unit relaxation is contained in the worst relaxation
    report.add(
        "monotonicity",
        name,
        all(is_valid(unit_step.output, q) for q in out.ge_rows()),
        replay=instance.replay(),
    )
    outside = [v for v in vertices(loose_step.output).vertices if not out.contains(v)]
    report.add("worst-relaxation-dominance", name, not outside, outside=[list(map(str, v)) for v in outside])
    return report


def run(settings: Settings, n: Optional[int] = None, samples: Optional[int] = None) -> VerificationReport:
    n = 3 if n is None else n
    instances = build_corpus(n, samples or 0, settings.seed)
    report = VerificationReport(NAME, config={"n": n, "samples": samples or 0, "seed": settings.seed})
    return run_instances(check, instances, report, settings)
