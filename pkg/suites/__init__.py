"""
Verification suites, one module per claim family.
Each module exposes run(settings, n=None, samples=None) -> VerificationReport.
"""

import logging
import time
from typing import Optional

from cgrank.config import Settings
from cgrank.errors import PreconditionError
from cgrank.report import VerificationReport

from . import approx, badfacet, closure_laws, depth, gap_bound, main_bound, notch3, oracle, treewidth

logger = logging.getLogger(__name__)

SUITES = {
    main_bound.NAME: main_bound.run,
    notch3.NAME: notch3.run,
    badfacet.NAME: badfacet.run,
    treewidth.NAME: treewidth.run,
    oracle.NAME: oracle.run,
    closure_laws.NAME: closure_laws.run,
    approx.NAME: approx.run,
    gap_bound.NAME: gap_bound.run,
    depth.NAME: depth.run,
}


def run_suite(
    name: str,
    settings: Optional[Settings] = None,
    n: Optional[int] = None,
    samples: Optional[int] = None,
) -> VerificationReport:
    if name not in SUITES:
        raise PreconditionError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    settings = settings or Settings()
    logger.info(f"Running suite {name}")
    start = time.perf_counter()
    report = SUITES[name](settings, n=n, samples=samples)
    report.wall_time = time.perf_counter() - start
    logger.info(f"Suite {name} finished: {len(report.assertions)} assertions, failed={report.failed}")
    return report


__all__ = ["SUITES", "run_suite"]
