"""Hamming-ball optimization: exact minimum within sum_{k<=p} C(n,k) membership calls."""

import logging
from fractions import Fraction
from typing import Optional

import numpy as np

from cgrank.config import Settings
from cgrank.generators import random_pointset
from cgrank.parameters import notch, oracle_ball_bound, oracle_optimize
from cgrank.report import VerificationReport

logger = logging.getLogger(__name__)

NAME = "oracle"
DEFAULT_PAIRS = 500
MAX_N = 6
COST_RANGE = 5


def check(index: int, settings: Settings, max_n: int = MAX_N) -> VerificationReport:
    """One seeded (S, c) pair: exact minimum and call count within the Hamming ball."""
    report = VerificationReport(NAME)
    seed = settings.seed * 1_000_003 + index
    rng = np.random.Generator(np.random.Philox(seed))
    n = int(rng.integers(1, max_n + 1))
    S = random_pointset(n, Fraction(int(rng.integers(1, 4)), 4), seed)
    if S.is_empty():
        return report
    report.instances = 1
    c = [int(v) for v in rng.integers(-COST_RANGE, COST_RANGE + 1, size=n)]
    p = notch(S)
    result = oracle_optimize(S, n, c, p)
    brute = int((S.points_array() @ np.asarray(c, dtype=np.int64)).min())
    name = f"pair-{index}"
    report.add("cost-is-minimum", name, result.cost == brute, cost=str(result.cost), brute=brute, c=c, notch=p)
    exact, simple = oracle_ball_bound(n, p)
    report.add("calls-within-ball", name, result.calls <= exact <= simple, calls=result.calls, bound=exact)
    return report


def run(settings: Settings, n: Optional[int] = None, samples: Optional[int] = None) -> VerificationReport:
    pairs = samples or DEFAULT_PAIRS
    max_n = n or MAX_N
    report = VerificationReport(NAME, config={"pairs": pairs, "max_n": max_n, "seed": settings.seed})
    for index in range(pairs):
        report.extend(check(index, settings, max_n))
    return report
