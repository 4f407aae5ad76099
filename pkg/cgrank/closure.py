"""
Chvátal-Gomory closure engine.

One closure round enumerates every primitive normal c with ||c||_inf <= n * ||A||_inf
(both signs), evaluates min c.x over the vertices of the current polytope in one
batched integer product, and adds every cut whose right-hand side rounds up.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import joblib
import numpy as np

from .config import Settings
from .cube import HALFSPACE, LinIneq, PointSet, bits_of, primitive_form
from .errors import IntegerPointMismatchError, NormBudgetExceededError, PreconditionError
from .parameters import notch
from .polyhedra import (
    HPolytope,
    VPolytope,
    empty_polytope,
    hull_facets,
    integer_points,
    is_valid,
    lp_min,
    polytopes_equal,
    remove_redundancy,
    vertices,
    with_box,
)
from .rational import ceil_rational, floor_rational, lcm_of
from .simplex import INFEASIBLE

logger = logging.getLogger(__name__)

_MIN_BLOCK = 4096
_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class ClosureRound:
    round_index: int
    input_norm: int
    candidates_enumerated: int
    cuts_kept: int
    max_cut_norm: int
    output: HPolytope

    def summary(self) -> Dict[str, int]:
        return {
            "round": self.round_index,
            "input_norm": self.input_norm,
            "candidates": self.candidates_enumerated,
            "cuts_kept": self.cuts_kept,
            "max_cut_norm": self.max_cut_norm,
            "output_rows": len(self.output.ineqs) + len(self.output.eqs),
        }


def _largest_layer(n: int, budget: int) -> int:
    layer = 0
    while (2 * (layer + 1) + 1) ** n <= budget:
        layer += 1
    return layer


def _vertex_matrix(V: VPolytope) -> Tuple[np.ndarray, int]:
    """Vertices scaled to a common denominator L, as an integer matrix."""
    scale = lcm_of(v.denominator for p in V.vertices for v in p) if V.vertices else 1
    rows = [[int(v * scale) for v in p] for p in V.vertices]
    return np.array(rows, dtype=object), scale


def _cuts_for_block(start: int, stop: int, n: int, bound: int, scaled: np.ndarray, scale: int):
    """Fractional CG cuts for the normals with encoded indices in [start, stop)."""
    base = 2 * bound + 1
    idx = np.arange(start, stop, dtype=np.int64)
    cols = []
    for _ in range(n):
        idx, digit = np.divmod(idx, base)
        cols.append(digit - bound)
    c = np.stack(cols, axis=1)

    nonzero = c != 0
    has_any = nonzero.any(axis=1)
    first = nonzero.argmax(axis=1)
    leading = c[np.arange(len(c)), first]
    keep = has_any & (leading > 0) & (np.gcd.reduce(np.abs(c), axis=1) == 1)
    c = c[keep]
    if not len(c):
        return 0, []

    peak = int(np.abs(scaled).max()) if scaled.size else 0
    if bound * n * max(peak, 1) < _INT64_SAFE:
        values = c @ scaled.astype(np.int64).T
    else:
        values = c.astype(object) @ scaled.T
    lo = values.min(axis=1)
    hi = values.max(axis=1)

    cuts = []
    for k in np.flatnonzero(lo % scale != 0):
        coeffs = tuple(int(v) for v in c[k])
        cuts.append((coeffs, ceil_rational(Fraction(int(lo[k]), scale))))
    for k in np.flatnonzero(hi % scale != 0):
        coeffs = tuple(-int(v) for v in c[k])
        cuts.append((coeffs, -floor_rational(Fraction(int(hi[k]), scale))))
    return 2 * len(c), cuts


def elementary_closure(P: HPolytope, settings: Optional[Settings] = None, round_index: int = 1) -> ClosureRound:
    """Exact elementary closure P' of a polytope inside the unit box."""
    settings = settings or Settings()
    current = remove_redundancy(with_box(P))
    V = vertices(current)
    norm = current.norm
    n = P.n
    if V.is_empty():
        return ClosureRound(round_index, norm, 0, 0, 0, empty_polytope(n))

    bound = n * norm
    requested = (2 * bound + 1) ** n
    if requested > settings.enum_budget:
        layer = _largest_layer(n, settings.enum_budget)
        logger.warning(f"Closure round {round_index} needs {requested} normals; budget covers layer {layer}")
        raise NormBudgetExceededError(requested, settings.enum_budget, layer)

    scaled, scale = _vertex_matrix(V)
    if scale == 1:
        # integral polytope: it is its own closure
        return ClosureRound(round_index, norm, 0, 0, 0, current)

    blocks = max(1, settings.threads * 4)
    size = max(_MIN_BLOCK, -(-requested // blocks))
    spans = [(s, min(s + size, requested)) for s in range(0, requested, size)]
    results = joblib.Parallel(n_jobs=settings.threads)(
        joblib.delayed(_cuts_for_block)(start, stop, n, bound, scaled, scale) for start, stop in spans
    )

    enumerated = sum(count for count, _ in results)
    cuts = sorted({primitive_form(LinIneq(coeffs, rhs), HALFSPACE) for _, block in results for coeffs, rhs in block},
                  key=lambda q: (q.coeffs, q.rhs))
    max_cut_norm = max((q.norm for q in cuts), default=0)
    output = remove_redundancy(current.with_rows(cuts))
    previous = set(current.ineqs)
    kept = sum(1 for q in output.ineqs if q not in previous)
    logger.info(
        f"Closure round {round_index}: {enumerated} normals, {len(cuts)} fractional cuts, "
        f"{kept} kept, output {len(output.ineqs)} rows"
    )
    return ClosureRound(round_index, norm, enumerated, kept, max_cut_norm, output)


def is_integral(P: HPolytope) -> bool:
    return vertices(P).is_integral()


class ClosureSequence:
    """Lazily extended R^(0), R^(1), ... for one starting polytope."""

    def __init__(self, P: HPolytope, settings: Settings):
        self.settings = settings
        self.start = remove_redundancy(with_box(P))
        self.rounds: List[ClosureRound] = []
        self.stable = False

    def polytope(self, t: int) -> HPolytope:
        """R^(t), computing missing rounds on demand."""
        if t < 0:
            raise PreconditionError("closure index must be nonnegative")
        while len(self.rounds) < t and not self.stable:
            source = self.rounds[-1].output if self.rounds else self.start
            step = elementary_closure(source, self.settings, len(self.rounds) + 1)
            self.rounds.append(step)
            # nothing to enumerate: integral or empty, so every later round repeats it
            self.stable = step.candidates_enumerated == 0
        if t == 0:
            return self.start
        return self.rounds[min(t, len(self.rounds)) - 1].output


@lru_cache(maxsize=32)
def closure_sequence(P: HPolytope, settings: Settings) -> ClosureSequence:
    return ClosureSequence(P, settings)


def _check_integer_points(P: HPolytope, S: PointSet):
    if P.n != S.n:
        raise PreconditionError(f"polytope dimension {P.n} differs from point-set dimension {S.n}")
    inside = integer_points(P)
    if inside == S:
        return
    diff = np.flatnonzero(inside.members != S.members)[0]
    raise IntegerPointMismatchError(bits_of(int(diff), S.n), bool(inside.members[diff]))


@dataclass(frozen=True)
class RankCertificate:
    rank: Optional[int]
    rounds: Tuple[ClosureRound, ...]
    converged: bool
    cap: int

    def trace(self) -> List[Dict[str, int]]:
        return [r.summary() for r in self.rounds]


def _reached_hull(R: HPolytope, hull: HPolytope) -> bool:
    return is_integral(R) and polytopes_equal(R, hull)


def cg_rank(P: HPolytope, S: PointSet, cap: Optional[int] = None, settings: Optional[Settings] = None) -> RankCertificate:
    """
    Number of closure rounds until P reaches conv(S), or rank=None when the
    cap is hit first. P must contain exactly the points of S among 0/1 points.
    """
    settings = settings or Settings()
    cap = settings.rank_cap(P.n) if cap is None else cap
    if cap < 0:
        raise PreconditionError("rank cap must be nonnegative")
    _check_integer_points(P, S)
    hull = hull_facets(S)
    seq = closure_sequence(P, settings)
    for t in range(cap + 1):
        R = seq.polytope(t)
        if _reached_hull(R, hull):
            logger.info(f"Converged to the integer hull after {t} rounds")
            return RankCertificate(t, tuple(seq.rounds[:t]), True, cap)
    logger.warning(f"No convergence within {cap} rounds")
    return RankCertificate(None, tuple(seq.rounds[:cap]), False, cap)


def validity_depth(
    P: HPolytope,
    q: LinIneq,
    S: PointSet,
    cap: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> Optional[int]:
    """Smallest t <= cap with q valid on R^(t); None when not reached within the cap."""
    settings = settings or Settings()
    cap = settings.rank_cap(P.n) if cap is None else cap
    if q.n != S.n:
        raise PreconditionError("inequality and point set dimensions differ")
    if any(not q.satisfied_by(p.bits) for p in S):
        raise PreconditionError(f"{q} is not valid on S")
    _check_integer_points(P, S)
    seq = closure_sequence(P, settings)
    for t in range(cap + 1):
        if is_valid(seq.polytope(t), q):
            return t
    return None


@dataclass(frozen=True)
class FacetApproximation:
    facet: LinIneq
    delta: int
    required: Fraction
    attained: Optional[Fraction]
    applicable: bool

    @property
    def passed(self) -> bool:
        return not self.applicable or self.attained is None or self.attained >= self.required


@dataclass(frozen=True)
class ApproxReport:
    notch: int
    eps: Fraction
    t: int
    facets: Tuple[FacetApproximation, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(f.passed for f in self.facets)


def approx_closure_check(S: PointSet, P: HPolytope, eps, settings: Optional[Settings] = None) -> ApproxReport:
    """
    For every facet of conv(S) whose switched coefficients stay within its delta,
    check that the facet with delta scaled by (1 - eps) is valid on R^(t), t = p/eps - 1.
    """
    settings = settings or Settings()
    eps = Fraction(eps)
    if not 0 < eps <= 1:
        raise PreconditionError(f"eps must lie in (0, 1], got {eps}")
    p = notch(S)
    ratio = p / eps
    if ratio.denominator != 1:
        raise PreconditionError(f"p / eps = {ratio} is not an integer")
    t = max(int(ratio) - 1, 0)
    _check_integer_points(P, S)
    R = closure_sequence(P, settings).polytope(t)

    entries = []
    for facet in hull_facets(S).ineqs:
        form = facet.switched_form()
        applicable = all(ci <= form.delta for ci in form.c)
        required = facet.rhs - eps * form.delta
        attained = None
        if applicable:
            value = lp_min(R, facet.coeffs)
            attained = None if value is INFEASIBLE else value
        entries.append(FacetApproximation(facet, form.delta, required, attained, applicable))
    return ApproxReport(p, eps, t, tuple(entries))


def dump_certificate(cert: RankCertificate, path: str) -> None:
    """Persist a rank certificate with its full round trace."""
    try:
        joblib.dump(cert, path)
        logger.info(f"Rank certificate saved to {path}")
    except Exception as e:
        logger.error(f"Error saving rank certificate: {str(e)}")
        raise


def load_certificate(path: str) -> RankCertificate:
    try:
        cert = joblib.load(path)
    except Exception as e:
        logger.error(f"Error loading rank certificate: {str(e)}")
        raise
    if not isinstance(cert, RankCertificate):
        raise PreconditionError(f"{path} does not hold a rank certificate")
    return cert
