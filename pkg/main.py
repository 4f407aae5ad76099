"""
cgrank command-line entry point.

Exit codes: 0 success, 1 assertion failure, 2 input error, 3 budget exceeded.
"""

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

from cgrank import (
    BudgetExceededError,
    CGRankError,
    Settings,
    badfacet_instance,
    cg_rank,
    closure_sequence,
    dump_certificate,
    emit_hpolytope,
    emit_pointset,
    gap,
    integer_points,
    load_settings,
    notch,
    notch_p_example,
    oracle_optimize,
    parse_hpolytope,
    parse_inequality,
    parse_pointset,
    random_pointset,
    support_at_least,
    unit_relaxation,
    validity_depth,
    worst_relaxation,
)
from suites import SUITES, run_suite

logger = logging.getLogger("cgrank")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

FAMILIES = ("worst", "unit", "badfacet", "notch-p", "support-k", "random")


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-rank", type=int, help="closure round cap (default grows like n^2 log n)")
    common.add_argument("--enum-budget", type=int, help="candidate normals allowed per closure round")
    common.add_argument("--threads", type=int, help="worker processes")
    common.add_argument("--seed", type=int, help="seed for sampled instances")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", type=Path, help="write the result here instead of stdout")
    common.add_argument("--log-level", help="logging level name")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="cgrank", description="Notch, gap and CG-rank toolkit for 0/1 point sets")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("notch", parents=[common], help="notch of a point set")
    p.add_argument("pointset", type=Path)

    p = sub.add_parser("gap", parents=[common], help="gap of a point set with its witness system")
    p.add_argument("pointset", type=Path)
    p.add_argument("--method", choices=("auto", "fast", "deepening"), default="auto")

    p = sub.add_parser("rank", parents=[common], help="CG-rank of a polytope")
    p.add_argument("polytope", type=Path)
    p.add_argument("pointset", type=Path, nargs="?", help="defaults to the 0/1 points of the polytope")
    p.add_argument("--save", type=Path, help="persist the rank certificate")

    p = sub.add_parser("closure", parents=[common], help="iterated elementary closures")
    p.add_argument("polytope", type=Path)
    p.add_argument("--rounds", type=int, default=1)

    p = sub.add_parser("depth", parents=[common], help="validity depth of an inequality")
    p.add_argument("polytope", type=Path)
    p.add_argument("pointset", type=Path)
    p.add_argument("--ineq", required=True, help='"c1 ... cn rhs"')

    p = sub.add_parser("oracle-opt", parents=[common], help="minimize c.x over S by Hamming-ball search")
    p.add_argument("pointset", type=Path)
    p.add_argument("--cost", required=True, help='"c1 ... cn"')
    p.add_argument("--radius", type=int, help="ball radius (default: the notch of S)")

    p = sub.add_parser("gen", parents=[common], help="generate an instance")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--density", default="1/2")
    p.add_argument("--pointset", type=Path, help="input set for worst/unit")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--n", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--timing", action="store_true", help="include wall time in the JSON report")
    return parser


def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as e:
        raise CGRankError(f"cannot read {path}: {e.strerror}") from e


def cmd_notch(args, settings: Settings) -> Dict[str, Any]:
    S = parse_pointset(_read(args.pointset))
    return {"n": S.n, "notch": notch(S)}


def cmd_gap(args, settings: Settings) -> Dict[str, Any]:
    S = parse_pointset(_read(args.pointset))
    cert = gap(S, method=args.method, settings=settings)
    return {
        "gap": cert.delta,
        "method": cert.method,
        "witness": [str(q) for q in cert.witness_system],
        "lower_bound_facet": str(cert.lower_bound_facet) if cert.lower_bound_facet else None,
    }


def cmd_rank(args, settings: Settings) -> Dict[str, Any]:
    P = parse_hpolytope(_read(args.polytope))
    S = parse_pointset(_read(args.pointset)) if args.pointset else integer_points(P)
    cert = cg_rank(P, S, settings=settings)
    if args.save:
        dump_certificate(cert, str(args.save))
    return {"rank": cert.rank, "converged": cert.converged, "cap": cert.cap, "rounds": cert.trace()}


def cmd_closure(args, settings: Settings) -> Dict[str, Any]:
    P = parse_hpolytope(_read(args.polytope))
    seq = closure_sequence(P, settings)
    R = seq.polytope(args.rounds)
    return {"rounds": [r.summary() for r in seq.rounds], "output": emit_hpolytope(R)}


def cmd_depth(args, settings: Settings) -> Dict[str, Any]:
    P = parse_hpolytope(_read(args.polytope))
    S = parse_pointset(_read(args.pointset))
    q = parse_inequality(args.ineq, P.n)
    depth = validity_depth(P, q, S, settings=settings)
    return {"inequality": str(q), "depth": depth if depth is not None else "NOT_WITHIN_CAP"}


def cmd_oracle(args, settings: Settings) -> Dict[str, Any]:
    S = parse_pointset(_read(args.pointset))
    try:
        cost = [Fraction(tok) for tok in args.cost.split()]
    except (ValueError, ZeroDivisionError):
        raise CGRankError(f"malformed cost vector {args.cost!r}")
    radius = notch(S) if args.radius is None else args.radius
    result = oracle_optimize(S, S.n, cost, radius)
    return {"point": str(result.point), "cost": str(result.cost), "calls": result.calls, "radius": radius}


def _need(value: Optional[int], flag: str) -> int:
    if value is None:
        raise CGRankError(f"this family needs {flag}")
    return value


def cmd_gen(args, settings: Settings) -> Dict[str, Any]:
    family = args.family
    if family in ("worst", "unit"):
        if not args.pointset:
            raise CGRankError(f"family {family} needs --pointset")
        S = parse_pointset(_read(args.pointset))
        P = worst_relaxation(S) if family == "worst" else unit_relaxation(S)
        return {"family": family, "text": emit_hpolytope(P)}
    if family == "badfacet":
        inst = badfacet_instance(_need(args.n, "--n"))
        header = f"# c = {' '.join(map(str, inst.c))}, threshold = {inst.threshold}\n"
        return {"family": family, "c": list(inst.c), "threshold": inst.threshold, "text": header + emit_pointset(inst.S)}
    if family == "notch-p":
        S = notch_p_example(_need(args.n, "--n"), _need(args.p, "--p"))
    elif family == "support-k":
        S = support_at_least(_need(args.n, "--n"), _need(args.k, "--k"))
    else:
        try:
            density = Fraction(args.density)
        except (ValueError, ZeroDivisionError):
            raise CGRankError(f"malformed density {args.density!r}")
        S = random_pointset(_need(args.n, "--n"), density, settings.seed)
    return {"family": family, "text": emit_pointset(S)}


def cmd_verify(args, settings: Settings):
    return run_suite(args.suite, settings, n=args.n, samples=args.samples)


COMMANDS = {
    "notch": cmd_notch,
    "gap": cmd_gap,
    "rank": cmd_rank,
    "closure": cmd_closure,
    "depth": cmd_depth,
    "oracle-opt": cmd_oracle,
    "gen": cmd_gen,
    "verify": cmd_verify,
}


def _render(result: Dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result, sort_keys=True, indent=2, default=str) + "\n"
    if "text" in result:
        return result["text"]
    lines = []
    for key in sorted(result):
        value = result[key]
        if isinstance(value, list):
            lines.append(f"{key}:")
            lines.extend(f"  {item}" for item in value)
        elif isinstance(value, str) and "\n" in value:
            lines.append(f"{key}:")
            lines.append(value.rstrip("\n"))
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: Optional[Path]):
    if out is None:
        sys.stdout.write(text)
    else:
        try:
            out.write_text(text)
        except OSError as e:
            raise CGRankError(f"cannot write {out}: {e.strerror}") from e
        logger.info(f"Wrote {out}")


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings().with_overrides(
            enum_budget=args.enum_budget,
            threads=args.threads,
            seed=args.seed,
            max_rank=args.max_rank,
            log_level=args.log_level.upper() if args.log_level else None,
        )
    except CGRankError as e:
        logging.basicConfig(level=logging.INFO)
        logger.error(f"Configuration error: {str(e)}")
        return EXIT_INPUT
    if settings.log_level not in logging.getLevelNamesMapping():
        logging.basicConfig(level=logging.INFO)
        logger.error(f"Configuration error: unknown log level {settings.log_level}")
        return EXIT_INPUT

    logging.basicConfig(level=settings.log_level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    try:
        result = COMMANDS[args.command](args, settings)
        if args.command == "verify":
            text = result.to_json(include_timing=args.timing) if args.format == "json" else result.to_text()
            _emit(text, args.out)
            return EXIT_FAIL if result.failed else EXIT_OK
        _emit(_render(result, args.format), args.out)
    except BudgetExceededError as e:
        logger.error(f"Budget exceeded: {str(e)}")
        return EXIT_BUDGET
    except (CGRankError, OSError) as e:
        logger.error(f"Input error: {str(e)}")
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
