"""
Text formats.

Point sets:  a line "n=<int>", then one binary string of length n per line;
             character i is coordinate i.
H-systems:   a line "n=<int>", then rows "ge|eq c1 ... cn rhs" with integer
             or "p/q" entries.
'#' starts a comment; blank lines are ignored.
"""

import re
from fractions import Fraction
from typing import Iterator, List, Tuple

from .cube import LinIneq, PointSet, index_of
from .errors import InputFormatError
from .polyhedra import HPolytope, clear_denominators

_HEADER = re.compile(r"^n\s*=\s*(\d+)$")
_NUMBER = re.compile(r"^[+-]?\d+(/\d+)?$")


def _content_lines(text: str) -> Iterator[Tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _read_header(lines: List[Tuple[int, str]]) -> int:
    if not lines:
        raise InputFormatError(None, "empty input, expected a header line 'n=<int>'")
    number, line = lines[0]
    match = _HEADER.match(line)
    if not match:
        raise InputFormatError(number, f"expected 'n=<int>', got {line!r}")
    n = int(match.group(1))
    if n < 1:
        raise InputFormatError(number, "dimension must be positive")
    return n


def parse_pointset(text: str) -> PointSet:
    """Parse the point-set format; errors carry the offending line number."""
    lines = list(_content_lines(text))
    n = _read_header(lines)
    seen = {}
    for number, line in lines[1:]:
        if len(line) != n:
            raise InputFormatError(number, f"expected {n} characters, got {len(line)}")
        if set(line) - {"0", "1"}:
            raise InputFormatError(number, f"characters outside {{0,1}} in {line!r}")
        if line in seen:
            raise InputFormatError(number, f"duplicate point {line} (first on line {seen[line]})")
        seen[line] = number
    return PointSet.from_indices(n, (index_of([int(ch) for ch in s]) for s in seen))


def emit_pointset(S: PointSet) -> str:
    lines = [f"n={S.n}"] + [str(p) for p in S]
    return "\n".join(lines) + "\n"


def _parse_number(token: str, number: int) -> Fraction:
    if not _NUMBER.match(token):
        raise InputFormatError(number, f"malformed rational {token!r}")
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise InputFormatError(number, f"zero denominator in {token!r}")


def parse_hpolytope(text: str) -> HPolytope:
    """Exact system; each row is scaled by the lcm of its denominators."""
    lines = list(_content_lines(text))
    n = _read_header(lines)
    ineqs, eqs = [], []
    for number, line in lines[1:]:
        tokens = line.split()
        sense = tokens[0].lower()
        if sense not in ("ge", "eq"):
            raise InputFormatError(number, f"row must start with 'ge' or 'eq', got {tokens[0]!r}")
        if len(tokens) != n + 2:
            raise InputFormatError(number, f"expected {n} coefficients and a rhs, got {len(tokens) - 1} numbers")
        values = [_parse_number(tok, number) for tok in tokens[1:]]
        row = clear_denominators(values[:-1], values[-1])
        (ineqs if sense == "ge" else eqs).append(row)
    return HPolytope(n, tuple(ineqs), tuple(eqs))


def _format_row(sense: str, q: LinIneq) -> str:
    return " ".join([sense] + [str(a) for a in q.coeffs] + [str(q.rhs)])


def emit_hpolytope(P: HPolytope) -> str:
    lines = [f"n={P.n}"]
    lines += [_format_row("ge", q) for q in P.ineqs]
    lines += [_format_row("eq", q) for q in P.eqs]
    return "\n".join(lines) + "\n"


def parse_inequality(text: str, n: int) -> LinIneq:
    """A single row "c1 ... cn rhs" (integer or p/q entries, denominators cleared)."""
    tokens = text.split()
    if len(tokens) != n + 1:
        raise InputFormatError(None, f"inequality needs {n} coefficients and a rhs, got {len(tokens)} numbers")
    values = [_parse_number(tok, None) for tok in tokens]
    return clear_denominators(values[:-1], values[-1])
