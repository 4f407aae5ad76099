"""
Exact rational helpers.

Everything here works on Python ints and fractions.Fraction; no value ever
passes through a float.
"""

import math
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

Rational = Fraction
Number = Union[int, Fraction]


def ceil_div(a: int, b: int) -> int:
    """ceil(a / b) for integers, b != 0."""
    return -((-a) // b)


def ceil_rational(value: Number) -> int:
    value = Fraction(value)
    return ceil_div(value.numerator, value.denominator)


def floor_rational(value: Number) -> int:
    value = Fraction(value)
    return value.numerator // value.denominator


def gcd_of(values: Iterable[int]) -> int:
    return math.gcd(*[int(v) for v in values])


def lcm_of(values: Iterable[int]) -> int:
    return math.lcm(*[int(v) for v in values])


def integer_row(values: Sequence[Number]) -> Tuple[int, ...]:
    """Scale a rational row by the lcm of its denominators (no gcd reduction)."""
    fracs = [Fraction(v) for v in values]
    scale = lcm_of(f.denominator for f in fracs) if fracs else 1
    return tuple(int(f * scale) for f in fracs)


def primitive_vector(values: Sequence[Number]) -> Tuple[int, ...]:
    """Positive multiple of a rational vector with coprime integer entries."""
    row = integer_row(values)
    g = gcd_of(row)
    if g == 0:
        return row
    return tuple(v // g for v in row)


def dot(a: Sequence[Number], b: Sequence[Number]) -> Number:
    return sum(x * y for x, y in zip(a, b))


def rref(rows: Sequence[Sequence[Number]]) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    matrix = [[Fraction(v) for v in row] for row in rows]
    if not matrix:
        return [], []
    ncols = len(matrix[0])
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][col] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        lead = matrix[r][col]
        matrix[r] = [v / lead for v in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][col] != 0:
                factor = matrix[i][col]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r])]
        pivots.append(col)
        r += 1
        if r == len(matrix):
            break
    return matrix[:r], pivots


def matrix_rank(rows: Sequence[Sequence[Number]]) -> int:
    if not rows:
        return 0
    return len(independent_rows(rows, len(rows[0])))


def nullspace(rows: Sequence[Sequence[Number]], ncols: int) -> List[List[Fraction]]:
    """Basis of {y : row . y = 0 for every row}, one vector per free column."""
    reduced, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            vec[p] = -row[f]
        basis.append(vec)
    return basis


def independent_rows(rows: Sequence[Sequence[Number]], limit: int) -> List[int]:
    """Greedy, in order: indices of the first rows that are linearly independent."""
    chosen: List[int] = []
    echelon: List[Tuple[int, List[Fraction]]] = []
    for idx, row in enumerate(rows):
        vec = [Fraction(v) for v in row]
        for col, basis_row in echelon:
            if vec[col] != 0:
                factor = vec[col] / basis_row[col]
                vec = [a - factor * b for a, b in zip(vec, basis_row)]
        lead = next((c for c, v in enumerate(vec) if v != 0), None)
        if lead is None:
            continue
        echelon.append((lead, vec))
        chosen.append(idx)
        if len(chosen) == limit:
            break
    return chosen


def inverse_columns(matrix: Sequence[Sequence[Number]]) -> List[List[Fraction]]:
    """Columns of the inverse of a square nonsingular matrix."""
    size = len(matrix)
    augmented = [
        [Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(size)]
        for i, row in enumerate(matrix)
    ]
    reduced, pivots = rref(augmented)
    if pivots[:size] != list(range(size)) or len(reduced) < size:
        raise ValueError("matrix is singular")
    return [[reduced[i][size + j] for i in range(size)] for j in range(size)]
