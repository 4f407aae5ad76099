"""
Exact two-phase simplex with Bland's anti-cycling rule.

The tableau is kept fraction-free: every entry is an integer and the true
tableau is T / d, where d is the absolute determinant of the current basis.
A pivot on (r, k) with pivot entry p maps every other row to
(p * T[i][j] - T[i][k] * T[r][j]) / d, and that division is always exact.
Variables are the n structural x's (bounded to [0, 1]) plus slacks.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)


class _Infeasible:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFEASIBLE"

    def __reduce__(self):
        return (_Infeasible, ())


INFEASIBLE = _Infeasible()


@dataclass(frozen=True)
class LPResult:
    value: Optional[Fraction]
    point: Optional[Tuple[Fraction, ...]]
    pivots: int

    @property
    def feasible(self) -> bool:
        return self.value is not None


class _Tableau:
    def __init__(self, rows: List[List[int]], basis: List[int], ncols: int):
        self.rows = rows
        self.basis = basis
        self.ncols = ncols
        self.d = 1
        self.obj: List[int] = [0] * (ncols + 1)
        self.pivots = 0

    def pivot(self, r: int, k: int):
        p = self.rows[r][k]
        d = self.d
        pivot_row = self.rows[r]
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            f = row[k]
            if f == 0:
                if p != d:
                    self.rows[i] = [(p * v) // d for v in row]
                continue
            self.rows[i] = [(p * v - f * w) // d for v, w in zip(row, pivot_row)]
        f = self.obj[k]
        self.obj = [(p * v - f * w) // d for v, w in zip(self.obj, pivot_row)]
        self.basis[r] = k
        self.d = p
        if p < 0:
            self.rows = [[-v for v in row] for row in self.rows]
            self.obj = [-v for v in self.obj]
            self.d = -p
        self.pivots += 1

    def run_bland(self, allowed: Sequence[int]):
        """Minimize the current objective row; entering and leaving by smallest index."""
        while True:
            k = next((j for j in allowed if self.obj[j] < 0), None)
            if k is None:
                return
            best = None
            for i, row in enumerate(self.rows):
                if row[k] <= 0:
                    continue
                if best is None:
                    best = i
                    continue
                lhs = row[-1] * self.rows[best][k]
                rhs = self.rows[best][-1] * row[k]
                if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[best]):
                    best = i
            if best is None:
                raise ArithmeticError("LP is unbounded; inputs must lie in the unit box")
            self.pivot(best, k)

    def objective_value(self) -> Fraction:
        return Fraction(-self.obj[-1], self.d)


def solve_lp(
    n: int,
    c: Sequence[int],
    ge_rows: Sequence[Tuple[Sequence[int], int]],
    eq_rows: Sequence[Tuple[Sequence[int], int]] = (),
) -> LPResult:
    """
    Minimize c . x subject to a . x >= b (ge_rows), a . x = b (eq_rows), 0 <= x <= 1.

    All data must be integral. Returns value None when the system is infeasible.
    """
    m_ge = len(ge_rows)
    slack0 = n
    upper0 = n + m_ge
    art0 = upper0 + n

    raw: List[Tuple[List[int], int, Optional[int]]] = []
    for idx, (a, b) in enumerate(ge_rows):
        row = [int(v) for v in a] + [0] * (m_ge + n)
        row[slack0 + idx] = -1
        b = int(b)
        if b <= 0:
            raw.append(([-v for v in row], -b, slack0 + idx))
        else:
            raw.append((row, b, None))
    for i in range(n):
        row = [0] * (n + m_ge + n)
        row[i] = 1
        row[upper0 + i] = 1
        raw.append((row, 1, upper0 + i))
    for a, b in eq_rows:
        row = [int(v) for v in a] + [0] * (m_ge + n)
        b = int(b)
        if b < 0:
            row, b = [-v for v in row], -b
        raw.append((row, b, None))

    n_art = sum(1 for _, _, basic in raw if basic is None)
    ncols = art0 + n_art
    rows: List[List[int]] = []
    basis: List[int] = []
    art = art0
    for row, b, basic in raw:
        full = row + [0] * n_art + [b]
        if basic is None:
            full[art] = 1
            basic = art
            art += 1
        rows.append(full)
        basis.append(basic)

    tab = _Tableau(rows, basis, ncols)

    if n_art:
        obj = [0] * (ncols + 1)
        for j in range(art0, ncols):
            obj[j] = 1
        for row, b in zip(tab.rows, tab.basis):
            if b >= art0:
                obj = [o - v for o, v in zip(obj, row)]
        tab.obj = obj
        tab.run_bland(range(ncols))
        if tab.objective_value() > 0:
            return LPResult(None, None, tab.pivots)
        _drive_out_artificials(tab, art0)
        tab.rows = [row[:art0] + [row[-1]] for row in tab.rows]
        tab.ncols = art0

    obj = [int(c[j]) * tab.d if j < n else 0 for j in range(tab.ncols)] + [0]
    for row, b in zip(tab.rows, tab.basis):
        if b < n and c[b] != 0:
            cb = int(c[b])
            obj = [o - cb * v for o, v in zip(obj, row)]
    tab.obj = obj
    tab.run_bland(range(tab.ncols))

    point = [Fraction(0)] * n
    for row, b in zip(tab.rows, tab.basis):
        if b < n:
            point[b] = Fraction(row[-1], tab.d)
    return LPResult(tab.objective_value(), tuple(point), tab.pivots)


def _drive_out_artificials(tab: _Tableau, art0: int):
    """Pivot zero-valued artificials out of the basis; drop rows that are redundant."""
    i = 0
    while i < len(tab.rows):
        if tab.basis[i] < art0:
            i += 1
            continue
        row = tab.rows[i]
        k = next((j for j in range(art0) if row[j] != 0), None)
        if k is None:
            del tab.rows[i]
            del tab.basis[i]
            continue
        tab.pivot(i, k)
        i += 1
