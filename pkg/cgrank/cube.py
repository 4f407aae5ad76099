"""
Cube objects: points, point sets, faces, switchings and integer inequalities.

Vertex indexing: coordinate i (0-based in code, i+1 in text formats) is bit i of
the vertex index, so coordinate 1 is the least significant bit.
"""

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, FrozenSet, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

import numpy as np

from .errors import DimensionMismatchError, PreconditionError
from .rational import ceil_div, gcd_of, independent_rows

logger = logging.getLogger(__name__)

HALFSPACE = "halfspace"
CG_NORMALIZED = "cg"


@lru_cache(maxsize=32)
def cube_matrix(n: int) -> np.ndarray:
    """All 2^n vertices as rows of a read-only 0/1 matrix, in index order."""
    idx = np.arange(1 << n, dtype=np.int64)
    matrix = ((idx[:, None] >> np.arange(n, dtype=np.int64)[None, :]) & 1).astype(np.int64)
    matrix.flags.writeable = False
    return matrix


def index_of(bits: Sequence[int]) -> int:
    """Vertex index of a 0/1 vector: coordinate i is bit i."""
    return sum(int(b) << i for i, b in enumerate(bits))


def bits_of(index: int, n: int) -> Tuple[int, ...]:
    """Inverse of index_of for an n-cube."""
    return tuple((index >> i) & 1 for i in range(n))


@dataclass(frozen=True)
class CubePoint:
    n: int
    bits: Tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if len(bits) != self.n:
            raise DimensionMismatchError(self.n, len(bits), "cube point")
        if any(b not in (0, 1) for b in bits):
            raise PreconditionError(f"cube point entries must be 0/1, got {bits}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_index(cls, n: int, index: int) -> "CubePoint":
        return cls(n, bits_of(index, n))

    @property
    def index(self) -> int:
        return index_of(self.bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


class PointSet:
    """A subset S of {0,1}^n stored as a read-only bitset over the 2^n vertices."""

    __slots__ = ("n", "members")

    def __init__(self, n: int, members: Union[np.ndarray, Sequence[bool]]):
        arr = np.array(members, dtype=bool)
        if arr.shape != (1 << n,):
            raise DimensionMismatchError(1 << n, int(arr.size), "point-set bitset")
        arr.flags.writeable = False
        self.n = n
        self.members = arr

    @classmethod
    def empty(cls, n: int) -> "PointSet":
        return cls(n, np.zeros(1 << n, dtype=bool))

    @classmethod
    def full(cls, n: int) -> "PointSet":
        return cls(n, np.ones(1 << n, dtype=bool))

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "PointSet":
        arr = np.zeros(1 << n, dtype=bool)
        for i in indices:
            if not 0 <= i < (1 << n):
                raise PreconditionError(f"vertex index {i} outside the {n}-cube")
            arr[i] = True
        return cls(n, arr)

    @classmethod
    def from_points(cls, n: int, points: Iterable[Union[CubePoint, Sequence[int]]]) -> "PointSet":
        indices = []
        for p in points:
            bits = p.bits if isinstance(p, CubePoint) else tuple(p)
            if len(bits) != n:
                raise DimensionMismatchError(n, len(bits), "cube point")
            indices.append(index_of(bits))
        return cls.from_indices(n, indices)

    @classmethod
    def from_predicate(cls, n: int, predicate: Callable[[Tuple[int, ...]], bool]) -> "PointSet":
        return cls(n, [bool(predicate(bits_of(i, n))) for i in range(1 << n)])

    def __contains__(self, point) -> bool:
        if isinstance(point, CubePoint):
            if point.n != self.n:
                raise DimensionMismatchError(self.n, point.n, "cube point")
            return bool(self.members[point.index])
        if isinstance(point, (int, np.integer)):
            return bool(self.members[int(point)])
        return bool(self.members[index_of(point)])

    def __len__(self) -> int:
        return int(self.members.sum())

    def __iter__(self) -> Iterator[CubePoint]:
        for i in self.indices():
            yield CubePoint.from_index(self.n, int(i))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.members, other.members)

    def __hash__(self) -> int:
        return hash((self.n, self.members.tobytes()))

    def __repr__(self) -> str:
        shown = ",".join(str(p) for p in itertools.islice(iter(self), 8))
        more = "..." if len(self) > 8 else ""
        return f"PointSet(n={self.n}, |S|={len(self)}, {{{shown}{more}}})"

    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.members)

    def points_array(self) -> np.ndarray:
        """Members as rows of a 0/1 integer matrix, in index order."""
        return cube_matrix(self.n)[self.members]

    def complement(self) -> "PointSet":
        return PointSet(self.n, ~self.members)

    def is_empty(self) -> bool:
        return not self.members.any()

    def is_full(self) -> bool:
        return bool(self.members.all())

    def issubset(self, other: "PointSet") -> bool:
        _check_dim(self.n, other.n, "point set")
        return not np.any(self.members & ~other.members)

    def bitmask(self) -> int:
        """The whole set as one integer (bit v set iff vertex v is a member)."""
        return sum(1 << int(i) for i in self.indices())


@dataclass(frozen=True)
class CubeFace:
    n: int
    fixed: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        pairs = tuple(sorted((int(i), int(v)) for i, v in self.fixed))
        coords = [i for i, _ in pairs]
        if len(set(coords)) != len(coords):
            raise PreconditionError(f"coordinate fixed twice in face {pairs}")
        if any(not 0 <= i < self.n for i in coords) or any(v not in (0, 1) for _, v in pairs):
            raise PreconditionError(f"invalid fixing {pairs} for the {self.n}-cube")
        object.__setattr__(self, "fixed", pairs)

    @classmethod
    def from_mapping(cls, n: int, fixed: Mapping[int, int]) -> "CubeFace":
        return cls(n, tuple(fixed.items()))

    @property
    def dimension(self) -> int:
        return self.n - len(self.fixed)

    @property
    def free(self) -> Tuple[int, ...]:
        taken = {i for i, _ in self.fixed}
        return tuple(i for i in range(self.n) if i not in taken)

    def vertex_indices(self) -> np.ndarray:
        base = sum(v << i for i, v in self.fixed)
        idx = np.array([base], dtype=np.int64)
        for j in self.free:
            idx = np.concatenate([idx, idx | (1 << j)])
        return idx

    def contains(self, index: int) -> bool:
        return all(((index >> i) & 1) == v for i, v in self.fixed)


@dataclass(frozen=True)
class Switching:
    n: int
    flipped: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        flipped = frozenset(int(i) for i in self.flipped)
        if any(not 0 <= i < self.n for i in flipped):
            raise PreconditionError(f"switching {sorted(flipped)} outside [0, {self.n})")
        object.__setattr__(self, "flipped", flipped)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Switching":
        return cls(n, frozenset(i for i in range(n) if (mask >> i) & 1))

    @property
    def mask(self) -> int:
        return sum(1 << i for i in self.flipped)

    def apply(self, point: CubePoint) -> CubePoint:
        _check_dim(self.n, point.n, "cube point")
        return CubePoint.from_index(self.n, point.index ^ self.mask)


@dataclass(frozen=True)
class SwitchedForm:
    """The view  sum_{I} c_i x_i + sum_{J} c_j (1 - x_j) >= delta  of an inequality."""
    I: FrozenSet[int]
    J: FrozenSet[int]
    c: Tuple[int, ...]
    delta: int


@dataclass(frozen=True)
class LinIneq:
    """Integer inequality coeffs . x >= rhs (also used for equations coeffs . x = rhs)."""
    coeffs: Tuple[int, ...]
    rhs: int

    def __post_init__(self):
        coeffs = tuple(_as_int(v) for v in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "rhs", _as_int(self.rhs))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @property
    def norm(self) -> int:
        return max((abs(a) for a in self.coeffs), default=0)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def evaluate(self, bits: Sequence) -> int:
        return sum(a * x for a, x in zip(self.coeffs, bits))

    def satisfied_by(self, bits: Sequence) -> bool:
        return self.evaluate(bits) >= self.rhs

    def negated(self) -> "LinIneq":
        return LinIneq(tuple(-a for a in self.coeffs), -self.rhs)

    def scaled(self, k: int) -> "LinIneq":
        if k <= 0:
            raise PreconditionError("inequalities may only be scaled by positive integers")
        return LinIneq(tuple(k * a for a in self.coeffs), k * self.rhs)

    def switched_form(self) -> SwitchedForm:
        """Read (I, J, c, delta); zero coefficients are placed in neither I nor J."""
        I = frozenset(i for i, a in enumerate(self.coeffs) if a > 0)
        J = frozenset(i for i, a in enumerate(self.coeffs) if a < 0)
        c = tuple(abs(a) for a in self.coeffs)
        delta = self.rhs + sum(c[j] for j in J)
        return SwitchedForm(I, J, c, delta)

    @classmethod
    def from_switched(cls, I: Iterable[int], J: Iterable[int], c: Sequence[int], delta: int) -> "LinIneq":
        I, J = set(I), set(J)
        if I & J:
            raise PreconditionError("I and J must be disjoint")
        if any(v < 0 for v in c):
            raise PreconditionError("switched coefficients must be nonnegative")
        coeffs = tuple(c[i] if i in I else (-c[i] if i in J else 0) for i in range(len(c)))
        return cls(coeffs, delta - sum(c[j] for j in J))

    def __str__(self) -> str:
        terms = " ".join(f"{a:+d}x{i + 1}" for i, a in enumerate(self.coeffs) if a)
        return f"{terms or '0'} >= {self.rhs}"


def _as_int(value) -> int:
    if isinstance(value, (bool, float)) or not isinstance(value, (int, np.integer)):
        raise PreconditionError(f"inequality data must be integers, got {value!r}")
    return int(value)


def _check_dim(expected: int, got: int, what: str):
    if expected != got:
        raise DimensionMismatchError(expected, got, what)


def switch_points(S: PointSet, f: Switching) -> PointSet:
    """Image of S under x -> x xor 1_flipped."""
    _check_dim(S.n, f.n, "switching")
    idx = np.arange(1 << S.n, dtype=np.int64)
    return PointSet(S.n, S.members[idx ^ f.mask])


def switch_ineq(q: LinIneq, f: Switching) -> LinIneq:
    """Substitute x_j -> 1 - x_j for every flipped j."""
    _check_dim(q.n, f.n, "switching")
    coeffs = tuple(-a if i in f.flipped else a for i, a in enumerate(q.coeffs))
    rhs = q.rhs - sum(q.coeffs[i] for i in f.flipped)
    return LinIneq(coeffs, rhs)


def enumerate_faces(n: int, d: int) -> List[CubeFace]:
    """All d-dimensional faces of [0,1]^n: C(n, d) * 2^(n-d) of them."""
    if not 0 <= d <= n:
        raise PreconditionError(f"face dimension {d} outside [0, {n}]")
    faces = []
    for fixed_coords in itertools.combinations(range(n), n - d):
        for values in itertools.product((0, 1), repeat=n - d):
            faces.append(CubeFace(n, tuple(zip(fixed_coords, values))))
    return faces


def face_intersects(F: CubeFace, S: PointSet) -> bool:
    _check_dim(S.n, F.n, "cube face")
    return bool(S.members[F.vertex_indices()].any())


def primitive_form(q: LinIneq, mode: str = HALFSPACE) -> LinIneq:
    """
    Normalize an integer inequality.

    halfspace: divide by gcd(coeffs, rhs), the unique primitive representative.
    cg: divide the coefficients by their gcd g and round rhs/g up (the CG-strengthened cut).
    """
    if q.is_zero():
        raise PreconditionError("cannot normalize an inequality with all-zero coefficients")
    if mode == HALFSPACE:
        g = gcd_of(q.coeffs + (q.rhs,))
        return LinIneq(tuple(a // g for a in q.coeffs), q.rhs // g)
    if mode == CG_NORMALIZED:
        g = gcd_of(q.coeffs)
        return LinIneq(tuple(a // g for a in q.coeffs), ceil_div(q.rhs, g))
    raise PreconditionError(f"unknown normalization mode {mode!r}")


def incident_points(q: LinIneq) -> np.ndarray:
    """0/1 points on the hyperplane coeffs . x = rhs, as rows."""
    cube = cube_matrix(q.n)
    values = cube @ np.array(q.coeffs, dtype=object)
    return cube[values == q.rhs]


def spanned_by_01(q: LinIneq) -> bool:
    """True iff the 0/1 points on the boundary hyperplane span it affinely."""
    if q.is_zero():
        raise PreconditionError("zero inequality has no hyperplane")
    points = incident_points(q)
    if len(points) < q.n:
        return False
    rows = [tuple(int(v) for v in p) + (1,) for p in points]
    return len(independent_rows(rows, q.n)) == q.n
