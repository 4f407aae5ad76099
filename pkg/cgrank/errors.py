"""Exception hierarchy shared by the library, the suites and the CLI."""

from typing import Optional, Tuple


class CGRankError(Exception):
    """Base class for every error raised by cgrank."""


class ConfigError(CGRankError):
    """Raised when an environment or flag value cannot be parsed."""


class DimensionMismatchError(CGRankError):
    def __init__(self, expected: int, got: int, what: str = "object"):
        super().__init__(f"dimension mismatch for {what}: expected {expected}, got {got}")
        self.expected = expected
        self.got = got


class PreconditionError(CGRankError):
    """Raised when a caller violates an operation's documented precondition."""


class BudgetExceededError(CGRankError):
    """The instance is beyond desk scale; callers report it as skipped."""


class NormBudgetExceededError(BudgetExceededError):
    def __init__(self, requested: int, budget: int, layer: int = 0):
        super().__init__(
            f"enumeration needs {requested} candidate normals "
            f"(budget {budget}, reached norm layer {layer})"
        )
        self.requested = requested
        self.budget = budget
        self.layer = layer


class GapCapExceededError(BudgetExceededError):
    def __init__(self, cap: int):
        super().__init__(f"gap search exceeded the configured cap {cap}")
        self.cap = cap


class IntegerPointMismatchError(CGRankError):
    def __init__(self, vertex: Tuple[int, ...], in_polytope: bool):
        where = "inside the polytope but not in S" if in_polytope else "in S but outside the polytope"
        super().__init__(f"0/1 point {''.join(map(str, vertex))} is {where}")
        self.vertex = vertex
        self.in_polytope = in_polytope


class NoFeasibleInBallError(CGRankError):
    def __init__(self, radius: int, calls: int):
        super().__init__(
            f"no member within Hamming distance {radius} after {calls} oracle calls; "
            "the notch bound given for the oracle set is too small"
        )
        self.radius = radius
        self.calls = calls


class InputFormatError(CGRankError):
    def __init__(self, line: Optional[int], reason: str):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + reason)
        self.line = line
        self.reason = reason


class ConstructionError(CGRankError):
    """An instance generator failed one of its internal consistency checks."""
