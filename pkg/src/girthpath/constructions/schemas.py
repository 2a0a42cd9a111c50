"""Parameter types for lifts, the counterexample family and random generators."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from ..core.errors import PreconditionError


@dataclass(frozen=True)
class LiftSpec:
    """Lift ``target_vertex`` into a chain of ``k`` complete layers."""

    target_vertex: int
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise PreconditionError(f"Lift order k must be at least 1, got {self.k}")


@dataclass(frozen=True)
class CounterexampleParams:
    """Parameters of the family member with one a-lifted and δ b-lifted vertices."""

    delta: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.delta < 1:
            raise PreconditionError(f"delta must be positive, got {self.delta}")
        if not 1 <= self.a <= self.b:
            raise PreconditionError(f"Need 1 <= a <= b, got a={self.a}, b={self.b}")

    @property
    def vertex_count(self) -> int:
        delta = self.delta
        return (delta + 1) + delta * (self.a - 1) + delta * delta * (self.b - 1)

    @property
    def predicted_girth(self) -> int:
        return self.a + self.b

    @property
    def longest_path_lower_bound(self) -> int:
        """Length δb + a − 1 of the path through every lift in turn.

        The exact ℓ can be larger for δ ≥ 2: a maximum path may start inside
        one lift and finish in the same lift after visiting all the others.
        """
        return self.delta * self.b + self.a - 1

    @property
    def girth_path_conjecture_bound(self) -> int:
        return self.delta * (self.predicted_girth - 1)

    def refutes_girth_path_conjecture(self, ell: int) -> bool:
        """True iff a measured longest path ``ell`` stays below δ(g − 1)."""
        return ell < self.girth_path_conjecture_bound


class GraphKind(str, Enum):
    """Random instance families."""

    OUT_REGULAR = "out_regular"
    ORIENTED_MIN_OUTDEG = "oriented_min_outdeg"
    CD_REGULAR = "cd_regular"


@dataclass(frozen=True)
class GenSpec:
    """Random instance request; deterministic given ``seed``."""

    kind: GraphKind
    n: int
    d: int
    seed: int
    C: Fraction = Fraction(1)

    def in_degree_cap(self) -> int:
        """Largest in-degree allowed for cd_regular instances, ⌊C·d⌋."""
        return int(self.C * self.d)

    def check_feasible(self) -> None:
        """Raise PreconditionError when no digraph of this kind exists."""
        if self.n < 1:
            raise PreconditionError(f"n must be positive, got {self.n}")
        if self.d < 0:
            raise PreconditionError(f"d must be non-negative, got {self.d}")
        if self.kind is GraphKind.ORIENTED_MIN_OUTDEG:
            if 2 * self.d > self.n - 1:
                raise PreconditionError(
                    f"No oriented graph on {self.n} vertices has minimum out-degree {self.d}"
                )
        elif self.d >= self.n:
            raise PreconditionError(f"Out-degree {self.d} needs more than {self.n} vertices")
        if self.kind is GraphKind.CD_REGULAR:
            if self.C < 1:
                raise PreconditionError(f"C must be at least 1, got {self.C}")
            if self.in_degree_cap() < self.d:
                raise PreconditionError("In-degree cap C·d is below d")
